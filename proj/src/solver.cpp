#include "efimov/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "efimov/errors.hpp"
#include "efimov/quadrature.hpp"

namespace efimov::solver {

namespace {

constexpr int kMaxPowerIterations = 100000;
constexpr double kPowerTolerance = 1e-11;
constexpr double kStaleTolerance = 1e-6;

SpectatorFunction normalized(std::vector<double> momenta, std::vector<double> values, double alpha) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  if (!(peak > 0.0)) throw NumericalFailure("eigenvector vanished");
  const double sign = values.front() < 0.0 ? -1.0 : 1.0;
  for (double& v : values) v *= sign / peak;
  return SpectatorFunction{std::move(momenta), std::move(values), alpha};
}

// k-th largest eigenvalue of the symmetric form.
double eta_at(const kernels::KernelSpec& spec, const MomentumMesh& mesh, double alpha, std::size_t k) {
  return eigenvalues(assemble(alpha, spec, mesh))[k];
}

}  // namespace

MomentumMesh build_mesh(std::size_t n, double scale, double cutoff) {
  if (n < kMinMeshSize)
    throw DomainError("mesh needs at least " + std::to_string(kMinMeshSize) + " nodes, got " +
                      std::to_string(n));
  if (!(scale > 0.0) || !(cutoff > scale) || !std::isfinite(cutoff))
    throw DomainError("mesh needs 0 < scale < cutoff");

  const quadrature::Rule& rule = quadrature::cached_gauss_legendre(n);
  // t in (0, t_max) maps onto (0, cutoff).
  const double t_max = cutoff / (scale + cutoff);
  MomentumMesh mesh;
  mesh.scale = scale;
  mesh.cutoff = cutoff;
  mesh.nodes.resize(n);
  mesh.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 0.5 * t_max * (rule.nodes[i] + 1.0);
    const double wt = 0.5 * t_max * rule.weights[i];
    const double one_minus = 1.0 - t;
    mesh.nodes[i] = scale * t / one_minus;
    mesh.weights[i] = wt * scale / (one_minus * one_minus);
  }
  return mesh;
}

KernelSystem assemble(double alpha, const kernels::KernelSpec& spec, const MomentumMesh& mesh) {
  if (!(alpha > 0.0)) throw DomainError("trial binding alpha must be positive");
  const auto n = static_cast<Eigen::Index>(mesh.size());
  KernelSystem sys;
  sys.alpha = alpha;
  sys.nodes = mesh.nodes;
  sys.denominators.resize(n);
  sys.back_transform.resize(n);
  Eigen::VectorXd c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = mesh.nodes[static_cast<std::size_t>(i)];
    sys.denominators[i] = kernels::denominator(p, alpha, spec);
    c[i] = std::sqrt(mesh.weights[static_cast<std::size_t>(i)]) * p;
    sys.back_transform[i] = 1.0 / (c[i] * std::sqrt(sys.denominators[i]));
  }

  sys.symmetric.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = mesh.nodes[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double pp = mesh.nodes[static_cast<std::size_t>(j)];
      const double s = c[i] * c[j] * kernels::symmetric_kernel(p, pp, alpha, spec) /
                       std::sqrt(sys.denominators[i] * sys.denominators[j]);
      sys.symmetric(i, j) = s;
      sys.symmetric(j, i) = s;
    }
  }
  // M = B^{-1} S B with B = diag(c_i sqrt(D_i)).
  sys.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      sys.matrix(i, j) = sys.back_transform[i] * sys.symmetric(i, j) / sys.back_transform[j];
  return sys;
}

PrincipalSolution principal_eigenvalue(const KernelSystem& system) {
  const Eigen::Index n = system.matrix.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  double eta = 0.0;
  for (int it = 1; it <= kMaxPowerIterations; ++it) {
    const Eigen::VectorXd mv = system.matrix * v;
    const double next = mv.cwiseAbs().maxCoeff();
    if (!(next > 0.0) || !std::isfinite(next)) throw NumericalFailure("power iteration broke down");
    eta = next;
    const double residual = (mv - eta * v).cwiseAbs().maxCoeff();
    v = mv / eta;
    if (residual <= kPowerTolerance * eta) {
      std::vector<double> values(v.data(), v.data() + n);
      return PrincipalSolution{eta, normalized(system.nodes, std::move(values), system.alpha), it};
    }
  }
  throw NumericalFailure("power iteration did not converge in " +
                         std::to_string(kMaxPowerIterations) + " iterations");
}

std::vector<double> eigenvalues(const KernelSystem& system) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(system.symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigensolver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TrimerSpectrum find_levels(const kernels::KernelSpec& spec, const MomentumMesh& mesh,
                           AlphaRange range, std::size_t max_levels) {
  if (!(range.min > 0.0) || !(range.max > range.min))
    throw DomainError("alpha range must satisfy 0 < min < max");
  const double threshold = spec.threshold();
  if (!(range.min > threshold))
    throw ThresholdViolation("alpha_min = " + std::to_string(range.min) +
                             " is not above the two-body threshold kappa_d = " +
                             std::to_string(threshold));

  TrimerSpectrum spectrum;
  if (max_levels == 0) return spectrum;

  const double decades = std::log10(range.max / range.min);
  const auto points = static_cast<std::size_t>(std::ceil(kScanPointsPerDecade * decades)) + 1;
  std::vector<double> grid(points);
  std::vector<std::vector<double>> etas(points);
  for (std::size_t g = 0; g < points; ++g) {
    const double t = static_cast<double>(g) / static_cast<double>(points - 1);
    grid[g] = range.min * std::pow(range.max / range.min, t);
    etas[g] = eigenvalues(assemble(grid[g], spec, mesh));
  }
  grid.back() = range.max;

  const std::size_t n = mesh.size();
  for (std::size_t k = 0; k < n && spectrum.size() < max_levels; ++k) {
    if (etas.front()[k] <= 1.0) break;    // no k-th level in range, nor any shallower one
    if (etas.back()[k] > 1.0) continue;   // k-th level deeper than range.max

    // Deepest crossing of eta_k through one, scanning down from range.max.
    std::size_t hi = points - 1;
    while (hi > 0 && etas[hi - 1][k] <= 1.0) --hi;
    double lo_a = grid[hi - 1];
    double hi_a = grid[hi];
    double best_a = hi_a;
    double best_res = std::abs(etas[hi][k] - 1.0);
    if (std::abs(etas[hi - 1][k] - 1.0) < best_res) {
      best_a = lo_a;
      best_res = std::abs(etas[hi - 1][k] - 1.0);
    }
    for (int it = 0; it < 200 && best_res > 0.01 * kEtaTolerance; ++it) {
      const double mid = std::sqrt(lo_a * hi_a);
      if (!(mid > lo_a && mid < hi_a)) break;
      const double eta = eta_at(spec, mesh, mid, k);
      const double res = std::abs(eta - 1.0);
      if (res < best_res) {
        best_res = res;
        best_a = mid;
      }
      (eta > 1.0 ? lo_a : hi_a) = mid;
    }
    if (!spectrum.empty() && !(best_a < spectrum.levels.back().alpha)) continue;
    spectrum.levels.push_back(Level{best_a, -best_a * best_a, best_res});
  }
  return spectrum;
}

SpectatorFunction spectator(const kernels::KernelSpec& spec, const MomentumMesh& mesh, double alpha) {
  const KernelSystem sys = assemble(alpha, spec, mesh);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sys.symmetric);
  if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigensolver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  Eigen::Index k = 0;
  (ev.array() - 1.0).abs().minCoeff(&k);
  if (std::abs(ev[k] - 1.0) > kStaleTolerance)
    throw StaleLevelError("alpha = " + std::to_string(alpha) +
                          " is not a bound state (closest eigenvalue " + std::to_string(ev[k]) + ")");
  if (k == ev.size() - 1) return principal_eigenvalue(sys).phi;

  const Eigen::VectorXd phi = solver.eigenvectors().col(k).cwiseProduct(sys.back_transform);
  std::vector<double> values(phi.data(), phi.data() + phi.size());
  return normalized(sys.nodes, std::move(values), alpha);
}

double default_cutoff(const kernels::KernelSpec& spec, double alpha_max) {
  if (spec.cutoff()) return *spec.cutoff();
  double length_scale = 0.0;
  if (const auto* fr = std::get_if<kernels::FiniteRange>(&spec.model()))
    length_scale = fr->params.range;
  else if (const auto* sr = std::get_if<kernels::ShortRange>(&spec.model()))
    length_scale = std::abs(sr->ere.R0) > 0.0 ? 1.0 / std::abs(sr->ere.R0) : 0.0;
  return 1e4 * std::max(alpha_max, length_scale);
}

MomentumMesh default_mesh(const kernels::KernelSpec& spec, AlphaRange range, std::size_t n) {
  const double cutoff = default_cutoff(spec, range.max);
  double scale = std::sqrt(range.min * range.max);
  if (spec.cutoff()) scale = std::min(scale, 1e-3 * cutoff);
  return build_mesh(n, std::min(scale, 0.5 * cutoff), cutoff);
}

}  // namespace efimov::solver
