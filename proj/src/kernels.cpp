#include "efimov/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "efimov/errors.hpp"
#include "efimov/quadrature.hpp"

namespace efimov::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// (1/(2 pi^2)) \int_{-1}^{1} dx / (product of the three linear factors) at a fixed order.
double finite_range_angular_order(double p, double pp, double alpha, double beta,
                                  const quadrature::Rule& rule) {
  const double b2 = beta * beta;
  const double a = b2 + pp * pp + 0.25 * p * p;
  const double b = b2 + p * p + 0.25 * pp * pp;
  const double c = p * p + pp * pp + alpha * alpha;
  const double ppx = p * pp;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = ppx * rule.nodes[i];
    sum += rule.weights[i] / ((a + t) * (b + t) * (c + t));
  }
  return sum / (2.0 * kPi * kPi);
}

// Order 32, doubled until successive estimates agree to 1e-10.
double finite_range_angular(double p, double pp, double alpha, double beta) {
  std::size_t order = 32;
  double prev = finite_range_angular_order(p, pp, alpha, beta, quadrature::cached_gauss_legendre(order));
  while (order < 4096) {
    order *= 2;
    const double next =
        finite_range_angular_order(p, pp, alpha, beta, quadrature::cached_gauss_legendre(order));
    if (std::abs(next - prev) <= 1e-10 * std::abs(next)) return next;
    prev = next;
  }
  throw NumericalFailure("angular quadrature of the finite-range kernel did not converge");
}

// short_range_kernel / p'^2.
double short_range_symmetric(double p, double pp, double alpha) {
  const double a2 = alpha * alpha;
  if (p <= 1e-8 * pp || pp <= 1e-8 * p) {
    const double q = std::max(p, pp);
    return 4.0 / (kPi * (q * q + a2));
  }
  const double lower = p * p + pp * pp - p * pp + a2;
  return 2.0 / kPi * std::log1p(2.0 * p * pp / lower) / (p * pp);
}

void require_positive_momenta(double p, double pp) {
  if (!(p > 0.0) || !(pp > 0.0))
    throw DomainError("kernel momenta must be positive");
}

}  // namespace

KernelSpec::KernelSpec(Model model, std::optional<double> cutoff)
    : model_(std::move(model)), cutoff_(cutoff) {
  if (cutoff_ && !(*cutoff_ > 0.0))
    throw DomainError("momentum cutoff must be positive, got " + std::to_string(*cutoff_));
  std::visit(overloaded{
                 [](const FiniteRange& m) { m.params.validate(); },
                 [this](const ShortRange& m) {
                   if (m.ere.R0 == 0.0 && !cutoff_)
                     throw DomainError(
                         "zero-range model with R0 = 0 needs an explicit momentum cutoff");
                 },
             },
             model_);
}

double KernelSpec::inv_a() const {
  return std::visit(overloaded{
                        [](const FiniteRange& m) { return twobody::map_potential_to_ere(m.params).inv_a; },
                        [](const ShortRange& m) { return m.ere.inv_a; },
                    },
                    model_);
}

double KernelSpec::threshold() const {
  return std::visit(
      overloaded{
          [](const FiniteRange& m) {
            if (twobody::map_potential_to_ere(m.params).inv_a <= 0.0) return 0.0;
            return twobody::dimer_binding(m.params).kappa_d;
          },
          [](const ShortRange& m) {
            const double inv_a = m.ere.inv_a;
            const double r = m.ere.R0;
            if (inv_a <= 0.0) return 0.0;
            // Positive root of R0 k^2 + k - 1/a.
            if (r == 0.0) return inv_a;
            const double disc = 1.0 + 4.0 * r * inv_a;
            if (disc < 0.0) return 0.0;
            return 2.0 * inv_a / (1.0 + std::sqrt(disc));
          },
      },
      model_);
}

double limit_identity(double beta, double kappa) {
  if (!(beta > 0.0) || !(kappa >= 0.0)) throw DomainError("limit_identity needs beta > 0, kappa >= 0");
  // beta/2 - beta^3 / (2 (beta + kappa)^2) without the cancellation.
  const double s = beta + kappa;
  return beta * kappa * (2.0 * beta + kappa) / (2.0 * s * s);
}

double denominator(double p, double alpha, const KernelSpec& spec) {
  const double k1 = subsystem_momentum(p, alpha);
  const double d = std::visit(
      overloaded{
          [k1](const FiniteRange& m) {
            const double beta = m.params.range;
            const double b4 = 4.0 * kPi * beta * beta * beta * beta;
            // 1/lambda - h(k1) = [4 pi beta^4/lambda - beta/2 + (beta/2 - 4 pi beta^4 h)] / 4 pi beta^4
            return (b4 / m.params.coupling - beta / 2.0 + limit_identity(beta, k1)) / b4;
          },
          [k1](const ShortRange& m) { return -m.ere.inv_a + m.ere.R0 * k1 * k1 + k1; },
      },
      spec.model());
  if (!(d > 0.0))
    throw ThresholdViolation("trimer denominator not positive at p = " + std::to_string(p) +
                             ", alpha = " + std::to_string(alpha) + " (trial binding too shallow)");
  return d;
}

double short_range_kernel(double p, double pp, double alpha) {
  require_positive_momenta(p, pp);
  return pp * pp * short_range_symmetric(p, pp, alpha);
}

double finite_range_kernel(double p, double pp, double alpha, const twobody::PotentialParams& params) {
  require_positive_momenta(p, pp);
  return pp * pp * finite_range_angular(p, pp, alpha, params.range);
}

double symmetric_kernel(double p, double pp, double alpha, const KernelSpec& spec) {
  return std::visit(overloaded{
                        [&](const FiniteRange& m) { return finite_range_angular(p, pp, alpha, m.params.range); },
                        [&](const ShortRange&) { return short_range_symmetric(p, pp, alpha); },
                    },
                    spec.model());
}

double kernel(double p, double pp, double alpha, const KernelSpec& spec) {
  require_positive_momenta(p, pp);
  return pp * pp * symmetric_kernel(p, pp, alpha, spec);
}

double reconstruct_wavefunction(double q, double p, double cos_theta, double alpha,
                                const SpectatorFunction& phi, const KernelSpec& spec) {
  if (!(cos_theta >= -1.0 && cos_theta <= 1.0)) throw DomainError("cos_theta outside [-1, 1]");
  auto g = [&spec](double k) {
    if (const auto* fr = std::get_if<FiniteRange>(&spec.model()))
      return twobody::form_factor(k, fr->params.range);
    return 1.0;
  };
  auto norm = [](double x2) { return std::sqrt(std::max(x2, 0.0)); };
  const double qp = q * p * cos_theta;
  const double pair2 = norm(0.5625 * p * p + 0.25 * q * q + 0.75 * qp);   // |-3p/4 - q/2|
  const double spec2 = norm(q * q + 0.25 * p * p - qp);                   // |q - p/2|
  const double pair3 = norm(0.5625 * p * p + 0.25 * q * q - 0.75 * qp);   // |3p/4 - q/2|
  const double spec3 = norm(q * q + 0.25 * p * p + qp);                   // |q + p/2|
  const double numerator = g(q) * phi(p) + g(pair2) * phi(spec2) + g(pair3) * phi(spec3);
  return numerator / (q * q + 0.75 * p * p + alpha * alpha);
}

}  // namespace efimov::kernels
