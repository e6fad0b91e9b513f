#include "efimov/universality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "efimov/errors.hpp"

namespace efimov::universality {

namespace {

constexpr double kPi = std::numbers::pi;
// Cutoff ratios within this relative distance of a target count as that pair kind.
constexpr double kFactorMatch = 1e-3;

double s0_residual(double s) {
  return s * std::cosh(kPi * s / 2.0) - 8.0 / std::sqrt(3.0) * std::sinh(kPi * s / 6.0);
}

bool near(double x, double target) { return std::abs(x / target - 1.0) <= kFactorMatch; }

}  // namespace

double efimov_s0() {
  double lo = 0.5;
  double hi = 1.5;
  // residual < 0 at 0.5, > 0 at 1.5
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (s0_residual(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double energy_ratio_target() { return std::exp(2.0 * kPi / efimov_s0()); }

double momentum_ratio_target() { return std::exp(kPi / efimov_s0()); }

std::vector<double> scaling_ratios(const solver::TrimerSpectrum& spectrum) {
  if (spectrum.size() < 2)
    throw InsufficientDataError("scaling ratios need at least two levels, got " +
                                std::to_string(spectrum.size()));
  std::vector<double> ratios;
  for (std::size_t n = 0; n + 1 < spectrum.size(); ++n)
    ratios.push_back(spectrum.levels[n].energy / spectrum.levels[n + 1].energy);
  return ratios;
}

CutoffStudy cutoff_study(const std::vector<double>& cutoffs, const MeshOptions& options) {
  if (cutoffs.size() < 2) throw InsufficientDataError("cutoff study needs at least two cutoffs");

  CutoffStudy study;
  for (double cutoff : cutoffs) {
    const auto spec = kernels::KernelSpec::short_range(0.0, 0.0, cutoff);
    const auto mesh = solver::build_mesh(options.nodes, 1e-3 * cutoff, cutoff);
    auto spectrum = solver::find_levels(spec, mesh, {1e-4 * cutoff, cutoff}, options.max_levels);
    study.rows.push_back(CutoffRow{cutoff, std::move(spectrum)});
  }

  const double target = momentum_ratio_target();
  for (const auto& row : study.rows) {
    if (row.spectrum.size() < 2) {
      study.ratios_passed = false;
      continue;
    }
    for (std::size_t n = 0; n + 1 < row.spectrum.size(); ++n) {
      const double r = row.spectrum.levels[n].alpha / row.spectrum.levels[n + 1].alpha;
      study.momentum_ratios.push_back(r);
      if (std::abs(r / target - 1.0) > kRatioTolerance) study.ratios_passed = false;
    }
  }

  for (std::size_t i = 0; i < study.rows.size(); ++i) {
    for (std::size_t j = 0; j < study.rows.size(); ++j) {
      if (i == j) continue;
      const auto& a = study.rows[i];
      const auto& b = study.rows[j];
      const double factor = b.cutoff / a.cutoff;
      const bool log_periodic = near(factor, target);
      if (!log_periodic && !near(factor, 2.0)) continue;

      CutoffPair pair{a.cutoff, b.cutoff, factor,
                      log_periodic ? PairKind::LogPeriodic : PairKind::Doubling, 0.0, false};
      if (!a.spectrum.empty() && !b.spectrum.empty()) {
        const double a0 = a.spectrum.levels.front().alpha;
        const double b0 = b.spectrum.levels.front().alpha;
        if (log_periodic) {
          pair.metric = std::abs(b0 / factor - a0) / a0;
          pair.passed = pair.metric <= kLogPeriodicTolerance;
        } else {
          pair.metric = std::abs(b0 - a0) / a0;
          pair.passed = pair.metric > kNonUniquenessShift;
        }
      }
      if (!pair.passed) {
        (log_periodic ? study.log_periodicity_passed : study.non_uniqueness_passed) = false;
      }
      study.pairs.push_back(pair);
    }
  }
  return study;
}

BetaConvergence beta_convergence(const twobody::EreParams& ere, const std::vector<double>& betas,
                                 std::size_t level, double cutoff, const MeshOptions& options) {
  const auto mesh = solver::build_mesh(options.nodes, 1e-3 * cutoff, cutoff);
  const solver::AlphaRange range{1e-4 * cutoff, cutoff};

  BetaConvergence table;
  double previous = std::numeric_limits<double>::infinity();
  for (double beta : betas) {
    BetaRow row;
    row.beta = beta;
    twobody::PotentialParams potential;
    try {
      potential = twobody::map_ere_to_potential(ere, beta);
    } catch (const InfeasibleRangeError& e) {
      row.notice = std::string("skipped: ") + e.what();
      table.rows.push_back(row);
      continue;
    }
    row.feasible = true;
    row.coupling = potential.coupling;
    const auto mapped = twobody::map_potential_to_ere(potential);
    row.R0 = mapped.R0;
    row.R0_limit = -mapped.r0 / 2.0;

    const auto finite = kernels::KernelSpec::finite_range(potential, cutoff);
    const auto zero = kernels::KernelSpec::short_range(ere.inv_a, row.R0, cutoff);
    const auto fs = solver::find_levels(finite, mesh, {std::max(range.min, finite.threshold() * 1.0001), range.max},
                                        level + 1);
    const auto zs = solver::find_levels(zero, mesh, {std::max(range.min, zero.threshold() * 1.0001), range.max},
                                        level + 1);
    if (fs.size() <= level || zs.size() <= level) {
      row.notice = "level " + std::to_string(level) + " not found in alpha range";
      table.monotone = false;
      table.rows.push_back(row);
      continue;
    }
    row.alpha_finite = fs.levels[level].alpha;
    row.alpha_short = zs.levels[level].alpha;
    row.deviation = std::abs(fs.levels[level].energy - zs.levels[level].energy) /
                    std::abs(zs.levels[level].energy);
    if (!(row.deviation < previous)) table.monotone = false;
    previous = row.deviation;
    table.rows.push_back(row);
  }
  return table;
}

RatioCheck ratio_check(double inv_a, double R0, const MeshOptions& options) {
  const auto spec = kernels::KernelSpec::short_range(inv_a, R0);
  const double length = 1.0 / std::abs(R0);
  const solver::AlphaRange range{std::max(1e-6 * length, spec.threshold() * 1.0001), 10.0 * length};
  const auto mesh = solver::default_mesh(spec, range, options.nodes);

  RatioCheck check;
  check.spectrum = solver::find_levels(spec, mesh, range, options.max_levels);
  if (check.spectrum.size() < 3) return check;
  check.ratios = scaling_ratios(check.spectrum);
  const double target = energy_ratio_target();
  check.passed = true;
  for (std::size_t n = 1; n < check.ratios.size(); ++n) {
    const double dev = std::abs(check.ratios[n] / target - 1.0);
    check.deviations.push_back(dev);
    if (dev > kRatioTolerance) check.passed = false;
  }
  return check;
}

nlohmann::json to_json(const solver::TrimerSpectrum& spectrum) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    const auto& l = spectrum.levels[n];
    levels.push_back({{"level", n}, {"alpha", l.alpha}, {"energy", l.energy}, {"eta_residual", l.eta_residual}});
  }
  return levels;
}

nlohmann::json to_json(const CutoffStudy& study) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : study.rows) rows.push_back({{"cutoff", row.cutoff}, {"levels", to_json(row.spectrum)}});
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : study.pairs) {
    pairs.push_back({{"cutoff_a", p.cutoff_a},
                     {"cutoff_b", p.cutoff_b},
                     {"factor", p.factor},
                     {"kind", p.kind == PairKind::LogPeriodic ? "log_periodic" : "doubling"},
                     {"metric", p.metric},
                     {"passed", p.passed}});
  }
  return {{"rows", rows},
          {"pairs", pairs},
          {"momentum_ratios", study.momentum_ratios},
          {"momentum_ratio_target", momentum_ratio_target()},
          {"log_periodicity_passed", study.log_periodicity_passed},
          {"non_uniqueness_passed", study.non_uniqueness_passed},
          {"ratios_passed", study.ratios_passed}};
}

nlohmann::json to_json(const BetaConvergence& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"beta", r.beta},
                    {"feasible", r.feasible},
                    {"notice", r.notice},
                    {"coupling", r.coupling},
                    {"R0", r.R0},
                    {"R0_limit", r.R0_limit},
                    {"alpha_finite", r.alpha_finite},
                    {"alpha_short", r.alpha_short},
                    {"deviation", r.deviation}});
  }
  return {{"rows", rows}, {"monotone", table.monotone}};
}

nlohmann::json to_json(const RatioCheck& check) {
  return {{"s0", efimov_s0()},
          {"ratio_target", energy_ratio_target()},
          {"levels", to_json(check.spectrum)},
          {"ratios", check.ratios},
          {"deviations", check.deviations},
          {"passed", check.passed}};
}

}  // namespace efimov::universality
