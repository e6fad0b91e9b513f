#include <cmath>

#include "doctest.h"
#include "efimov/errors.hpp"
#include "efimov/universality.hpp"
#include "oracles.hpp"

using namespace efimov;
using namespace efimov::universality;
using doctest::Approx;

namespace {
constexpr double kPi = oracle::kPi;

solver::TrimerSpectrum spectrum_of(std::initializer_list<double> alphas) {
  solver::TrimerSpectrum s;
  for (double a : alphas) s.levels.push_back({a, -a * a, 0.0});
  return s;
}
}  // namespace

TEST_CASE("Efimov exponent") {
  const double s0 = efimov_s0();
  CHECK(std::abs(s0 - 1.00624) <= 1e-5);
  CHECK(s0 > 1.0);
  CHECK(s0 < 1.01);
  CHECK(std::abs(s0 * std::cosh(kPi * s0 / 2.0) - 8.0 / std::sqrt(3.0) * std::sinh(kPi * s0 / 6.0)) <= 1e-10);
  CHECK(std::abs(energy_ratio_target() - 515.03) <= 0.1);
  CHECK(std::abs(momentum_ratio_target() - 22.694) <= 0.005);
  CHECK(momentum_ratio_target() * momentum_ratio_target() == Approx(energy_ratio_target()).epsilon(1e-14));
}

TEST_CASE("scaling ratios") {
  const auto ratios = scaling_ratios(spectrum_of({4.0, 2.0, 0.5}));
  REQUIRE(ratios.size() == 2);
  CHECK(ratios[0] == 4.0);
  CHECK(ratios[1] == 16.0);
  CHECK_THROWS_AS(scaling_ratios(spectrum_of({1.0})), InsufficientDataError);
  CHECK_THROWS_AS(scaling_ratios(spectrum_of({})), InsufficientDataError);
}

TEST_CASE("geometric spectrum of the range-corrected model") {
  const RatioCheck check = ratio_check(0.0, 1.0);
  REQUIRE(check.spectrum.size() >= 3);
  CHECK(check.passed);
  for (double r : check.ratios) CHECK(r > 1.0);
  REQUIRE(check.deviations.size() >= 2);
  for (double d : check.deviations) CHECK(d <= kRatioTolerance);
  // convergence toward the target with level index
  for (std::size_t n = 1; n < check.deviations.size(); ++n) CHECK(check.deviations[n] <= check.deviations[n - 1]);

  const auto j = to_json(check);
  CHECK(j.contains("levels"));
  CHECK(j.contains("ratios"));
  CHECK(j.contains("passed"));
}

TEST_CASE("cutoff study") {
  const double factor = 22.694;
  const CutoffStudy study = cutoff_study({1e3, 2e3, factor * 1e3}, {200, 3});
  REQUIRE(study.rows.size() == 3);
  REQUIRE(study.pairs.size() == 2);
  for (const auto& pair : study.pairs) {
    if (pair.kind == PairKind::LogPeriodic) {
      CHECK(pair.cutoff_b / pair.cutoff_a == Approx(factor));
      CHECK(pair.metric <= kLogPeriodicTolerance);
    } else {
      CHECK(pair.factor == 2.0);
      CHECK(pair.metric > kNonUniquenessShift);
    }
  }
  for (double r : study.momentum_ratios) CHECK(std::abs(r / momentum_ratio_target() - 1.0) <= kRatioTolerance);
  CHECK(study.passed());

  // levels scale with the cutoff: the spectrum of the rescaled cutoff is the original times the factor
  const auto& a = study.rows[0].spectrum;
  const auto& b = study.rows[2].spectrum;
  REQUIRE(a.size() >= 2);
  REQUIRE(b.size() >= 2);
  CHECK(b.levels[0].alpha / factor == Approx(a.levels[0].alpha).epsilon(kLogPeriodicTolerance));

  CHECK_THROWS_AS(cutoff_study({1e3}), InsufficientDataError);
}

TEST_CASE("finite-range convergence onto the zero-range equation") {
  twobody::EreParams unitary;
  const BetaConvergence table = beta_convergence(unitary, {1e2, 1e3, 1e4}, 0, 10.0, {200, 1});
  REQUIRE(table.rows.size() == 3);
  CHECK(table.monotone);
  double prev_gap = std::numeric_limits<double>::infinity();
  for (const auto& row : table.rows) {
    CHECK(row.feasible);
    CHECK(row.notice.empty());
    CHECK(row.alpha_finite > 0.0);
    CHECK(row.coupling == Approx(8.0 * kPi * row.beta * row.beta * row.beta));
    // R0(beta) -> -r0/2 = -3/(2 beta)
    CHECK(row.R0_limit == Approx(-1.5 / row.beta).epsilon(1e-14));
    const double gap = std::abs(row.R0 - row.R0_limit);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }

  SUBCASE("deterministic") {
    const BetaConvergence again = beta_convergence(unitary, {1e2, 1e3, 1e4}, 0, 10.0, {200, 1});
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      CHECK(again.rows[i].alpha_finite == table.rows[i].alpha_finite);
      CHECK(again.rows[i].deviation == table.rows[i].deviation);
    }
  }

  SUBCASE("infeasible range parameters are skipped") {
    twobody::EreParams bound;
    bound.inv_a = 1.0;
    const BetaConvergence t = beta_convergence(bound, {1.0, 2.0}, 0, 10.0, {64, 1});
    REQUIRE(t.rows.size() == 2);
    for (const auto& row : t.rows) {
      CHECK_FALSE(row.feasible);
      CHECK(row.notice.find("skipped") == 0);
    }
  }

  const auto j = to_json(table);
  CHECK(j.contains("rows"));
  CHECK(j.contains("monotone"));
}
