#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "efimov/errors.hpp"
#include "efimov/twobody.hpp"
#include "oracles.hpp"

using namespace efimov;
using namespace efimov::twobody;
using doctest::Approx;

namespace {
constexpr double kPi = oracle::kPi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_CASE("form factor") {
  CHECK(form_factor(0.0, 1.0) == 1.0);
  CHECK(form_factor(1.0, 1.0) == 0.5);
  CHECK(form_factor(3.0, 2.0) == Approx(1.0 / 13.0).epsilon(1e-15));
  CHECK(form_factor(-3.0, 2.0) == form_factor(3.0, 2.0));
  CHECK_THROWS_AS(form_factor(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(form_factor(1.0, -1.0), DomainError);
}

TEST_CASE("h_bound closed form against radial quadrature") {
  SUBCASE("tabulated points") {
    CHECK(rel(h_bound(0.0, 1.0), oracle::h_bound(0.0, 1.0)) < 1e-10);
    CHECK(rel(h_bound(0.0, 1.0), 1.0 / (8.0 * kPi)) < 1e-15);
    CHECK(rel(h_bound(1.0, 1.0), oracle::h_bound(1.0, 1.0)) < 1e-10);
    CHECK(rel(h_bound(1.0, 1.0), 1.0 / (32.0 * kPi)) < 1e-15);
    CHECK(rel(h_bound(0.0, 2.0), oracle::h_bound(0.0, 2.0)) < 1e-10);
    CHECK(rel(h_bound(0.0, 2.0), 1.0 / (64.0 * kPi)) < 1e-15);
  }
  SUBCASE("kappa/beta sweep") {
    for (double beta : {0.3, 1.0, 7.0}) {
      for (double x = 0.0; x <= 100.0; x += 2.5) {
        CHECK(rel(h_bound(x * beta, beta), oracle::h_bound(x * beta, beta)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("h_bound decreases in kappa and in beta") {
  for (double beta = 0.5; beta < 5.0; beta += 0.5) {
    double prev = h_bound(0.0, beta);
    for (double kappa = 0.1; kappa < 20.0; kappa += 0.1) {
      const double h = h_bound(kappa, beta);
      CHECK(h < prev);
      prev = h;
    }
  }
  for (double kappa : {0.0, 0.5, 3.0}) {
    double prev = h_bound(kappa, 0.1);
    for (double beta = 0.2; beta < 10.0; beta += 0.1) {
      const double h = h_bound(kappa, beta);
      CHECK(h < prev);
      prev = h;
    }
  }
}

TEST_CASE("off-shell amplitude") {
  const PotentialParams unitary{8.0 * kPi, 1.0};

  SUBCASE("symmetric in the two momenta at fixed energy") {
    for (double k : {0.7, 0.3, 2.0}) {
      const auto a = off_shell_amplitude(0.3, 0.7, k, unitary);
      const auto b = off_shell_amplitude(0.7, 0.3, k, unitary);
      CHECK(std::abs(a - b) <= 1e-15 * std::abs(a));
    }
    // half-off-shell form is the k' = k slice
    const auto half = off_shell_amplitude(0.3, 0.7, unitary);
    const auto full = off_shell_amplitude(0.3, 0.7, 0.7, unitary);
    CHECK(std::abs(half - full) <= 1e-15 * std::abs(full));
  }

  SUBCASE("diverges on shell at unitarity as k -> 0") {
    double prev = 0.0;
    for (double k : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const double mag = std::abs(off_shell_amplitude(k, k, unitary));
      CHECK(mag > 5.0 * prev);
      prev = mag;
    }
    // |a(k, k)| -> |1/(k cot delta - i k)| ~ 1/k
    CHECK(std::abs(off_shell_amplitude(1e-5, 1e-5, unitary)) * 1e-5 == Approx(1.0).epsilon(1e-4));
  }

  SUBCASE("pole at the dimer") {
    const PotentialParams bound{32.0 * kPi, 1.0};
    const double kd = dimer_binding(bound).kappa_d;
    const std::complex<double> i(0.0, 1.0);
    CHECK(amplitude_denominator(i * (kd * 0.999), bound).real() < 0.0);
    CHECK(amplitude_denominator(i * (kd * 1.001), bound).real() > 0.0);
    try {
      (void)off_shell_amplitude(0.5, i * 1.0, bound);
      FAIL("expected PoleError");
    } catch (const PoleError& e) {
      CHECK(e.kappa_d() == Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("k cot delta") {
  const PotentialParams unitary{8.0 * kPi, 1.0};
  CHECK(std::abs(k_cot_delta(0.0, unitary)) < 1e-15);
  // k^2 coefficient 8 pi beta^2 / lambda + 1/(2 beta) = 3/2
  const double h = 1e-3;
  const double c2 = (k_cot_delta_k2(h, unitary) - k_cot_delta_k2(-h, unitary)) / (2.0 * h);
  CHECK(c2 == Approx(1.5).epsilon(1e-9));
  CHECK(map_potential_to_ere(unitary).r0 == Approx(3.0).epsilon(1e-15));

  const PotentialParams bound{32.0 * kPi, 1.0};
  CHECK(k_cot_delta_k2(-1.0, bound) == Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("quartic effective-range form is exact") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> log_beta(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int draw = 0; draw < 50; ++draw) {
    const double beta = std::pow(10.0, log_beta(rng));
    const double lambda = 4.0 * kPi * std::pow(beta, 3) * std::pow(10.0, 2.0 * unit(rng) - 1.0);
    const double k = 3.0 * beta * unit(rng);
    const PotentialParams p{lambda, beta};
    const EreParams ere = map_potential_to_ere(p);
    const double exact = k_cot_delta(k, p);
    const double quartic = ere_quartic(k * k, ere, p);
    const double scale = std::abs(ere.inv_a) + 0.5 * ere.r0 * k * k + shape_coefficient(p) * std::pow(k, 4);
    CHECK(std::abs(exact - quartic) <= 1e-12 * scale);
  }
}

TEST_CASE("potential <-> effective-range maps") {
  SUBCASE("unitarity") {
    const EreParams ere = map_potential_to_ere({8.0 * kPi, 1.0});
    CHECK(std::abs(ere.inv_a) < 1e-15);
    CHECK(ere.r0 == Approx(3.0).epsilon(1e-15));
    CHECK(std::abs(ere.R0) < 1e-15);
  }
  SUBCASE("bound dimer") {
    const EreParams ere = map_potential_to_ere({32.0 * kPi, 1.0});
    CHECK(ere.inv_a == Approx(0.375).epsilon(1e-15));
    CHECK(ere.r0 == Approx(1.5).epsilon(1e-15));
  }
  SUBCASE("inverse map") {
    EreParams ere;
    ere.inv_a = 0.0;
    CHECK(map_ere_to_potential(ere, 1.0).coupling == Approx(8.0 * kPi).epsilon(1e-15));
    ere.inv_a = 0.375;
    CHECK(map_ere_to_potential(ere, 1.0).coupling == Approx(32.0 * kPi).epsilon(1e-15));
    ere.inv_a = 1.0;
    CHECK_THROWS_AS(map_ere_to_potential(ere, 1.0), InfeasibleRangeError);
    ere.inv_a = 0.5;
    CHECK_THROWS_AS(map_ere_to_potential(ere, 1.0), InfeasibleRangeError);
  }
  SUBCASE("round trips and range-correction consistency") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      const double beta = std::pow(10.0, 4.0 * u(rng) - 2.0);
      EreParams ere;
      ere.inv_a = beta * (u(rng) - 0.5) * 4.0;
      if (!(beta / 2.0 > ere.inv_a)) {
        CHECK_THROWS_AS(map_ere_to_potential(ere, beta), InfeasibleRangeError);
        continue;
      }
      const PotentialParams p = map_ere_to_potential(ere, beta);
      const EreParams back = map_potential_to_ere(p);
      CHECK(std::abs(back.inv_a - ere.inv_a) <= 1e-12 * beta);
      CHECK(map_ere_to_potential(back, beta).coupling == Approx(p.coupling).epsilon(1e-12));
      CHECK(std::abs(-back.R0 - (back.r0 / 2.0 - 3.0 / (2.0 * beta) + 2.0 * back.inv_a / (beta * beta))) <=
            1e-12 * (back.r0 + 3.0 / beta));
    }
  }
  SUBCASE("beta from (1/a, r0)") {
    for (double inv_a : {-0.4, 0.0, 0.2}) {
      const PotentialParams p = map_ere_to_potential({inv_a, 0.0, 0.0}, 1.7);
      const EreParams ere = map_potential_to_ere(p);
      CHECK(map_ere_to_range(ere.inv_a, ere.r0) == Approx(1.7).epsilon(1e-12));
    }
    CHECK_THROWS_AS(map_ere_to_range(0.0, -1.0), InfeasibleRangeError);
    CHECK_THROWS_AS(map_ere_to_range(10.0, 1.0), InfeasibleRangeError);
  }
}

TEST_CASE("dimer binding") {
  const PotentialParams bound{32.0 * kPi, 1.0};
  const DimerState d = dimer_binding(bound);
  CHECK(std::abs(d.kappa_d - 1.0) <= 1e-10);
  CHECK(std::abs(1.0 / bound.coupling - h_bound(d.kappa_d, 1.0)) <= 1e-10 / bound.coupling);
  CHECK(d.energy == Approx(-1.0).epsilon(1e-10));
  // bound-state pole: k cot delta = -kappa_d at k = i kappa_d
  CHECK(k_cot_delta_k2(-d.kappa_d * d.kappa_d, bound) == Approx(-d.kappa_d).epsilon(1e-10));

  CHECK_THROWS_AS(dimer_binding({8.0 * kPi, 1.0}), NoDimerError);
  CHECK_THROWS_AS(dimer_binding({4.0 * kPi, 1.0}), NoDimerError);

  SUBCASE("deep and shallow dimers") {
    for (double inv_a : {1e-4, 0.01, 0.3, 0.49}) {
      const PotentialParams p = map_ere_to_potential({inv_a, 0.0, 0.0}, 1.0);
      const DimerState s = dimer_binding(p);
      CHECK(k_cot_delta_k2(-s.kappa_d * s.kappa_d, p) == Approx(-s.kappa_d).epsilon(1e-9));
    }
  }
}
