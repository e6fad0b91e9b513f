#include "efimov/twobody.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "efimov/errors.hpp"

namespace efimov::twobody {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_range(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw DomainError("form factor range beta must be positive, got " + std::to_string(beta));
}

}  // namespace

void PotentialParams::validate() const {
  if (!(coupling > 0.0) || !std::isfinite(coupling))
    throw DomainError("coupling lambda must be positive, got " + std::to_string(coupling));
  require_positive_range(range);
}

double form_factor(double q, double beta) {
  require_positive_range(beta);
  return 1.0 / (beta * beta + q * q);
}

double h_bound(double kappa, double beta) {
  require_positive_range(beta);
  if (!(kappa >= 0.0)) throw DomainError("h_bound needs kappa >= 0");
  const double s = beta + kappa;
  return 1.0 / (8.0 * kPi * beta * s * s);
}

std::complex<double> amplitude_denominator(std::complex<double> k, const PotentialParams& params) {
  params.validate();
  const double beta = params.range;
  // Continuation of h_bound through kappa = -i k.
  const std::complex<double> s = beta - std::complex<double>(0.0, 1.0) * k;
  const std::complex<double> h = 1.0 / (8.0 * kPi * beta * s * s);
  return 1.0 / params.coupling - h;
}

std::complex<double> off_shell_amplitude(double q, double q_prime, std::complex<double> k,
                                         const PotentialParams& params) {
  const std::complex<double> denom = amplitude_denominator(k, params);
  if (std::abs(denom) <= 64.0 * std::numeric_limits<double>::epsilon() / params.coupling) {
    double kappa_d = 0.0;
    if (map_potential_to_ere(params).inv_a > 0.0) kappa_d = dimer_binding(params).kappa_d;
    throw PoleError("amplitude evaluated at the two-body pole", kappa_d);
  }
  return form_factor(q, params.range) * form_factor(q_prime, params.range) / (4.0 * kPi * denom);
}

std::complex<double> off_shell_amplitude(double q, std::complex<double> k,
                                         const PotentialParams& params) {
  const std::complex<double> denom = amplitude_denominator(k, params);
  if (std::abs(denom) <= 64.0 * std::numeric_limits<double>::epsilon() / params.coupling) {
    double kappa_d = 0.0;
    if (map_potential_to_ere(params).inv_a > 0.0) kappa_d = dimer_binding(params).kappa_d;
    throw PoleError("amplitude evaluated at the two-body pole", kappa_d);
  }
  const double beta = params.range;
  const std::complex<double> gk = 1.0 / (beta * beta + k * k);
  return form_factor(q, beta) * gk / (4.0 * kPi * denom);
}

double k_cot_delta_k2(double k2, const PotentialParams& params) {
  params.validate();
  const double beta = params.range;
  const double b2k2 = beta * beta + k2;
  return 4.0 * kPi / params.coupling * b2k2 * b2k2 - beta / 2.0 + k2 / (2.0 * beta);
}

double shape_coefficient(const PotentialParams& params) {
  params.validate();
  return 4.0 * kPi / params.coupling;
}

double ere_quadratic(double k2, const EreParams& ere) { return -ere.inv_a + 0.5 * ere.r0 * k2; }

double ere_quartic(double k2, const EreParams& ere, const PotentialParams& params) {
  return ere_quadratic(k2, ere) + shape_coefficient(params) * k2 * k2;
}

double range_correction(double inv_a, double r0, double beta) {
  require_positive_range(beta);
  const double r = -(r0 / 2.0 - 3.0 / (2.0 * beta) + 2.0 * inv_a / (beta * beta));
  return r == 0.0 ? 0.0 : r;
}

EreParams map_potential_to_ere(const PotentialParams& params) {
  params.validate();
  const double beta = params.range;
  const double lam = params.coupling;
  EreParams ere;
  ere.inv_a = beta / 2.0 - 4.0 * kPi * beta * beta * beta * beta / lam;
  ere.r0 = 16.0 * kPi * beta * beta / lam + 1.0 / beta;
  ere.R0 = range_correction(ere.inv_a, ere.r0, beta);
  return ere;
}

PotentialParams map_ere_to_potential(const EreParams& ere, double beta) {
  require_positive_range(beta);
  const double gap = beta / 2.0 - ere.inv_a;
  if (!(gap > 0.0))
    throw InfeasibleRangeError("no attractive Yamaguchi potential with beta = " +
                               std::to_string(beta) + " reproduces 1/a = " +
                               std::to_string(ere.inv_a) + " (needs beta/2 > 1/a)");
  return PotentialParams{4.0 * kPi * beta * beta * beta * beta / gap, beta};
}

double map_ere_to_range(double inv_a, double r0) {
  if (!(r0 > 0.0))
    throw InfeasibleRangeError("Yamaguchi potentials have r0 > 0, got r0 = " + std::to_string(r0));
  const double disc = 9.0 - 16.0 * r0 * inv_a;
  if (disc < 0.0)
    throw InfeasibleRangeError("no Yamaguchi range reproduces 1/a = " + std::to_string(inv_a) +
                               " with r0 = " + std::to_string(r0));
  const double root = std::sqrt(disc);
  for (double beta : {(3.0 + root) / (2.0 * r0), (3.0 - root) / (2.0 * r0)}) {
    if (beta > 0.0 && beta / 2.0 > inv_a) return beta;
  }
  throw InfeasibleRangeError("no attractive Yamaguchi potential reproduces 1/a = " +
                             std::to_string(inv_a) + " with r0 = " + std::to_string(r0));
}

DimerState dimer_binding(const PotentialParams& params) {
  params.validate();
  if (!(map_potential_to_ere(params).inv_a > 0.0))
    throw NoDimerError("potential does not bind a dimer (1/a <= 0)");

  const double inv_lambda = 1.0 / params.coupling;
  const double beta = params.range;
  // f increases monotonically in kappa and is negative at kappa = 0.
  auto f = [&](double kappa) { return inv_lambda - h_bound(kappa, beta); };

  double lo = 0.0;
  double hi = beta;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    (fm < 0.0 ? lo : hi) = mid;
  }
  const double kappa = 0.5 * (lo + hi);
  return DimerState{kappa, -kappa * kappa};
}

}  // namespace efimov::twobody
