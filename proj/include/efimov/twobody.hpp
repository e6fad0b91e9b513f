#pragma once

#include <complex>

namespace efimov::twobody {

// Rank-one Yamaguchi interaction lambda * g(q) g(q'), g(q) = 1/(beta^2 + q^2).
// Units hbar = m = 1; a positive coupling is attractive.
struct PotentialParams {
  double coupling = 0.0;  // lambda
  double range = 0.0;     // beta, momentum scale of the form factor

  void validate() const;
};

// Low-energy parameters. inv_a = 0 encodes unitarity.
struct EreParams {
  double inv_a = 0.0;
  double r0 = 0.0;
  double R0 = 0.0;  // range correction multiplying (3p^2/4 + alpha^2) in the trimer equation
};

struct DimerState {
  double kappa_d = 0.0;
  double energy = 0.0;  // -kappa_d^2
};

double form_factor(double q, double beta);

// (2pi)^-3 \int d^3q g(q)^2 / (q^2 + kappa^2) = 1 / (8 pi beta (beta + kappa)^2).
double h_bound(double kappa, double beta);

// Off-shell amplitude g(q) g(k) / (4 pi (1/lambda - h(k))) for a real (scattering)
// or positive-imaginary (bound-state) momentum k. Throws PoleError at the dimer pole.
std::complex<double> off_shell_amplitude(double q, std::complex<double> k,
                                         const PotentialParams& params);
// Fully off-shell form g(q) g(q') / (4 pi (1/lambda - h(k))) at energy k^2; symmetric in q, q'.
std::complex<double> off_shell_amplitude(double q, double q_prime, std::complex<double> k,
                                         const PotentialParams& params);

// Denominator 1/lambda - h(k) of the amplitude, continued to complex k with Im k >= 0.
std::complex<double> amplitude_denominator(std::complex<double> k, const PotentialParams& params);

// k cot(delta) as a function of k^2; k2 < 0 is the continuation to k = i kappa.
double k_cot_delta_k2(double k2, const PotentialParams& params);
inline double k_cot_delta(double k, const PotentialParams& params) {
  return k_cot_delta_k2(k * k, params);
}

// -1/a + r0 k^2 / 2 + shape * k^4 with shape = 4 pi / lambda. Identical to k_cot_delta_k2.
double ere_quartic(double k2, const EreParams& ere, const PotentialParams& params);
// Truncated effective-range form -1/a + r0 k^2 / 2.
double ere_quadratic(double k2, const EreParams& ere);
// Coefficient of k^4 in k cot(delta).
double shape_coefficient(const PotentialParams& params);

EreParams map_potential_to_ere(const PotentialParams& params);

// Inverse of the k = 0 relation on a shared beta; r0 and R0 of ere are ignored.
// Throws InfeasibleRangeError when beta/2 <= 1/a.
PotentialParams map_ere_to_potential(const EreParams& ere, double beta);

// Range parameter beta whose mapped potential reproduces both 1/a and r0
// (root of r0 beta^2 - 3 beta + 4/a = 0 with beta/2 > 1/a; the larger one when both qualify).
// Throws InfeasibleRangeError when no such beta exists.
double map_ere_to_range(double inv_a, double r0);

// Range correction from r0, a and beta: R0 = -(r0/2 - 3/(2 beta) + 2/(a beta^2)).
double range_correction(double inv_a, double r0, double beta);

// Positive root of 1/lambda = h_bound(kappa, beta). Throws NoDimerError when 1/a <= 0.
DimerState dimer_binding(const PotentialParams& params);

}  // namespace efimov::twobody
