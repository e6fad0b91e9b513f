#pragma once

#include <cmath>
#include <optional>
#include <variant>

#include "efimov/spectator.hpp"
#include "efimov/twobody.hpp"

namespace efimov::kernels {

struct FiniteRange {
  twobody::PotentialParams params;
};

// Zero-range limit with range correction R0 (ere.r0 is informational only).
struct ShortRange {
  twobody::EreParams ere;
};

// Which trimer equation to solve. For FiniteRange the cutoff only truncates the
// momentum mesh; for ShortRange with R0 = 0 it is the physical regulator and is required.
class KernelSpec {
 public:
  using Model = std::variant<FiniteRange, ShortRange>;

  KernelSpec(Model model, std::optional<double> cutoff = std::nullopt);

  static KernelSpec finite_range(twobody::PotentialParams params,
                                 std::optional<double> cutoff = std::nullopt) {
    return KernelSpec(FiniteRange{params}, cutoff);
  }
  static KernelSpec short_range(double inv_a, double R0, std::optional<double> cutoff = std::nullopt) {
    twobody::EreParams ere;
    ere.inv_a = inv_a;
    ere.R0 = R0;
    return KernelSpec(ShortRange{ere}, cutoff);
  }

  const Model& model() const { return model_; }
  const std::optional<double>& cutoff() const { return cutoff_; }
  bool is_finite_range() const { return std::holds_alternative<FiniteRange>(model_); }
  double inv_a() const;

  // Two-body binding momentum below which no trimer is sought; 0 when 1/a <= 0.
  double threshold() const;

 private:
  Model model_;
  std::optional<double> cutoff_;
};

// kappa_1(p) = sqrt(3p^2/4 + alpha^2), the pair momentum for spectator momentum p.
inline double subsystem_momentum(double p, double alpha) {
  return std::sqrt(0.75 * p * p + alpha * alpha);
}

// Left-hand factor of the trimer equation. Throws ThresholdViolation when it is not positive.
double denominator(double p, double alpha, const KernelSpec& spec);

// s-wave projected zero-range kernel
// (2/pi)(p'/p) ln[(p^2 + p'^2 + p p' + alpha^2) / (p^2 + p'^2 - p p' + alpha^2)].
double short_range_kernel(double p, double pp, double alpha);

// Angle-averaged cross term of the finite-range equation, including the p'^2 measure.
// Scaled by 4 pi beta^4 it tends to short_range_kernel as beta grows.
double finite_range_kernel(double p, double pp, double alpha, const twobody::PotentialParams& params);

// Kernel dispatch on the model.
double kernel(double p, double pp, double alpha, const KernelSpec& spec);

// kernel(p, p', alpha) / p'^2, which is symmetric under p <-> p'.
double symmetric_kernel(double p, double pp, double alpha, const KernelSpec& spec);

// beta/2 - 4 pi beta^4 h_bound(kappa, beta); tends to kappa as beta -> infinity.
double limit_identity(double beta, double kappa);

// Three-body wave function Psi(q, p) rebuilt from the spectator function, with cos_theta
// the angle between the pair and spectator momenta. ShortRange uses g -> 1.
double reconstruct_wavefunction(double q, double p, double cos_theta, double alpha,
                                const SpectatorFunction& phi, const KernelSpec& spec);

}  // namespace efimov::kernels
