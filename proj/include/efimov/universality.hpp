#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "efimov/solver.hpp"
#include "efimov/twobody.hpp"

namespace efimov::universality {

// Root of s cosh(pi s / 2) = (8 / sqrt 3) sinh(pi s / 6) on (0.5, 1.5).
double efimov_s0();

// exp(2 pi / s0), the energy ratio of successive levels.
double energy_ratio_target();
// exp(pi / s0), the same ratio in binding momentum.
double momentum_ratio_target();

// E_n / E_{n+1} for consecutive levels. Throws InsufficientDataError below two levels.
std::vector<double> scaling_ratios(const solver::TrimerSpectrum& spectrum);

struct MeshOptions {
  std::size_t nodes = 300;
  std::size_t max_levels = 4;
};

struct CutoffRow {
  double cutoff = 0.0;
  solver::TrimerSpectrum spectrum;
};

enum class PairKind { LogPeriodic, Doubling };

// Two cutoffs whose ratio is the discrete scaling factor e^{pi/s0} or 2.
//   LogPeriodic: metric = |alpha0(b) / factor - alpha0(a)| / alpha0(a), must stay <= 1%
//   Doubling:    metric = |alpha0(b) - alpha0(a)| / alpha0(a), must exceed 25%
struct CutoffPair {
  double cutoff_a = 0.0;
  double cutoff_b = 0.0;
  double factor = 0.0;
  PairKind kind = PairKind::LogPeriodic;
  double metric = 0.0;
  bool passed = false;
};

struct CutoffStudy {
  std::vector<CutoffRow> rows;
  std::vector<CutoffPair> pairs;
  std::vector<double> momentum_ratios;  // alpha_n / alpha_{n+1} over all rows
  bool log_periodicity_passed = true;
  bool non_uniqueness_passed = true;
  bool ratios_passed = true;

  bool passed() const { return log_periodicity_passed && non_uniqueness_passed && ratios_passed; }
};

inline constexpr double kLogPeriodicTolerance = 0.01;
inline constexpr double kNonUniquenessShift = 0.25;
inline constexpr double kRatioTolerance = 0.02;

// Zero-range model at unitarity regulated by a sharp momentum cutoff, solved for each
// cutoff with the mesh scaled along. Pairs with cutoff ratio e^{pi/s0} must reproduce the
// spectrum after rescaling; pairs with ratio 2 must move alpha0 by more than 25%.
CutoffStudy cutoff_study(const std::vector<double>& cutoffs, const MeshOptions& options = {});

struct BetaRow {
  double beta = 0.0;
  bool feasible = false;
  std::string notice;
  double coupling = 0.0;
  double R0 = 0.0;           // range correction of the mapped potential
  double R0_limit = 0.0;     // -r0/2, the infinite-range-parameter value
  double alpha_finite = 0.0;
  double alpha_short = 0.0;
  double deviation = 0.0;    // |E_finite - E_short| / |E_short| for the requested level
};

struct BetaConvergence {
  std::vector<BetaRow> rows;
  bool monotone = true;
};

// For each beta: map (1/a, beta) onto a Yamaguchi coupling, solve the finite-range equation
// and the zero-range equation at the mapped R0 on one truncated mesh (cutoff), and compare
// level n. Infeasible beta values are kept as rows with a notice.
BetaConvergence beta_convergence(const twobody::EreParams& ere, const std::vector<double>& betas,
                                 std::size_t level, double cutoff, const MeshOptions& options = {});

struct RatioCheck {
  solver::TrimerSpectrum spectrum;
  std::vector<double> ratios;
  std::vector<double> deviations;  // |ratio / target - 1| for the excited pairs
  bool passed = false;
};

// Levels of the range-corrected zero-range model and their energy ratios; the excited pairs
// (n >= 1) must lie within 2% of e^{2 pi / s0}.
RatioCheck ratio_check(double inv_a, double R0, const MeshOptions& options = {});

nlohmann::json to_json(const solver::TrimerSpectrum& spectrum);
nlohmann::json to_json(const CutoffStudy& study);
nlohmann::json to_json(const BetaConvergence& table);
nlohmann::json to_json(const RatioCheck& check);

}  // namespace efimov::universality
