#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "efimov/kernels.hpp"
#include "efimov/spectator.hpp"

namespace efimov::solver {

// Gauss-Legendre nodes pushed through p = scale * t / (1 - t), with t restricted so
// that every node lies in (0, cutoff).
struct MomentumMesh {
  std::vector<double> nodes;
  std::vector<double> weights;
  double scale = 0.0;
  double cutoff = 0.0;

  std::size_t size() const { return nodes.size(); }
};

inline constexpr std::size_t kMinMeshSize = 16;

MomentumMesh build_mesh(std::size_t n, double scale, double cutoff);

// Discretized trimer equation at one trial binding.
//   matrix(i, j)    = w_j K(p_i, p_j) / D(p_i)             (phi = M phi at a bound state)
//   symmetric(i, j) = c_i c_j G(p_i, p_j) / sqrt(D_i D_j)  (same spectrum, self-adjoint)
// with G = K / p'^2 and c_i = sqrt(w_i) p_i. A right eigenvector u of the symmetric form maps
// back to phi_i = u_i / (c_i sqrt(D_i)).
struct KernelSystem {
  double alpha = 0.0;
  Eigen::MatrixXd matrix;
  Eigen::MatrixXd symmetric;
  Eigen::VectorXd denominators;
  Eigen::VectorXd back_transform;  // 1 / (c_i sqrt(D_i))
  std::vector<double> nodes;
};

KernelSystem assemble(double alpha, const kernels::KernelSpec& spec, const MomentumMesh& mesh);

struct PrincipalSolution {
  double eta = 0.0;
  SpectatorFunction phi;
  int iterations = 0;
};

// Perron root of system.matrix by power iteration from the all-ones vector.
PrincipalSolution principal_eigenvalue(const KernelSystem& system);

// All eigenvalues of the discretized kernel, largest first.
std::vector<double> eigenvalues(const KernelSystem& system);

struct AlphaRange {
  double min = 0.0;
  double max = 0.0;
};

struct Level {
  double alpha = 0.0;
  double energy = 0.0;  // -alpha^2
  double eta_residual = 0.0;
};

// Deepest level first.
struct TrimerSpectrum {
  std::vector<Level> levels;

  std::size_t size() const { return levels.size(); }
  bool empty() const { return levels.empty(); }
};

inline constexpr double kScanPointsPerDecade = 40.0;
inline constexpr double kEtaTolerance = 1e-9;

// Bound states in [range.min, range.max]: the n-th level sits where the n-th eigenvalue
// of the kernel crosses one. Returns at most max_levels, deepest first; an empty
// spectrum is not an error. Throws ThresholdViolation if range.min is at or below the
// two-body threshold.
TrimerSpectrum find_levels(const kernels::KernelSpec& spec, const MomentumMesh& mesh,
                           AlphaRange range, std::size_t max_levels);

// Eigenvector at a level found by find_levels. The ground level is the Perron vector;
// excited levels carry nodes. Throws StaleLevelError when no eigenvalue is within 1e-6 of one.
SpectatorFunction spectator(const kernels::KernelSpec& spec, const MomentumMesh& mesh, double alpha);

// Quadrature cutoff used when the spec carries none: 1e4 * max(alpha_max, model length^-1).
double default_cutoff(const kernels::KernelSpec& spec, double alpha_max);

// Mesh with the cutoff of the spec (or default_cutoff) and a scale suited to the model.
MomentumMesh default_mesh(const kernels::KernelSpec& spec, AlphaRange range, std::size_t n);

}  // namespace efimov::solver
