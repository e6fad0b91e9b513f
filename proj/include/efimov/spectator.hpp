#pragma once

#include <vector>

namespace efimov {

// Spectator function phi(p) sampled on the nodes of a momentum mesh.
// Normalized to max |phi| = 1 with phi > 0 at the smallest node.
struct SpectatorFunction {
  std::vector<double> momenta;  // strictly increasing
  std::vector<double> values;
  double alpha = 0.0;

  // Linear interpolation in (log p, log |phi|) with the sign carried along; falls back
  // to linear-in-phi across a sign change. Throws ExtrapolationError outside the mesh.
  double operator()(double p) const;
};

}  // namespace efimov
