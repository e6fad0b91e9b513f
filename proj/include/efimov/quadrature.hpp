#pragma once

#include <cstddef>
#include <vector>

namespace efimov::quadrature {

struct Rule {
  std::vector<double> nodes;  // ascending, in (-1, 1)
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
Rule gauss_legendre(std::size_t n);

// Cached rule for orders used repeatedly in kernel evaluation.
const Rule& cached_gauss_legendre(std::size_t n);

}  // namespace efimov::quadrature
