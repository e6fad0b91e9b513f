#include "efimov/spectator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "efimov/errors.hpp"

namespace efimov {

double SpectatorFunction::operator()(double p) const {
  if (momenta.empty() || momenta.size() != values.size())
    throw ExtrapolationError("spectator function has no samples");
  if (!(p >= momenta.front() && p <= momenta.back()))
    throw ExtrapolationError("momentum " + std::to_string(p) + " outside spectator mesh [" +
                             std::to_string(momenta.front()) + ", " +
                             std::to_string(momenta.back()) + "]");

  auto upper = std::upper_bound(momenta.begin(), momenta.end(), p);
  if (upper == momenta.end()) return values.back();
  const auto hi = static_cast<std::size_t>(upper - momenta.begin());
  if (hi == 0) return values.front();
  const std::size_t lo = hi - 1;

  const double x0 = std::log(momenta[lo]);
  const double x1 = std::log(momenta[hi]);
  const double t = (std::log(p) - x0) / (x1 - x0);
  const double y0 = values[lo];
  const double y1 = values[hi];
  if (y0 * y1 > 0.0) {
    const double ly = (1.0 - t) * std::log(std::abs(y0)) + t * std::log(std::abs(y1));
    return std::copysign(std::exp(ly), y0);
  }
  return (1.0 - t) * y0 + t * y1;
}

}  // namespace efimov
