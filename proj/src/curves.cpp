#include "tmspectra/curves.hpp"

#include <cmath>
#include <stdexcept>

namespace tmspectra {

void SpectrumCurve::validate() const {
  if (arguments.size() != values.size() || arguments.empty())
    throw std::invalid_argument("SpectrumCurve: grid and values must match and be nonempty");
  for (std::size_t i = 1; i < arguments.size(); ++i)
    if (!(arguments[i - 1] < arguments[i]))
      throw std::invalid_argument("SpectrumCurve: grid must be strictly increasing");
}

int convexity_violations(const SpectrumCurve& curve) {
  curve.validate();
  int violations = 0;
  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    const double x0 = curve.arguments[i - 1], x1 = curve.arguments[i], x2 = curve.arguments[i + 1];
    const double lambda = (x1 - x0) / (x2 - x0);
    const double slack =
        2.0 * std::max({curve.values[i - 1].width(), curve.values[i].width(),
                        curve.values[i + 1].width()}) +
        1e-12;
    if (!std::isfinite(slack)) continue;
    const double lo_interp =
        (1.0 - lambda) * curve.values[i - 1].lo + lambda * curve.values[i + 1].lo;
    const double hi_interp =
        (1.0 - lambda) * curve.values[i - 1].hi + lambda * curve.values[i + 1].hi;
    if (curve.values[i].lo > lo_interp + slack || curve.values[i].hi > hi_interp + slack)
      ++violations;
  }
  return violations;
}

}  // namespace tmspectra
