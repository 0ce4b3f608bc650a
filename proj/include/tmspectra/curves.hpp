#ifndef TMSPECTRA_CURVES_HPP
#define TMSPECTRA_CURVES_HPP

#include <optional>
#include <vector>

#include "tmspectra/bracket.hpp"

namespace tmspectra {

enum class Provenance { kPressurePartition, kMeasurePartition, kClosedForm };

// A sampled curve on a strictly increasing grid with certified values.
struct SpectrumCurve {
  std::vector<double> arguments;
  std::vector<Bracket> values;
  Provenance provenance = Provenance::kClosedForm;

  std::size_t size() const { return arguments.size(); }
  void validate() const;
};

// Convex-conjugate output: values of the transform on an alpha grid, plus the
// slope range of the source curve (the interior of the conjugate's domain).
struct LegendreCurve {
  std::vector<double> alphas;
  std::vector<Bracket> values;
  double alpha_min = 0.0;  // one-sided slope estimates at the grid ends
  double alpha_max = 0.0;
  std::optional<double> excluded_alpha;  // flagged point, when a theorem omits one
};

// Number of grid triples violating midpoint convexity of the bracket
// envelopes by more than twice the local bracket width.
int convexity_violations(const SpectrumCurve& curve);

}  // namespace tmspectra

#endif  // TMSPECTRA_CURVES_HPP
