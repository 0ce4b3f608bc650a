#ifndef TMSPECTRA_BRACKET_HPP
#define TMSPECTRA_BRACKET_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include "tmspectra/common.hpp"

namespace tmspectra {

// A certified lower/upper pair for a scalar. Endpoints may be infinite.
// Sums and scalar multiples are kept as rounded; transcendental maps are
// nudged outward by one ulp so enclosure survives the evaluation.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  Bracket() = default;
  Bracket(double l, double h) : lo(l), hi(h) {
    if (!(lo <= hi)) throw InternalError("Bracket: lo > hi");
  }

  static Bracket point(double v) { return Bracket(v, v); }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

  Bracket operator+(const Bracket& o) const { return Bracket(lo + o.lo, hi + o.hi); }
  Bracket operator+(double s) const { return Bracket(lo + s, hi + s); }
  Bracket operator-(const Bracket& o) const { return Bracket(lo - o.hi, hi - o.lo); }

  Bracket scaled(double s) const {
    return s >= 0 ? Bracket(s * lo, s * hi) : Bracket(s * hi, s * lo);
  }
};

inline double down_ulp(double v) {
  return std::isfinite(v) ? std::nextafter(v, -std::numeric_limits<double>::infinity()) : v;
}
inline double up_ulp(double v) {
  return std::isfinite(v) ? std::nextafter(v, std::numeric_limits<double>::infinity()) : v;
}

inline Bracket log_bracket(const Bracket& b) {
  if (b.lo < 0.0) throw InternalError("log_bracket: negative lower endpoint");
  double lo = b.lo == 0.0 ? -std::numeric_limits<double>::infinity() : down_ulp(std::log(b.lo));
  return Bracket(lo, up_ulp(std::log(b.hi)));
}

inline Bracket exp_bracket(const Bracket& b) {
  return Bracket(down_ulp(std::exp(b.lo)), up_ulp(std::exp(b.hi)));
}

inline Bracket hull(const Bracket& a, const Bracket& b) {
  return Bracket(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

// Largest bracket contained in both; degenerates to the nearest endpoint of
// `window` when the two are disjoint.
inline Bracket clamp_into(const Bracket& b, const Bracket& window, bool* clipped = nullptr) {
  double lo = std::max(b.lo, window.lo);
  double hi = std::min(b.hi, window.hi);
  bool c = lo != b.lo || hi != b.hi;
  if (lo > hi) {  // disjoint
    double v = b.hi < window.lo ? window.lo : window.hi;
    lo = hi = v;
    c = true;
  }
  if (clipped) *clipped = c;
  return Bracket(lo, hi);
}

// Distance between the two interval sets (0 when they intersect).
inline double bracket_distance(const Bracket& a, const Bracket& b) {
  if (a.hi < b.lo) return b.lo - a.hi;
  if (b.hi < a.lo) return a.lo - b.hi;
  return 0.0;
}

}  // namespace tmspectra

#endif  // TMSPECTRA_BRACKET_HPP
