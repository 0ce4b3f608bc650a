#ifndef TMSPECTRA_EXTREAL_HPP
#define TMSPECTRA_EXTREAL_HPP

#include <algorithm>
#include <limits>

namespace tmspectra {

// Value on [-inf, +inf) used for logarithmic quantities: either a finite
// double or exactly minus infinity. Minus infinity is a first-class state,
// not a magic number; addition absorbs it.
class ExtReal {
public:
  ExtReal() : v_(0.0) {}
  explicit ExtReal(double v) : v_(v) {}

  static ExtReal minus_inf() {
    return ExtReal(-std::numeric_limits<double>::infinity());
  }

  bool is_minus_inf() const {
    return v_ == -std::numeric_limits<double>::infinity();
  }
  bool finite() const { return !is_minus_inf(); }

  // The underlying IEEE value; -inf when is_minus_inf().
  double as_double() const { return v_; }

  ExtReal operator+(ExtReal o) const { return ExtReal(v_ + o.v_); }
  ExtReal& operator+=(ExtReal o) {
    v_ += o.v_;
    return *this;
  }
  ExtReal operator+(double o) const { return ExtReal(v_ + o); }

  bool operator<(ExtReal o) const { return v_ < o.v_; }
  bool operator<=(ExtReal o) const { return v_ <= o.v_; }
  bool operator==(ExtReal o) const { return v_ == o.v_; }

private:
  double v_;
};

inline ExtReal min(ExtReal a, ExtReal b) { return a < b ? a : b; }
inline ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }

}  // namespace tmspectra

#endif  // TMSPECTRA_EXTREAL_HPP
