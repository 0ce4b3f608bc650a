#ifndef TMSPECTRA_COMMON_HPP
#define TMSPECTRA_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmspectra {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline const double kLog2 = std::log(2.0);

// Raised when a float-backed binary expansion runs out of trustworthy bits.
// Callers should retry with an exact rational parameter.
class PrecisionError : public std::runtime_error {
public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a structural invariant that should hold by construction fails.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Distance on the torus R/Z.
inline double torus_distance(double x, double y) {
  double d = std::fabs(x - y);
  d -= std::floor(d);
  return d <= 0.5 ? d : 1.0 - d;
}

// Reduce into [0, 1).
inline double torus_reduce(double x) {
  double r = x - std::floor(x);
  return r < 1.0 ? r : 0.0;
}

}  // namespace tmspectra

#endif  // TMSPECTRA_COMMON_HPP
