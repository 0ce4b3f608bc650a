#ifndef TMSPECTRA_DYADIC_HPP
#define TMSPECTRA_DYADIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tmspectra/common.hpp"

namespace tmspectra {

// A finite binary word w identifying the dyadic cylinder
// [m 2^-n, (m+1) 2^-n] with m its integer value. Endpoints are integer
// pairs, so cylinder geometry stays exact; floats only appear on request.
class DyadicWord {
public:
  DyadicWord() = default;
  explicit DyadicWord(std::vector<std::uint8_t> bits);
  static DyadicWord from_value(std::uint64_t m, int n);
  static DyadicWord parse(const std::string& zeros_and_ones);

  int length() const { return static_cast<int>(bits_.size()); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::uint8_t bit(int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }  // 1-based

  // Integer value m = sum bits_i 2^(n-i); requires length <= 63.
  std::uint64_t value() const;

  // Exact endpoints m / 2^n and (m+1) / 2^n.
  std::uint64_t numerator_left() const { return value(); }
  std::uint64_t numerator_right() const { return value() + 1; }
  double left() const;
  double right() const;

  // Drop the first k letters: the image of the cylinder under k doublings.
  DyadicWord suffix(int k) const;

  // w restricted to positions [i, j], 1-based inclusive.
  DyadicWord segment(int i, int j) const;

  DyadicWord concat(const DyadicWord& v) const;

  std::string to_string() const;

  bool operator==(const DyadicWord& o) const { return bits_ == o.bits_; }

private:
  std::vector<std::uint8_t> bits_;
};

// The depth-n word whose cylinder contains x. Dyadic ties resolve to the
// cylinder having x as its left endpoint.
DyadicWord cylinder_of(double x, int n);

}  // namespace tmspectra

#endif  // TMSPECTRA_DYADIC_HPP
