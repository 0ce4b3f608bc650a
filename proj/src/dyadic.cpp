#include "tmspectra/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace tmspectra {

DyadicWord::DyadicWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("DyadicWord: letters must be 0 or 1");
  }
}

DyadicWord DyadicWord::from_value(std::uint64_t m, int n) {
  if (n < 0 || n > 63) throw std::invalid_argument("DyadicWord::from_value: bad length");
  if (n < 64 && m >> n) throw std::invalid_argument("DyadicWord::from_value: value too large");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (m >> (n - 1 - i)) & 1u;
  return DyadicWord(std::move(bits));
}

DyadicWord DyadicWord::parse(const std::string& s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char ch : s) {
    if (ch == '0')
      bits.push_back(0);
    else if (ch == '1')
      bits.push_back(1);
    else
      throw std::invalid_argument("DyadicWord::parse: expected 0/1 string");
  }
  return DyadicWord(std::move(bits));
}

std::uint64_t DyadicWord::value() const {
  if (length() > 63) throw std::invalid_argument("DyadicWord::value: word longer than 63");
  std::uint64_t m = 0;
  for (std::uint8_t b : bits_) m = (m << 1) | b;
  return m;
}

double DyadicWord::left() const { return std::ldexp(static_cast<double>(value()), -length()); }
double DyadicWord::right() const {
  return std::ldexp(static_cast<double>(value() + 1), -length());
}

DyadicWord DyadicWord::suffix(int k) const {
  if (k < 0 || k > length()) throw std::invalid_argument("DyadicWord::suffix: bad k");
  return DyadicWord(std::vector<std::uint8_t>(bits_.begin() + k, bits_.end()));
}

DyadicWord DyadicWord::segment(int i, int j) const {
  if (i < 1 || j > length() || i > j + 1) throw std::invalid_argument("DyadicWord::segment");
  return DyadicWord(std::vector<std::uint8_t>(bits_.begin() + (i - 1), bits_.begin() + j));
}

DyadicWord DyadicWord::concat(const DyadicWord& v) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.insert(bits.end(), v.bits_.begin(), v.bits_.end());
  return DyadicWord(std::move(bits));
}

std::string DyadicWord::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

DyadicWord cylinder_of(double x, int n) {
  if (n < 0) throw std::invalid_argument("cylinder_of: negative depth");
  if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("cylinder_of: x outside [0,1)");
  if (n > 62) throw std::invalid_argument("cylinder_of: depth too large");
  double scaled = std::ldexp(x, n);
  auto m = static_cast<std::uint64_t>(std::floor(scaled));
  std::uint64_t cap = (n == 0) ? 0 : (std::uint64_t{1} << n) - 1;
  if (m > cap) m = cap;
  return DyadicWord::from_value(m, n);
}

}  // namespace tmspectra
