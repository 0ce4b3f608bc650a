#include "tmspectra/parameter.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tmspectra {

namespace {

Rational reduce(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw std::invalid_argument("make_parameter: denominator must be positive");
  p %= q;
  if (p < 0) p += q;
  std::int64_t g = std::gcd(p, q);
  if (g == 0) g = 1;
  return Rational{p / g, q / g};
}

}  // namespace

CircleParameter make_parameter(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("make_parameter: non-finite c");
  CircleParameter param;
  param.c = torus_reduce(c);
  param.phase = std::polar(1.0, kTwoPi * param.c);
  param.singularity = torus_reduce(param.c + 0.5);
  return param;
}

CircleParameter make_parameter(std::int64_t p, std::int64_t q) {
  Rational r = reduce(p, q);
  CircleParameter param;
  param.rational_form = r;
  param.c = static_cast<double>(r.num) / static_cast<double>(r.den);
  param.phase = std::polar(1.0, kTwoPi * static_cast<double>(r.num) / static_cast<double>(r.den));
  // c + 1/2 mod 1 = (2p + q mod 2q) / 2q, reduced.
  Rational s = reduce(2 * r.num + r.den, 2 * r.den);
  param.singularity_rational = s;
  param.singularity = static_cast<double>(s.num) / static_cast<double>(s.den);
  return param;
}

}  // namespace tmspectra
