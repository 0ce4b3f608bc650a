#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tmspectra/sequence.hpp"

using namespace tmspectra;

TEST_CASE("digit_sum") {
  CHECK(digit_sum(7) == 3);
  CHECK(digit_sum(0) == 0);
  for (int k = 0; k < 60; ++k) CHECK(digit_sum(std::uint64_t{1} << k) == 1);
  CHECK(digit_sum(0b1011011) == 5);
}

TEST_CASE("tm_prefix classic signs at c = 1/2") {
  const TmPrefix p = tm_prefix(make_parameter(1, 2), 8);
  const double expected[8] = {1, -1, -1, 1, -1, 1, 1, -1};
  for (int i = 0; i < 8; ++i) {
    CHECK(p.values[i].real() == doctest::Approx(expected[i]));
    CHECK(std::fabs(p.values[i].imag()) < 1e-15);
  }
}

TEST_CASE("tm_prefix degenerate and rational cases") {
  const TmPrefix ones = tm_prefix(make_parameter(0, 1), 64);
  for (const auto& v : ones.values) CHECK(v == Complex{1.0, 0.0});

  const TmPrefix third = tm_prefix(make_parameter(1, 3), 8);
  CHECK(third.values[3].real() == doctest::Approx(std::cos(2.0 * kTwoPi / 3.0)));
  CHECK(third.values[3].imag() == doctest::Approx(std::sin(2.0 * kTwoPi / 3.0)));
}

TEST_CASE("doubling identities hold exactly for the constructed prefix") {
  // even indices copy, bitwise, on both construction paths
  for (const CircleParameter& p : {make_parameter(1, 3), make_parameter(0.437281)}) {
    const TmPrefix t = tm_prefix(p, 1 << 12);
    for (std::uint64_t n = 0; 2 * n < t.size(); ++n) CHECK(t.values[2 * n] == t.values[n]);
  }
  // odd indices: bitwise along the multiplicative path, exact-root-table
  // entries within one rounding of the product along the rational path
  {
    const TmPrefix t = tm_prefix(make_parameter(0.437281), 1 << 12);
    const Complex phi = t.parameter.phase;
    for (std::uint64_t n = 0; 2 * n + 1 < t.size(); ++n)
      CHECK(t.values[2 * n + 1] == phi * t.values[n]);
  }
  {
    const TmPrefix t = tm_prefix(make_parameter(1, 3), 1 << 12);
    const Complex phi = t.parameter.phase;
    for (std::uint64_t n = 0; 2 * n + 1 < t.size(); ++n)
      CHECK(std::abs(t.values[2 * n + 1] - phi * t.values[n]) < 1e-15);
  }
}

TEST_CASE("entries stay on the unit circle after 2^20 multiplications") {
  const TmPrefix t = tm_prefix(make_parameter(0.3720509281), std::uint64_t{1} << 20);
  double worst = 0.0;
  for (const auto& v : t.values) worst = std::max(worst, std::fabs(std::abs(v) - 1.0));
  CHECK(worst < 1e-12);
}

TEST_CASE("entries are exact roots of unity in the rational case") {
  const CircleParameter p = make_parameter(2, 5);
  const TmPrefix t = tm_prefix(p, std::uint64_t{1} << 16);
  // digit sums repeat mod 5; entries must be drawn from exactly 5 values
  for (std::uint64_t n = 0; n < t.size(); ++n) {
    const int cls = (2 * digit_sum(n)) % 5;
    const Complex expect = std::polar(1.0, kTwoPi * static_cast<double>(cls) / 5.0);
    CHECK(std::abs(t.values[n] - expect) < 1e-15);
  }
  // and the doubling identities are bitwise exact on the table
  for (std::uint64_t n = 0; 2 * n < t.size(); ++n) CHECK(t.values[2 * n] == t.values[n]);
}

TEST_CASE("substitution fixed point") {
  for (const CircleParameter& p : {make_parameter(1, 2), make_parameter(1, 3),
                                   make_parameter(0.2913)}) {
    const std::vector<Complex> seed{Complex{1.0, 0.0}};
    const std::vector<Complex> one = substitute(p, seed, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == Complex{1.0, 0.0});
    CHECK(one[1] == p.phase);

    for (int n = 1; n <= 12; ++n) {
      const std::vector<Complex> word = substitute(p, seed, n);
      const TmPrefix prefix = tm_prefix(p, std::uint64_t{1} << n);
      REQUIRE(word.size() == prefix.size());
      for (std::size_t i = 0; i < word.size(); ++i)
        CHECK(std::abs(word[i] - prefix.values[i]) < 1e-12);
    }
  }
}

TEST_CASE("block recursion: next block is the rotated previous block") {
  const CircleParameter p = make_parameter(1, 3);
  std::vector<Complex> u{Complex{1.0, 0.0}};
  for (int n = 0; n < 12; ++n) {
    const std::vector<Complex> next = substitute(p, u, 1);
    const std::vector<Complex> rotated = rotate_word(p, u);
    REQUIRE(next.size() == 2 * u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      CHECK(std::abs(next[i] - u[i]) < 1e-13);
      CHECK(std::abs(next[u.size() + i] - rotated[i]) < 1e-13);
    }
    u = next;
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(tm_prefix(make_parameter(0.5), 0), std::invalid_argument);
  CHECK_THROWS_AS(substitute(make_parameter(0.5), {Complex{1, 0}}, -1), std::invalid_argument);
}
