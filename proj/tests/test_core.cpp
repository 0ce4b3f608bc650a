#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tmspectra/bracket.hpp"
#include "tmspectra/dyadic.hpp"
#include "tmspectra/extreal.hpp"
#include "tmspectra/parameter.hpp"

using namespace tmspectra;

TEST_CASE("make_parameter derived fields") {
  const CircleParameter half = make_parameter(1, 2);
  CHECK(half.phase.real() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::fabs(half.phase.imag()) < 1e-14);
  CHECK(half.singularity == doctest::Approx(0.0));
  CHECK(half.rational_form.has_value());

  const CircleParameter zero = make_parameter(0, 1);
  CHECK(zero.phase.real() == doctest::Approx(1.0));
  CHECK(zero.singularity == doctest::Approx(0.5));
  CHECK(zero.is_zero());

  const CircleParameter third = make_parameter(1, 3);
  CHECK(third.phase.real() == doctest::Approx(std::cos(kTwoPi / 3.0)));
  CHECK(third.phase.imag() == doctest::Approx(std::sin(kTwoPi / 3.0)));
  CHECK(third.singularity == doctest::Approx(5.0 / 6.0));

  const CircleParameter fl = make_parameter(0.3);
  CHECK_FALSE(fl.rational_form.has_value());
  CHECK(fl.singularity == doctest::Approx(0.8));

  CHECK_THROWS_AS(make_parameter(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(make_parameter(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("parameter invariants on a sample of c") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const CircleParameter p = make_parameter(unif(gen));
    CHECK(std::abs(std::abs(p.phase) - 1.0) < 1e-14);
    CHECK(p.singularity == doctest::Approx(torus_reduce(p.c + 0.5)).epsilon(1e-14));
  }
  // reduction into [0, 1) and exact rational normalization
  const CircleParameter p = make_parameter(7, 4);  // 7/4 == 3/4 on the torus
  CHECK(p.rational_form->num == 3);
  CHECK(p.rational_form->den == 4);
}

TEST_CASE("cylinder_of examples and membership") {
  CHECK(cylinder_of(0.3, 2).to_string() == "01");
  CHECK(cylinder_of(0.5, 1).to_string() == "1");  // dyadic tie: left endpoint
  CHECK(cylinder_of(0.0, 3).to_string() == "000");

  std::mt19937 gen(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double x = unif(gen);
    const int n = 1 + static_cast<int>(gen() % 20);
    const DyadicWord w = cylinder_of(x, n);
    CHECK(w.left() <= x);
    CHECK(x <= w.right());
  }
}

TEST_CASE("doubling maps a cylinder onto the suffix cylinder, exactly") {
  std::mt19937 gen(13);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(gen() % 18);
    const std::uint64_t m = gen() & ((std::uint64_t{1} << n) - 1);
    const DyadicWord w = DyadicWord::from_value(m, n);
    for (int k = 1; k < n; ++k) {
      const DyadicWord s = w.suffix(k);
      // doubling k times: endpoints m 2^k mod 2^n over denominator 2^n
      const std::uint64_t mapped = (m << k) & ((std::uint64_t{1} << n) - 1);
      CHECK(mapped == (s.value() << k));
      CHECK(s.length() == n - k);
    }
  }
}

TEST_CASE("dyadic word value/bits round trip and segments") {
  const DyadicWord w = DyadicWord::parse("01101");
  CHECK(w.value() == 13);
  CHECK(w.length() == 5);
  CHECK(w.segment(2, 4).to_string() == "110");
  CHECK(w.suffix(2).to_string() == "101");
  CHECK(w.concat(DyadicWord::parse("01")).to_string() == "0110101");
  // exact endpoint arithmetic: left + 2^-n == right in integers
  CHECK(w.numerator_left() + 1 == w.numerator_right());
}

TEST_CASE("bracket enclosure under arithmetic") {
  std::mt19937 gen(17);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    double a = unif(gen), b = unif(gen);
    if (a > b) std::swap(a, b);
    double c = unif(gen), d = unif(gen);
    if (c > d) std::swap(c, d);
    const Bracket x(a, b), y(c, d);
    std::uniform_real_distribution<double> inx(a, b), iny(c, d);
    const double px = inx(gen), py = iny(gen);

    CHECK((x + y).contains(px + py));
    const double s = unif(gen);
    CHECK(x.scaled(s).contains(s * px));
    CHECK(hull(x, y).contains(px));
    CHECK(hull(x, y).contains(py));
    CHECK(exp_bracket(x).contains(std::exp(px)));
    if (a > 0.0) CHECK(log_bracket(x).contains(std::log(px)));
  }
  CHECK_THROWS_AS(Bracket(1.0, 0.0), InternalError);
}

TEST_CASE("bracket clamp and distance") {
  bool clipped = false;
  const Bracket c = clamp_into(Bracket(0.0, 10.0), Bracket(2.0, 3.0), &clipped);
  CHECK(clipped);
  CHECK(c.lo == 2.0);
  CHECK(c.hi == 3.0);
  const Bracket d = clamp_into(Bracket(5.0, 6.0), Bracket(1.0, 2.0), &clipped);
  CHECK(clipped);
  CHECK(d.lo == d.hi);
  CHECK(bracket_distance(Bracket(0, 1), Bracket(2, 3)) == doctest::Approx(1.0));
  CHECK(bracket_distance(Bracket(0, 2.5), Bracket(2, 3)) == 0.0);
}

TEST_CASE("extended reals absorb minus infinity") {
  const ExtReal minf = ExtReal::minus_inf();
  CHECK(minf.is_minus_inf());
  CHECK((minf + 5.0).is_minus_inf());
  CHECK((ExtReal(2.0) + ExtReal(3.0)).as_double() == doctest::Approx(5.0));
  CHECK(min(minf, ExtReal(0.0)).is_minus_inf());
  CHECK(max(minf, ExtReal(0.0)).as_double() == 0.0);
}
