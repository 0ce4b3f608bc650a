#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tmspectra/pressure.hpp"
#include "tmspectra/spectra.hpp"

using namespace tmspectra;

TEST_CASE("closed form at c = 0") {
  CHECK(pressure_c0(0.0) == doctest::Approx(kLog2));
  CHECK(pressure_c0(0.5) == doctest::Approx(0.0));
  CHECK(pressure_c0(-1.0) == doctest::Approx(3.0 * kLog2));
}

TEST_CASE("t = 0 gives log 2 exactly at every depth") {
  for (const CircleParameter& p : {make_parameter(1, 3), make_parameter(0.37)}) {
    for (int n : {4, 9, 14}) {
      const PressureEstimate est = partition_pressure(p, 0.0, n);
      CHECK(est.value.lo == kLog2);
      CHECK(est.value.hi == kLog2);
    }
  }
}

TEST_CASE("c = 0 brackets sit above the closed form by the finite-depth gap") {
  // The depth-n partition keeps the two cylinders at the fixed point as unit
  // terms, so its value exceeds the n -> infinity closed form by at least
  // log(2)/n at t >= 1/2. The brackets must enclose the depth-n value and
  // approach the closed form from above as n grows.
  const CircleParameter zero = make_parameter(0, 1);
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    const PressureEstimate n10 = partition_pressure(zero, t, 10);
    const PressureEstimate n14 = partition_pressure(zero, t, 14);
    const double cf = pressure_c0(t);
    CHECK(n14.value.lo >= cf - 1e-9);
    if (t >= 0.5) CHECK(n14.value.lo >= cf + kLog2 / 14.0 - 1e-9);
    CHECK(n14.value.lo - cf <= n10.value.lo - cf + 1e-9);  // shrinking gap
    CHECK(n14.value.lo - cf < 0.25);
    CHECK(n14.value.hi - cf < 0.45);
  }
}

TEST_CASE("pressure decreases in t and brackets are ordered") {
  const CircleParameter p = make_parameter(1, 3);
  const SpectrumCurve curve = pressure_curve(p, {0.0, 0.5, 1.0, 1.5, 2.0}, 12);
  for (std::size_t i = 1; i < curve.size(); ++i)
    CHECK(curve.values[i].lo <= curve.values[i - 1].hi + 1e-12);
  for (const Bracket& b : curve.values) CHECK(b.lo <= b.hi);
  CHECK(convexity_violations(curve) == 0);
}

TEST_CASE("pressure endpoints at c = 1/2") {
  const SpectrumCurve curve = pressure_curve(make_parameter(1, 2), {0.0, 1.0}, 16);
  CHECK(curve.values[0].lo == kLog2);  // p(0) = log 2 exactly
  // p(1) = 0 in the limit; the finite-depth value sits a little above
  CHECK(curve.values[1].lo >= -1e-9);
  CHECK(curve.values[1].lo < 0.12);
  CHECK(curve.values[1].hi < 0.30);
}

TEST_CASE("subadditivity surrogate for t >= 0") {
  for (const CircleParameter& p : {make_parameter(1, 2), make_parameter(1, 3)}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const PressureEstimate half = partition_pressure(p, t, 7);
      const PressureEstimate full = partition_pressure(p, t, 14);
      const double slack = 2.0 * (half.value.width() + full.value.width()) + 1e-9;
      CHECK(14.0 * full.value.hi <= 14.0 * half.value.hi + slack);
    }
  }
}

TEST_CASE("negative t unrestricted reports infinity honestly") {
  // at a dyadic singularity even the grid sees exact preimages
  const PressureEstimate dy = partition_pressure(make_parameter(1, 2), -0.5, 8);
  CHECK(std::isinf(dy.value.hi));
  CHECK(dy.mode == PressureEstimate::Mode::kInfBased);
  // off the dyadic case the lower envelope stays finite
  const PressureEstimate nd = partition_pressure(make_parameter(1, 3), -0.5, 8);
  CHECK(std::isinf(nd.value.hi));
  CHECK(std::isfinite(nd.value.lo));
}

TEST_CASE("restricted pressure: survivors, monotonicity, divergence scale") {
  const CircleParameter half = make_parameter(1, 2);

  // m = 1 at c = 1/2 leaves exactly the two alternating words; the partition
  // value collapses to the periodic-orbit average of psi
  const PressureEstimate m1 = restricted_partition_pressure(half, -0.5, 10, 1);
  CHECK(m1.restricted_m == 1);
  CHECK(std::isfinite(m1.value.lo));
  CHECK(std::isfinite(m1.value.hi));

  double prev_hi = -1e300;
  for (int m : {1, 2, 3, 4}) {
    const PressureEstimate est = restricted_partition_pressure(half, -0.5, 10, m);
    CHECK(est.value.hi >= prev_hi - 1e-9);  // nested languages, deeper excursions
    prev_hi = est.value.hi;
  }

  // the t < 0 values grow with m toward the unrestricted divergence; by
  // m = 10 the certified lower bound clears 3 log 2 at depth 14
  const PressureEstimate m10 = restricted_partition_pressure(half, -0.5, 14, 10);
  CHECK(m10.value.lo > 3.0 * kLog2);
}

TEST_CASE("restricted pressure approaches the unrestricted value for t > 0") {
  const CircleParameter third = make_parameter(1, 3);
  const PressureEstimate unres = partition_pressure(third, 0.5, 12);
  double prev = -1e300;
  for (int m : {2, 4, 6, 8, 10}) {
    const PressureEstimate est = restricted_partition_pressure(third, 0.5, 12, m);
    CHECK(est.value.hi >= prev - 1e-9);
    prev = est.value.hi;
    if (m == 10) CHECK(bracket_distance(est.value, unres.value) == 0.0);
  }
}

TEST_CASE("restricted pressure with m >= n is the full-alphabet partition") {
  const CircleParameter third = make_parameter(1, 3);
  const PressureEstimate est = restricted_partition_pressure(third, 0.5, 6, 10);
  // every word is admissible at this depth
  CHECK(std::isfinite(est.value.lo));
  CHECK(est.value.lo <= est.value.hi);
}

TEST_CASE("worker-count independence is bitwise") {
  const CircleParameter p = make_parameter(1, 3);
  const PressureEstimate a = partition_pressure(p, 0.7, 12, 3, 1);
  const PressureEstimate b = partition_pressure(p, 0.7, 12, 3, 3);
  const PressureEstimate c = partition_pressure(p, 0.7, 12, 3, 7);
  CHECK(a.value.lo == b.value.lo);
  CHECK(a.value.hi == b.value.hi);
  CHECK(a.value.lo == c.value.lo);
  CHECK(a.value.hi == c.value.hi);
}

TEST_CASE("pressure/Lq identity within combined widths at moderate q") {
  for (const CircleParameter& p : {make_parameter(1, 2), make_parameter(1, 3)}) {
    const std::vector<double> qs{1.0, 2.0};
    const SpectrumCurve meas = lq_spectrum(p, qs, 10, LqPipeline::kMeasurePartition);
    const SpectrumCurve pres = lq_spectrum(p, qs, 10, LqPipeline::kPressurePartition);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const double d = bracket_distance(meas.values[i], pres.values[i]);
      CHECK(d <= meas.values[i].width() + pres.values[i].width());
    }
  }
}
