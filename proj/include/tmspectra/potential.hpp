#ifndef TMSPECTRA_POTENTIAL_HPP
#define TMSPECTRA_POTENTIAL_HPP

#include <cstdint>
#include <vector>

#include "tmspectra/dyadic.hpp"
#include "tmspectra/extreal.hpp"
#include "tmspectra/parameter.hpp"

namespace tmspectra {

// psi(x) = 2 log |cos(pi (x - c))|; equals 0 at x = c and minus infinity
// exactly at the singularity c + 1/2.
ExtReal psi(const CircleParameter& param, double x);

// psi evaluated at the exact dyadic point num / 2^depth. The singularity test
// is exact: rational parameters compare as fractions, float parameters by
// bit-identical doubles.
ExtReal psi_dyadic(const CircleParameter& param, std::uint64_t num, int depth);

// Sum of psi along the doubling orbit x, Tx, ..., T^{n-1}x. Doubling a double
// is exact, so this is the true orbit of the dyadic rational the double holds.
ExtReal birkhoff_sum(const CircleParameter& param, double x, int n);

// psi evaluated as a function of the torus distance d in [0, 1/2] to c.
ExtReal psi_from_distance(double d);

// Exact-endpoint per-term extrema of psi over the closed dyadic interval
// [m 2^-depth, (m+1) 2^-depth]. The maximum sits at the interval point
// nearest to c (0 if c lies inside); the minimum at the point nearest to the
// singularity (-inf if the singularity lies inside).
double term_sup(const CircleParameter& param, std::uint64_t m, int depth);
ExtReal term_inf(const CircleParameter& param, std::uint64_t m, int depth);

// Certified enclosure of the extrema of the length-n Birkhoff sum over a
// cylinder: sum_of_infs <= inf <= grid_min <= grid_max <= sup <= sum_of_sups.
// The termwise sums are closed-form; the grid scans 2^b + 1 dyadic points of
// the cylinder refined to depth n + b. Grid nodes that hit a preimage of the
// singularity are skipped for the max and recorded as -inf for the min.
struct CylinderExtrema {
  DyadicWord word;
  double sum_of_sups = 0.0;
  ExtReal sum_of_infs;
  double grid_max = 0.0;
  ExtReal grid_min;
};

CylinderExtrema cylinder_extrema(const CircleParameter& param, const DyadicWord& w, int grid_depth);

// The same enclosures for every cylinder of one depth at once, via suffix
// recursion for the termwise sums and a table of Birkhoff values on the
// refined grid. Arrays are indexed by the word's integer value; -inf entries
// use the IEEE infinity of the underlying buffer.
struct CylinderSweep {
  int depth = 0;
  int grid_depth = 0;
  std::vector<double> sum_of_sups;
  std::vector<double> sum_of_infs;  // may contain -inf
  std::vector<double> grid_max;     // may contain -inf if every node is singular
  std::vector<double> grid_min;     // may contain -inf
};

CylinderSweep cylinder_sweep(const CircleParameter& param, int depth, int grid_depth);

}  // namespace tmspectra

#endif  // TMSPECTRA_POTENTIAL_HPP
