#ifndef TMSPECTRA_PRESSURE_HPP
#define TMSPECTRA_PRESSURE_HPP

#include <optional>

#include "tmspectra/curves.hpp"
#include "tmspectra/parameter.hpp"

namespace tmspectra {

// Finite-depth partition value (1/n) log sum_w exp(t * E_w) with E_w a
// certified enclosure of the cylinder extremum of the Birkhoff sum:
//   t >= 0 (sup mode):   E_w = [grid_max, sum_of_sups]
//   t <  0 (inf mode):   E_w = [sum_of_infs, grid_min]
// Cylinders whose inf is minus infinity push the t < 0 value to +inf; that is
// the honest reading of the unrestricted inf-based sum. Finite negative-t
// numbers come from the restricted variant.
struct PressureEstimate {
  double t = 0.0;
  int depth = 0;
  Bracket value;
  enum class Mode { kSupBased, kInfBased } mode = Mode::kSupBased;
  std::optional<int> restricted_m;
};

PressureEstimate partition_pressure(const CircleParameter& param, double t, int depth,
                                    int grid_depth = 3, unsigned workers = 0);

// Closed form max{(1-2t) log 2, 0}; the golden oracle at c = 0.
double pressure_c0(double t);

// Partition over the words avoiding the length-(m+1) singularity prefix(es),
// with the extremum taken over the part of the cylinder that stays in the
// subshift: the upper end from termwise suprema off the forbidden
// neighborhood, the lower end from a point of the subshift inside the
// cylinder. Words with no admissible continuation are skipped; an empty
// admissible set at m >= 2 cannot occur and signals a bug.
PressureEstimate restricted_partition_pressure(const CircleParameter& param, double t, int depth,
                                               int forbidden_depth, int grid_depth = 3);

SpectrumCurve pressure_curve(const CircleParameter& param, const std::vector<double>& t_grid,
                             int depth, int grid_depth = 3, unsigned workers = 0);

}  // namespace tmspectra

#endif  // TMSPECTRA_PRESSURE_HPP
