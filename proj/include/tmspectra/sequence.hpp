#ifndef TMSPECTRA_SEQUENCE_HPP
#define TMSPECTRA_SEQUENCE_HPP

#include <cstdint>
#include <vector>

#include "tmspectra/parameter.hpp"

namespace tmspectra {

// Number of 1-bits in the binary expansion of n.
inline int digit_sum(std::uint64_t n) {
  int s = 0;
  while (n) {
    s += static_cast<int>(n & 1u);
    n >>= 1;
  }
  return s;
}

// The first N entries t_0 .. t_{N-1} of the sequence t_n = phase^{digit_sum(n)}.
struct TmPrefix {
  CircleParameter parameter;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
};

// Built by the doubling recursion t_{2n} = t_n, t_{2n+1} = phase * t_n.
// With an exact rational parameter p/q the entries are drawn from a table of
// q-th roots of unity indexed by p * digit_sum(n) mod q, so no drift
// accumulates over long prefixes.
TmPrefix tm_prefix(const CircleParameter& param, std::uint64_t n_entries);

// One letterwise substitution step maps z to the two-letter block (z, phase*z).
std::vector<Complex> substitute(const CircleParameter& param,
                                const std::vector<Complex>& word, int iterations);

// The letterwise rotation z -> phase * z applied to a word.
std::vector<Complex> rotate_word(const CircleParameter& param, const std::vector<Complex>& word);

}  // namespace tmspectra

#endif  // TMSPECTRA_SEQUENCE_HPP
