#ifndef TMSPECTRA_COMBINATORICS_HPP
#define TMSPECTRA_COMBINATORICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tmspectra/dyadic.hpp"
#include "tmspectra/parameter.hpp"

namespace tmspectra {

// Binary coding of the singularity position. For rational parameters the
// bits come from exact long division; for float parameters they are read off
// the double with a guard that refuses bits once the remaining fraction sits
// within 2^-52 of a dyadic boundary (asking for more is a PrecisionError and
// the caller should supply the parameter as an exact fraction).
//
// When the singularity is dyadic it has two expansions u10^inf and u01^inf;
// both are tracked, with prefix() following the 10^inf form.
class SingularityCoding {
public:
  explicit SingularityCoding(const CircleParameter& param);

  const CircleParameter& parameter() const { return param_; }
  bool is_dyadic() const { return dyadic_; }
  // First position at which the two dyadic expansions differ (1-based);
  // only meaningful when is_dyadic().
  int divergence_position() const { return divergence_; }

  std::uint8_t prefix_bit(int i) const;       // 1-based
  std::uint8_t dual_prefix_bit(int i) const;  // == prefix_bit unless dyadic
  std::vector<std::uint8_t> prefix(int n) const;
  std::vector<std::uint8_t> dual_prefix(int n) const;

  // Membership in the neighborhood set G_n: the length-n coding prefix plus
  // its two neighbor words (wraparound 0^n - 1 = 1^n and 1^n + 1 = 0^n); in
  // the dyadic regime, exactly the two expansion prefixes.
  bool in_g(const std::vector<std::uint8_t>& word) const;
  bool in_g(const std::uint8_t* word, int n) const;

  // The word set G_n.
  std::vector<DyadicWord> g_n(int n) const;

  // Minimal distance from the singularity to the complement of the union of
  // the forbidden depth-(m+1) cylinders; positive for every m.
  double forbidden_margin(int m) const;

private:
  void ensure_bits(int n) const;

  CircleParameter param_;
  bool dyadic_ = false;
  int divergence_ = 0;  // 0 = not dyadic
  mutable std::vector<std::uint8_t> bits_;       // canonical expansion
  mutable std::vector<std::uint8_t> dual_bits_;  // alternative expansion when dyadic
  mutable bool exhausted_ = false;               // float path ran out of bits
};

// Hitting structure of a word: position k carries the largest j such that
// w_{[k,j]} is in G (depth -1 encodes "full", i.e. w_{[k,n]} in G).
struct HittingPartition {
  static constexpr int kFull = -1;
  std::vector<int> depth;  // index k-1 holds the depth class of position k

  int full_count() const {
    int c = 0;
    for (int d : depth) c += (d == kFull);
    return c;
  }
};

HittingPartition hitting_partition(const SingularityCoding& coding, const DyadicWord& w);

// kappa(w): number of full hitting positions.
int kappa(const SingularityCoding& coding, const DyadicWord& w);

// Automaton over states = admissible (m+1)-letter words; appending a letter
// shifts the state window. Recognizes the words with no forbidden subword.
struct ForbiddenAutomaton {
  int m = 0;
  std::vector<std::uint64_t> forbidden;  // 1 or 2 values of length m+1
  // next[state][letter] = target state value, or -1 when forbidden.
  std::vector<std::array<std::int64_t, 2>> next;
  std::vector<std::uint8_t> admissible;  // state-indexed flag
  std::vector<std::uint8_t> live;        // admissible and extendable forever

  int word_length() const { return m + 1; }
  std::uint64_t state_count() const;

  bool word_admissible(const DyadicWord& w) const;
  // |Sigma_m^n| by walking the transition table.
  std::uint64_t count_words(int n) const;
  // Greedy infinite continuation from a live state; length letters appended.
  std::vector<std::uint8_t> live_walk(std::uint64_t state, int length) const;
};

ForbiddenAutomaton forbidden_automaton(const SingularityCoding& coding, int m);

struct MarkovReport {
  bool irreducible = false;
  bool aperiodic = false;
  double spectral_radius = 0.0;
  int essential_states = 0;
  int essential_components = 0;
};

// Strong components of the transition graph restricted to its recurrent part,
// period via cycle-length gcd, spectral radius via power iteration on A + I.
MarkovReport markov_check(const ForbiddenAutomaton& automaton);

enum class ExtensionGoal {
  kAvoidG,    // w_{[k,n]} v not in G for all 1 <= k <= n
  kNoPrefix,  // additionally no suffix of wv is a prefix of the coding
};

// Shortest extension (breadth-first, then lexicographic) meeting the goal.
// Search failure past the theoretical length bound plus slack is a bug.
DyadicWord extension_search(const SingularityCoding& coding, const DyadicWord& w,
                            ExtensionGoal goal = ExtensionGoal::kAvoidG);

}  // namespace tmspectra

#endif  // TMSPECTRA_COMBINATORICS_HPP
