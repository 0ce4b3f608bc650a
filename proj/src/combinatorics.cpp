#include "tmspectra/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tmspectra {

namespace {

constexpr int kMaxFloatBits = 80;  // doubling a double runs dry before this

}  // namespace

SingularityCoding::SingularityCoding(const CircleParameter& param) : param_(param) {
  if (param.singularity_rational) {
    const auto& s = *param.singularity_rational;
    std::int64_t den = s.den;
    dyadic_ = (den & (den - 1)) == 0;
    if (dyadic_) {
      // Terminating expansion, then the 10^inf / 01^inf pair.
      std::int64_t r = s.num;
      while (den > 1) {
        r *= 2;
        std::uint8_t b = r >= den;
        if (b) r -= den;
        bits_.push_back(b);
        den >>= 1;
      }
      divergence_ = bits_.empty() ? 1 : static_cast<int>(bits_.size());
    }
    // Non-dyadic rational bits are generated on demand in ensure_bits.
  } else {
    // A double terminating within 40 bits is taken as an intended dyadic
    // point; otherwise bits are read off with a guard that stops once the
    // remaining fraction comes within 2^(i-53) of a dyadic boundary, where
    // the low mantissa bits no longer speak for the intended parameter.
    double x = param.singularity;
    int term_depth = 0;
    if (x != 0.0) {
      int ex = 0;
      const double f = std::frexp(x, &ex);
      auto mant = static_cast<std::uint64_t>(std::ldexp(f, 53));
      int tz = 0;
      while ((mant & 1u) == 0) {
        mant >>= 1;
        ++tz;
      }
      term_depth = 53 - ex - tz;
    }
    if (term_depth <= 40) {
      dyadic_ = true;
      double t = x;
      for (int i = 0; i < term_depth; ++i) {
        t *= 2.0;
        std::uint8_t b = t >= 1.0;
        if (b) t -= 1.0;
        bits_.push_back(b);
      }
      divergence_ = bits_.empty() ? 1 : static_cast<int>(bits_.size());
      return;
    }
    double t = x;
    for (int i = 1; i < kMaxFloatBits; ++i) {
      const double tol = std::ldexp(1.0, i - 53);
      const double dist = std::min({t, std::fabs(t - 0.5), 1.0 - t});
      if (dist <= tol) break;
      t *= 2.0;
      std::uint8_t b = t >= 1.0;
      if (b) t -= 1.0;
      bits_.push_back(b);
    }
    exhausted_ = true;
  }
}

void SingularityCoding::ensure_bits(int n) const {
  if (dyadic_) return;  // bits beyond the stored block are rule-generated
  if (static_cast<int>(bits_.size()) >= n) return;
  if (param_.singularity_rational) {
    const auto& s = *param_.singularity_rational;
    // Resume the long division from the current remainder.
    std::int64_t r = s.num;
    for (std::uint8_t b : bits_) {
      r *= 2;
      if (b) r -= s.den;
    }
    while (static_cast<int>(bits_.size()) < n) {
      r *= 2;
      std::uint8_t b = r >= s.den;
      if (b) r -= s.den;
      bits_.push_back(b);
    }
    return;
  }
  if (exhausted_)
    throw PrecisionError(
        "singularity coding: float-backed bits exhausted near a dyadic boundary; "
        "pass the parameter as an exact fraction");
}

std::uint8_t SingularityCoding::prefix_bit(int i) const {
  if (i < 1) throw std::invalid_argument("prefix_bit: positions are 1-based");
  if (dyadic_) return i <= static_cast<int>(bits_.size()) ? bits_[i - 1] : 0;
  ensure_bits(i);
  return bits_[i - 1];
}

std::uint8_t SingularityCoding::dual_prefix_bit(int i) const {
  if (!dyadic_) return prefix_bit(i);
  const int s = static_cast<int>(bits_.size());
  if (i < s) return bits_[i - 1];
  if (i == s) return 0;  // canonical ends ...1 0^inf; dual ...0 1^inf
  return 1;
}

std::vector<std::uint8_t> SingularityCoding::prefix(int n) const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[i - 1] = prefix_bit(i);
  return out;
}

std::vector<std::uint8_t> SingularityCoding::dual_prefix(int n) const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[i - 1] = dual_prefix_bit(i);
  return out;
}

bool SingularityCoding::in_g(const std::vector<std::uint8_t>& word) const {
  return in_g(word.data(), static_cast<int>(word.size()));
}

bool SingularityCoding::in_g(const std::uint8_t* word, int n) const {
  if (n < 1) return false;

  if (dyadic_ && n >= divergence_) {
    bool eq = true, eq_dual = true;
    for (int i = 1; i <= n && (eq || eq_dual); ++i) {
      eq = eq && word[i - 1] == prefix_bit(i);
      eq_dual = eq_dual && word[i - 1] == dual_prefix_bit(i);
    }
    return eq || eq_dual;
  }

  ensure_bits(n);
  // word vs prefix: equal, prefix+1 (a01^j -> a10^j) or prefix-1, with the
  // wraparound pair 0^n <-> 1^n.
  int d = 0;  // first mismatch, 1-based; 0 = equal
  for (int i = 1; i <= n; ++i) {
    if (word[i - 1] != prefix_bit(i)) {
      d = i;
      break;
    }
  }
  if (d == 0) return true;
  if (word[d - 1] == 1) {
    // candidate word == prefix + 1 (no wrap): prefix = a 0 1^j, word = a 1 0^j
    bool plus = true;
    for (int i = d + 1; i <= n && plus; ++i) plus = word[i - 1] == 0 && prefix_bit(i) == 1;
    if (plus) return true;
    // wraparound: prefix = 0^n, word = 1^n  (0^n - 1 = 1^n)
    if (d == 1) {
      bool wrap = true;
      for (int i = 1; i <= n && wrap; ++i) wrap = word[i - 1] == 1 && prefix_bit(i) == 0;
      if (wrap) return true;
    }
  } else {
    // candidate word == prefix - 1: prefix = a 1 0^j, word = a 0 1^j
    bool minus = true;
    for (int i = d + 1; i <= n && minus; ++i) minus = word[i - 1] == 1 && prefix_bit(i) == 0;
    if (minus) return true;
    // wraparound: prefix = 1^n, word = 0^n  (1^n + 1 = 0^n)
    if (d == 1) {
      bool wrap = true;
      for (int i = 1; i <= n && wrap; ++i) wrap = word[i - 1] == 0 && prefix_bit(i) == 1;
      if (wrap) return true;
    }
  }
  return false;
}

std::vector<DyadicWord> SingularityCoding::g_n(int n) const {
  if (n < 1 || n > 62) throw std::invalid_argument("g_n: depth out of range");
  std::vector<DyadicWord> out;
  if (dyadic_ && n >= divergence_) {
    out.push_back(DyadicWord(prefix(n)));
    out.push_back(DyadicWord(dual_prefix(n)));
    if (out[0] == out[1]) out.pop_back();
    return out;
  }
  ensure_bits(n);
  std::uint64_t v = 0;
  for (int i = 1; i <= n; ++i) v = (v << 1) | prefix_bit(i);
  const std::uint64_t mask = (n == 62) ? ((std::uint64_t{1} << 62) - 1) : ((std::uint64_t{1} << n) - 1);
  for (std::uint64_t cand : {v, (v + 1) & mask, (v + mask) & mask}) {
    DyadicWord w = DyadicWord::from_value(cand, n);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

double SingularityCoding::forbidden_margin(int m) const {
  if (m < 0) throw std::invalid_argument("forbidden_margin: m must be >= 0");
  const int len = m + 1;
  if (dyadic_) return std::ldexp(1.0, -len);
  if (len > 62) throw std::invalid_argument("forbidden_margin: depth out of range");
  std::uint64_t v = 0;
  for (int i = 1; i <= len; ++i) v = (v << 1) | prefix_bit(i);
  const double left = std::ldexp(static_cast<double>(v), -len);
  const double right = std::ldexp(static_cast<double>(v + 1), -len);
  const double s = param_.singularity;
  return std::min(s - left, right - s);
}

HittingPartition hitting_partition(const SingularityCoding& coding, const DyadicWord& w) {
  const int n = w.length();
  HittingPartition part;
  part.depth.resize(static_cast<std::size_t>(n));
  const std::uint8_t* bits = w.bits().data();
  for (int k = 1; k <= n; ++k) {
    int last = 0;
    for (int j = k; j <= n; ++j) {
      if (coding.in_g(bits + (k - 1), j - k + 1))
        last = j;
      else
        break;  // membership is prefix-closed, so the run is an initial segment
    }
    if (last == 0) throw InternalError("hitting_partition: G_1 must contain every letter");
    part.depth[k - 1] = (last == n) ? HittingPartition::kFull : last;
  }
  return part;
}

int kappa(const SingularityCoding& coding, const DyadicWord& w) {
  const int n = w.length();
  const std::uint8_t* bits = w.bits().data();
  int count = 0;
  for (int k = 1; k <= n; ++k) count += coding.in_g(bits + (k - 1), n - k + 1);
  return count;
}

std::uint64_t ForbiddenAutomaton::state_count() const {
  std::uint64_t c = 0;
  for (std::uint8_t a : admissible) c += a;
  return c;
}

bool ForbiddenAutomaton::word_admissible(const DyadicWord& w) const {
  const int n = w.length();
  const int len = word_length();
  if (n < len) return true;
  std::uint64_t window = 0;
  const std::uint64_t mask = (std::uint64_t{1} << len) - 1;
  for (int i = 1; i <= n; ++i) {
    window = ((window << 1) | w.bit(i)) & mask;
    if (i >= len && !admissible[window]) return false;
  }
  return true;
}

std::uint64_t ForbiddenAutomaton::count_words(int n) const {
  const int len = word_length();
  if (n < 0) throw std::invalid_argument("count_words: negative length");
  if (n < len) return std::uint64_t{1} << n;
  std::vector<std::uint64_t> v(next.size(), 0);
  for (std::size_t s = 0; s < next.size(); ++s) v[s] = admissible[s];
  for (int step = 0; step < n - len; ++step) {
    std::vector<std::uint64_t> nv(next.size(), 0);
    for (std::size_t s = 0; s < next.size(); ++s) {
      if (v[s] == 0) continue;
      for (int a = 0; a < 2; ++a) {
        const std::int64_t t = next[s][a];
        if (t >= 0) nv[static_cast<std::size_t>(t)] += v[s];
      }
    }
    v = std::move(nv);
  }
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

std::vector<std::uint8_t> ForbiddenAutomaton::live_walk(std::uint64_t state, int length) const {
  if (!live[state]) throw InternalError("live_walk: starting state is not live");
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(length));
  std::uint64_t s = state;
  for (int i = 0; i < length; ++i) {
    int a = -1;
    for (int cand = 0; cand < 2; ++cand) {
      const std::int64_t t = next[s][cand];
      if (t >= 0 && live[static_cast<std::size_t>(t)]) {
        a = cand;
        break;
      }
    }
    if (a < 0) throw InternalError("live_walk: live state without live successor");
    out.push_back(static_cast<std::uint8_t>(a));
    s = static_cast<std::uint64_t>(next[s][a]);
  }
  return out;
}

ForbiddenAutomaton forbidden_automaton(const SingularityCoding& coding, int m) {
  if (m < 1 || m > 20) throw std::invalid_argument("forbidden_automaton: m out of range");
  const int len = m + 1;
  ForbiddenAutomaton aut;
  aut.m = m;

  std::uint64_t v = 0;
  for (int i = 1; i <= len; ++i) v = (v << 1) | coding.prefix_bit(i);
  aut.forbidden.push_back(v);
  if (coding.is_dyadic()) {
    std::uint64_t d = 0;
    for (int i = 1; i <= len; ++i) d = (d << 1) | coding.dual_prefix_bit(i);
    if (d != v) aut.forbidden.push_back(d);
  }

  const std::size_t states = std::size_t{1} << len;
  aut.admissible.assign(states, 1);
  for (std::uint64_t f : aut.forbidden) aut.admissible[f] = 0;

  aut.next.assign(states, {-1, -1});
  const std::uint64_t mask = states - 1;
  for (std::uint64_t s = 0; s < states; ++s) {
    if (!aut.admissible[s]) continue;
    for (std::uint64_t a = 0; a < 2; ++a) {
      const std::uint64_t t = ((s << 1) | a) & mask;
      if (aut.admissible[t]) aut.next[s][a] = static_cast<std::int64_t>(t);
    }
  }

  // Live = admissible states from which an infinite admissible walk exists:
  // strip zero-out-degree states to a fixpoint.
  aut.live = aut.admissible;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t s = 0; s < states; ++s) {
      if (!aut.live[s]) continue;
      bool has = false;
      for (int a = 0; a < 2; ++a) {
        const std::int64_t t = aut.next[s][a];
        if (t >= 0 && aut.live[static_cast<std::size_t>(t)]) has = true;
      }
      if (!has) {
        aut.live[s] = 0;
        changed = true;
      }
    }
  }
  return aut;
}

namespace {

// Iterative Tarjan strongly-connected components over admissible states.
struct SccResult {
  std::vector<int> comp;  // -1 for skipped states
  int count = 0;
};

SccResult scc(const ForbiddenAutomaton& aut) {
  const std::size_t n = aut.next.size();
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::size_t> stack;
  int next_index = 0;

  struct Frame {
    std::size_t v;
    int edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!aut.admissible[root] || index[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < 2) {
        const std::int64_t t = aut.next[f.v][f.edge++];
        if (t < 0) continue;
        const auto u = static_cast<std::size_t>(t);
        if (index[u] < 0) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = 1;
          frames.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
      } else {
        const std::size_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            const std::size_t u = stack.back();
            stack.pop_back();
            on_stack[u] = 0;
            res.comp[u] = res.count;
            if (u == v) break;
          }
          ++res.count;
        }
      }
    }
  }
  return res;
}

}  // namespace

MarkovReport markov_check(const ForbiddenAutomaton& aut) {
  MarkovReport report;
  const std::size_t n = aut.next.size();
  const SccResult comps = scc(aut);

  // A component is essential when it carries at least one internal edge.
  std::vector<std::uint8_t> essential(static_cast<std::size_t>(comps.count), 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (comps.comp[s] < 0) continue;
    for (int a = 0; a < 2; ++a) {
      const std::int64_t t = aut.next[s][a];
      if (t >= 0 && comps.comp[static_cast<std::size_t>(t)] == comps.comp[s])
        essential[static_cast<std::size_t>(comps.comp[s])] = 1;
    }
  }
  int essential_comps = 0;
  for (std::uint8_t e : essential) essential_comps += e;
  report.essential_components = essential_comps;
  for (std::size_t s = 0; s < n; ++s)
    if (comps.comp[s] >= 0 && essential[static_cast<std::size_t>(comps.comp[s])])
      ++report.essential_states;
  report.irreducible = essential_comps == 1;

  // Period of the essential part: gcd of (level[u] + 1 - level[v]) over edges
  // inside an essential component, via BFS levels.
  int period = 0;
  for (int cid = 0; cid < comps.count; ++cid) {
    if (!essential[static_cast<std::size_t>(cid)]) continue;
    std::size_t start = n;
    for (std::size_t s = 0; s < n; ++s)
      if (comps.comp[s] == cid) {
        start = s;
        break;
      }
    std::vector<std::int64_t> level(n, -1);
    std::vector<std::size_t> queue{start};
    level[start] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t u = queue[qi];
      for (int a = 0; a < 2; ++a) {
        const std::int64_t t = aut.next[u][a];
        if (t < 0 || comps.comp[static_cast<std::size_t>(t)] != cid) continue;
        const auto v = static_cast<std::size_t>(t);
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t u : queue) {
      for (int a = 0; a < 2; ++a) {
        const std::int64_t t = aut.next[u][a];
        if (t < 0 || comps.comp[static_cast<std::size_t>(t)] != cid) continue;
        std::int64_t diff = level[u] + 1 - level[static_cast<std::size_t>(t)];
        if (diff < 0) diff = -diff;
        period = static_cast<int>(std::gcd(static_cast<std::int64_t>(period), diff));
      }
    }
  }
  report.aperiodic = report.irreducible && period == 1;

  // Spectral radius via power iteration on A + I (shift keeps periodic parts
  // converging); growth of the iterates is averaged in log scale.
  std::vector<double> v(n, 0.0), w(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) v[s] = aut.admissible[s] ? 1.0 : 0.0;
  double log_growth = 0.0;
  const int iters = 4000, tail = 1000;
  double tail_sum = 0.0;
  for (int it = 0; it < iters; ++it) {
    double norm = 0.0;
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      if (v[s] == 0.0) continue;
      w[s] += v[s];  // the +I shift
      for (int a = 0; a < 2; ++a) {
        const std::int64_t t = aut.next[s][a];
        if (t >= 0) w[static_cast<std::size_t>(t)] += v[s];
      }
    }
    for (double x : w) norm = std::max(norm, x);
    if (norm == 0.0) {
      report.spectral_radius = 0.0;
      return report;
    }
    for (std::size_t s = 0; s < n; ++s) v[s] = w[s] / norm;
    log_growth = std::log(norm);
    if (it >= iters - tail) tail_sum += log_growth;
  }
  report.spectral_radius = std::exp(tail_sum / tail) - 1.0;
  return report;
}

DyadicWord extension_search(const SingularityCoding& coding, const DyadicWord& w,
                            ExtensionGoal goal) {
  const int n = w.length();
  if (goal == ExtensionGoal::kNoPrefix) {
    const CircleParameter& p = coding.parameter();
    const bool c_zero = p.rational_form ? p.rational_form->num == 0 : p.c == 0.0;
    const bool c_half =
        p.rational_form ? (p.rational_form->num * 2 == p.rational_form->den) : p.c == 0.5;
    if (c_zero || c_half)
      throw std::invalid_argument("extension_search: no-prefix goal needs c outside {0, 1/2}");
  }

  const double loglog =
      n >= 3 ? 2.0 * std::log2(std::log(static_cast<double>(n)) / std::log(1.5)) : 2.0;
  const int cap = std::max(8, static_cast<int>(std::ceil(loglog)) + 8);

  std::vector<std::uint8_t> buf = w.bits();
  for (int len = 0; len <= cap; ++len) {
    buf.resize(static_cast<std::size_t>(n + len));
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t val = 0; val < total; ++val) {
      for (int i = 0; i < len; ++i)
        buf[static_cast<std::size_t>(n + i)] = (val >> (len - 1 - i)) & 1u;
      bool ok = true;
      for (int k = 1; k <= n && ok; ++k)
        ok = !coding.in_g(buf.data() + (k - 1), n + len - k + 1);
      if (ok && goal == ExtensionGoal::kNoPrefix) {
        for (int k = 1; k <= n + len && ok; ++k) {
          bool is_prefix = true;
          for (int i = k; i <= n + len && is_prefix; ++i)
            is_prefix = buf[static_cast<std::size_t>(i - 1)] == coding.prefix_bit(i - k + 1);
          ok = !is_prefix;
        }
      }
      if (ok) {
        return DyadicWord(
            std::vector<std::uint8_t>(buf.begin() + n, buf.begin() + n + len));
      }
    }
  }
  throw InternalError("extension_search: no extension within the theoretical bound plus slack");
}

}  // namespace tmspectra
