#include "tmspectra/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace tmspectra {

TmPrefix tm_prefix(const CircleParameter& param, std::uint64_t n_entries) {
  if (n_entries < 1) throw std::invalid_argument("tm_prefix: need at least one entry");
  if (n_entries > (std::uint64_t{1} << 28))
    throw std::invalid_argument("tm_prefix: prefix length exceeds memory budget");

  TmPrefix prefix;
  prefix.parameter = param;
  prefix.values.resize(n_entries);

  if (param.rational_form) {
    const auto q = static_cast<std::uint32_t>(param.rational_form->den);
    const auto p = static_cast<std::uint32_t>(param.rational_form->num);
    std::vector<Complex> roots(q);
    for (std::uint32_t k = 0; k < q; ++k)
      roots[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(q));
    std::vector<std::uint32_t> cls(n_entries);
    cls[0] = 0;
    prefix.values[0] = roots[0];
    for (std::uint64_t i = 1; i < n_entries; ++i) {
      std::uint32_t c = cls[i >> 1];
      if (i & 1u) c = (c + p) % q;
      cls[i] = c;
      prefix.values[i] = roots[c];
    }
  } else {
    prefix.values[0] = Complex{1.0, 0.0};
    for (std::uint64_t i = 1; i < n_entries; ++i)
      prefix.values[i] = (i & 1u) ? param.phase * prefix.values[i >> 1] : prefix.values[i >> 1];
  }
  return prefix;
}

std::vector<Complex> rotate_word(const CircleParameter& param, const std::vector<Complex>& word) {
  std::vector<Complex> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out[i] = param.phase * word[i];
  return out;
}

std::vector<Complex> substitute(const CircleParameter& param, const std::vector<Complex>& word,
                                int iterations) {
  if (iterations < 0) throw std::invalid_argument("substitute: negative iteration count");
  std::vector<Complex> cur = word;
  for (int it = 0; it < iterations; ++it) {
    std::vector<Complex> next;
    next.reserve(cur.size() * 2);
    for (const Complex& z : cur) {
      next.push_back(z);
      next.push_back(param.phase * z);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace tmspectra
