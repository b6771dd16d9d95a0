#pragma once

#include <random>
#include <string>

namespace qpi::tools {

/// Uniform random string over the first `sigma` lowercase letters.
inline std::string random_text(std::mt19937_64& rng, std::size_t n, int sigma) {
  std::string t(n, 'a');
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  for (auto& c : t) c = static_cast<char>('a' + pick(rng));
  return t;
}

/// Overlapping copies of a short random word with rare noise symbols, so
/// that long factors tend to have nontrivial covers.
inline std::string covered_text(std::mt19937_64& rng, std::size_t n) {
  const std::size_t w = 2 + rng() % 9;
  const std::string word = random_text(rng, w, 2);
  std::string t = word;
  while (t.size() < n) {
    const std::size_t overlap = rng() % w;
    t.resize(t.size() - std::min(overlap, t.size()));
    t += word;
    if (rng() % 40 == 0) t += static_cast<char>('a' + rng() % 3);
  }
  t.resize(n);
  return t;
}

}  // namespace qpi::tools
