#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpi/types.hpp"

// Brute-force reference answers computed straight from the definitions. Used
// by tests and the selftest command only.
namespace qpi::oracle {

inline constexpr std::size_t kDefaultCap = 4096;

struct NaiveRun {
  Pos a = 0;
  Pos b = 0;
  Pos p = 0;

  friend bool operator==(const NaiveRun&, const NaiveRun&) = default;
  friend auto operator<=>(const NaiveRun&, const NaiveRun&) = default;
};

/// Ascending lengths c such that s[1..c] covers s (|s| included).
std::vector<Pos> naive_covers(std::string_view s, std::size_t cap = kDefaultCap);
Pos naive_min_cover(std::string_view s, std::size_t cap = kDefaultCap);
bool naive_is_cover(std::string_view s, Pos l, std::size_t cap = kDefaultCap);
/// Longest prefix of s covered by occurrences of s[1..l] inside s.
Pos naive_covered_pref(std::string_view s, Pos l, std::size_t cap = kDefaultCap);

/// Whether c is a seed of u: a factor of u covering some superstring of u.
bool naive_is_seed(std::string_view c, std::string_view u);
/// Distinct seeds of s no longer than max_len, sorted by (length, text).
std::vector<std::string> naive_seeds(std::string_view s, std::size_t max_len, std::size_t cap = kDefaultCap);

/// Ascending border lengths of s, |s| included.
std::vector<Pos> naive_borders(std::string_view s, std::size_t cap = kDefaultCap);
/// Ascending periods of s, |s| included.
std::vector<Pos> naive_periods(std::string_view s, std::size_t cap = kDefaultCap);
/// All runs of s (1-based), sorted by (a, b, p).
std::vector<NaiveRun> naive_runs(std::string_view s, std::size_t cap = kDefaultCap);
/// Start positions (1-based) of pattern inside text.
std::vector<Pos> naive_occurrences(std::string_view pattern, std::string_view text);

}  // namespace qpi::oracle
