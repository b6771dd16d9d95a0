#include "qpi/oracle.hpp"

#include <algorithm>
#include <set>

namespace qpi::oracle {

namespace {

void check_cap(std::string_view s, std::size_t cap) {
  if (s.size() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "oracle input of length " + std::to_string(s.size()) + " exceeds cap " + std::to_string(cap));
  }
}

bool has_period(std::string_view s, std::size_t p) {
  for (std::size_t x = 0; x + p < s.size(); ++x) {
    if (s[x] != s[x + p]) return false;
  }
  return true;
}

// Length of the covered prefix of s using occurrences of s[0..l).
std::size_t covered_prefix(std::string_view s, std::size_t l) {
  const std::string_view c = s.substr(0, l);
  std::size_t reach = 0;  // positions [0, reach) are covered
  for (std::size_t x = 0; x + l <= s.size(); ++x) {
    if (x > reach) break;
    if (s.compare(x, l, c) == 0) reach = std::max(reach, x + l);
  }
  return reach;
}

}  // namespace

std::vector<Pos> naive_occurrences(std::string_view pattern, std::string_view text) {
  std::vector<Pos> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  for (std::size_t x = 0; x + pattern.size() <= text.size(); ++x) {
    if (text.compare(x, pattern.size(), pattern) == 0) out.push_back(static_cast<Pos>(x) + 1);
  }
  return out;
}

std::vector<Pos> naive_borders(std::string_view s, std::size_t cap) {
  check_cap(s, cap);
  std::vector<Pos> out;
  for (std::size_t b = 1; b <= s.size(); ++b) {
    if (s.substr(0, b) == s.substr(s.size() - b)) out.push_back(static_cast<Pos>(b));
  }
  return out;
}

std::vector<Pos> naive_periods(std::string_view s, std::size_t cap) {
  check_cap(s, cap);
  std::vector<Pos> out;
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (has_period(s, p)) out.push_back(static_cast<Pos>(p));
  }
  return out;
}

Pos naive_covered_pref(std::string_view s, Pos l, std::size_t cap) {
  check_cap(s, cap);
  if (l < 1 || static_cast<std::size_t>(l) > s.size()) throw Error(ErrorCode::OutOfRange, "prefix length out of range");
  return static_cast<Pos>(covered_prefix(s, static_cast<std::size_t>(l)));
}

bool naive_is_cover(std::string_view s, Pos l, std::size_t cap) {
  return naive_covered_pref(s, l, cap) == static_cast<Pos>(s.size()) &&
         s.substr(s.size() - static_cast<std::size_t>(l)) == s.substr(0, static_cast<std::size_t>(l));
}

std::vector<Pos> naive_covers(std::string_view s, std::size_t cap) {
  check_cap(s, cap);
  std::vector<Pos> out;
  for (std::size_t c = 1; c <= s.size(); ++c) {
    if (s.substr(0, c) != s.substr(s.size() - c)) continue;
    if (covered_prefix(s, c) == s.size()) out.push_back(static_cast<Pos>(c));
  }
  return out;
}

Pos naive_min_cover(std::string_view s, std::size_t cap) { return naive_covers(s, cap).front(); }

bool naive_is_seed(std::string_view c, std::string_view u) {
  const std::size_t m = c.size();
  if (m == 0 || m > u.size()) return false;
  // Coverage of u by occurrences of c placed at offsets -m+1 .. |u|-1 that
  // agree with u wherever they overlap it.
  std::vector<int> diff(u.size() + 1, 0);
  bool inside = false;
  for (std::ptrdiff_t x = -static_cast<std::ptrdiff_t>(m) + 1; x < static_cast<std::ptrdiff_t>(u.size()); ++x) {
    bool ok = true;
    for (std::size_t t = 0; t < m && ok; ++t) {
      const std::ptrdiff_t y = x + static_cast<std::ptrdiff_t>(t);
      if (y >= 0 && y < static_cast<std::ptrdiff_t>(u.size())) ok = u[static_cast<std::size_t>(y)] == c[t];
    }
    if (!ok) continue;
    if (x >= 0 && x + static_cast<std::ptrdiff_t>(m) <= static_cast<std::ptrdiff_t>(u.size())) inside = true;
    const std::size_t lo = static_cast<std::size_t>(std::max<std::ptrdiff_t>(x, 0));
    const std::size_t hi = static_cast<std::size_t>(std::min<std::ptrdiff_t>(x + static_cast<std::ptrdiff_t>(m), static_cast<std::ptrdiff_t>(u.size())));
    ++diff[lo];
    --diff[hi];
  }
  if (!inside) return false;
  int depth = 0;
  for (std::size_t y = 0; y < u.size(); ++y) {
    depth += diff[y];
    if (depth == 0) return false;
  }
  return true;
}

std::vector<std::string> naive_seeds(std::string_view s, std::size_t max_len, std::size_t cap) {
  check_cap(s, cap);
  std::set<std::pair<std::size_t, std::string>> found;
  for (std::size_t len = 1; len <= std::min(max_len, s.size()); ++len) {
    for (std::size_t x = 0; x + len <= s.size(); ++x) {
      std::string c(s.substr(x, len));
      if (found.count({len, c}) == 0 && naive_is_seed(c, s)) found.insert({len, std::move(c)});
    }
  }
  std::vector<std::string> out;
  for (auto& [len, c] : found) out.push_back(c);
  return out;
}

std::vector<NaiveRun> naive_runs(std::string_view s, std::size_t cap) {
  check_cap(s, cap);
  const std::size_t n = s.size();
  std::vector<NaiveRun> out;
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t x = 0;
    while (x + p < n) {
      if (s[x] != s[x + p]) {
        ++x;
        continue;
      }
      std::size_t y = x;
      while (y + p < n && s[y] == s[y + p]) ++y;
      // s[x .. y+p-1] is a maximal p-periodic factor.
      const std::size_t len = y - x + p;
      if (len >= 2 * p) {
        const std::string_view f = s.substr(x, len);
        bool shortest = true;
        for (std::size_t q = 1; q < p && shortest; ++q) shortest = !has_period(f, q);
        if (shortest) out.push_back({static_cast<Pos>(x) + 1, static_cast<Pos>(x + len), static_cast<Pos>(p)});
      }
      x = y + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qpi::oracle
