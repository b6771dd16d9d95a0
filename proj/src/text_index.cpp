#include "qpi/text_index.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace qpi {

Text::Text(std::string_view bytes) : bytes_(bytes) {
  if (bytes.empty()) throw Error(ErrorCode::EmptyText, "text is empty");
  std::array<std::int32_t, 256> code{};
  code.fill(-1);
  for (unsigned char c : bytes) code[c] = 0;
  for (auto& c : code) {
    if (c == 0) c = sigma_++;
  }
  symbols_.reserve(bytes.size());
  for (unsigned char c : bytes) symbols_.push_back(code[c]);
}

SuffixArrays build_suffix_arrays(std::span<const std::int32_t> s, int sigma) {
  const std::size_t n = s.size();
  SuffixArrays out;
  auto& sa = out.sa;
  sa.resize(n);
  std::vector<std::int32_t> rank(s.begin(), s.end());
  std::vector<std::int32_t> tmp(n);
  std::vector<std::int32_t> bucket(std::max<std::size_t>(n, static_cast<std::size_t>(sigma)) + 1);

  auto counting_sort = [&](int classes) {
    std::fill(bucket.begin(), bucket.begin() + classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++bucket[static_cast<std::size_t>(rank[i]) + 1];
    for (int c = 0; c < classes; ++c) bucket[static_cast<std::size_t>(c) + 1] += bucket[static_cast<std::size_t>(c)];
    for (std::size_t t = 0; t < n; ++t) {
      const auto i = static_cast<std::size_t>(tmp[t]);
      sa[static_cast<std::size_t>(bucket[static_cast<std::size_t>(rank[i])]++)] = static_cast<std::int32_t>(i);
    }
  };

  std::iota(tmp.begin(), tmp.end(), 0);
  counting_sort(sigma);
  std::vector<std::int32_t> next_rank(n);
  auto rerank = [&](std::size_t k) {
    // Classes of (rank[i], rank[i+k]); a missing second half compares lowest.
    auto second = [&](std::size_t i) { return i + k < n ? rank[i + k] : -1; };
    int cls = 0;
    next_rank[static_cast<std::size_t>(sa[0])] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      const auto a = static_cast<std::size_t>(sa[r - 1]);
      const auto b = static_cast<std::size_t>(sa[r]);
      if (rank[a] != rank[b] || (k > 0 && second(a) != second(b))) ++cls;
      next_rank[b] = cls;
    }
    rank.swap(next_rank);
    return cls + 1;
  };
  int classes = rerank(0);
  for (std::size_t k = 1; static_cast<std::size_t>(classes) < n; k <<= 1) {
    std::size_t p = 0;
    for (std::size_t i = n - std::min(n, k); i < n; ++i) tmp[p++] = static_cast<std::int32_t>(i);
    for (std::size_t r = 0; r < n; ++r) {
      if (static_cast<std::size_t>(sa[r]) >= k) tmp[p++] = static_cast<std::int32_t>(static_cast<std::size_t>(sa[r]) - k);
    }
    counting_sort(classes);
    classes = rerank(k);
  }

  out.isa.resize(n);
  for (std::size_t r = 0; r < n; ++r) out.isa[static_cast<std::size_t>(sa[r])] = static_cast<std::int32_t>(r);

  out.lcp.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(out.isa[i]);
    if (r == 0) {
      h = 0;
      continue;
    }
    const auto j = static_cast<std::size_t>(sa[r - 1]);
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    out.lcp[r] = static_cast<std::int32_t>(h);
    if (h > 0) --h;
  }
  return out;
}

RangeMin::RangeMin(std::vector<Pos> values) : table_(std::move(values)) {}

RmqResult RangeMin::query(Pos l, Pos r) const {
  if (l < 1 || r > size() || l > r) {
    throw Error(ErrorCode::OutOfRange, "rmq range [" + std::to_string(l) + ", " + std::to_string(r) +
                                           "] invalid for array of size " + std::to_string(size()));
  }
  const std::size_t at = table_.arg(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(r - 1));
  return {table_[at], static_cast<Pos>(at) + 1};
}

TextIndex::TextIndex(Text text) : text_(std::move(text)) {
  fwd_ = build_suffix_arrays(text_.symbols(), text_.alphabet_size());
  std::vector<std::int32_t> reversed(text_.symbols().rbegin(), text_.symbols().rend());
  rev_ = build_suffix_arrays(reversed, text_.alphabet_size());
  finish();
}

namespace {

void validate(const SuffixArrays& a, std::span<const std::int32_t> s, const char* which) {
  const std::size_t n = s.size();
  if (a.sa.size() != n || a.isa.size() != n || a.lcp.size() != n) {
    throw Error(ErrorCode::Format, std::string(which) + " suffix arrays have wrong length");
  }
  for (std::size_t r = 0; r < n; ++r) {
    const auto x = a.sa[r];
    if (x < 0 || static_cast<std::size_t>(x) >= n || a.isa[static_cast<std::size_t>(x)] != static_cast<std::int32_t>(r)) {
      throw Error(ErrorCode::Format, std::string(which) + " suffix array is not a permutation matching its inverse");
    }
  }
  // Kasai over the stored order, then adjacent suffixes must be increasing.
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(a.isa[i]);
    if (r == 0) {
      if (a.lcp[0] != 0) throw Error(ErrorCode::Format, std::string(which) + " lcp array is inconsistent");
      h = 0;
      continue;
    }
    const auto j = static_cast<std::size_t>(a.sa[r - 1]);
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    const bool ordered = j + h == n || (i + h < n && s[j + h] < s[i + h]);
    if (!ordered || a.lcp[r] != static_cast<std::int32_t>(h)) {
      throw Error(ErrorCode::Format, std::string(which) + " suffix or lcp array is not sorted");
    }
    if (h > 0) --h;
  }
}

}  // namespace

TextIndex::TextIndex(Text text, SuffixArrays forward, SuffixArrays reverse)
    : text_(std::move(text)), fwd_(std::move(forward)), rev_(std::move(reverse)) {
  validate(fwd_, text_.symbols(), "forward");
  std::vector<std::int32_t> reversed(text_.symbols().rbegin(), text_.symbols().rend());
  validate(rev_, reversed, "reverse");
  finish();
}

void TextIndex::finish() {
  lcp_min_ = MinTable<std::int32_t>(fwd_.lcp);
  rev_lcp_min_ = MinTable<std::int32_t>(rev_.lcp);
}

void TextIndex::check_position(Pos i) const {
  if (i < 1 || i > n()) {
    throw Error(ErrorCode::OutOfRange, "position " + std::to_string(i) + " outside [1, " + std::to_string(n()) + "]");
  }
}

void TextIndex::check_factor(FactorRef f) const {
  if (f.i < 1 || f.j > n() || f.i > f.j) {
    throw Error(ErrorCode::OutOfRange, "factor [" + std::to_string(f.i) + ", " + std::to_string(f.j) +
                                           "] invalid for text of length " + std::to_string(n()));
  }
}

RankRange TextIndex::locus(FactorRef f) const {
  const auto& idx = *this;
  idx.check_factor(f);
  const Pos m = f.length();
  const Pos home = idx.isa(f.i);
  // Smallest lo with min lcp over (lo, home] >= m.
  Pos lo = home;
  {
    Pos left = 1;
    Pos right = home;
    while (left < right) {
      const Pos mid = left + (right - left) / 2;
      if (idx.min_lcp(mid + 1, home) >= m) {
        right = mid;
      } else {
        left = mid + 1;
      }
    }
    lo = left;
  }
  Pos hi = home;
  {
    Pos left = home;
    Pos right = idx.n();
    while (left < right) {
      const Pos mid = left + (right - left + 1) / 2;
      if (idx.min_lcp(home + 1, mid) >= m) {
        left = mid;
      } else {
        right = mid - 1;
      }
    }
    hi = left;
  }
  return {lo, hi};
}

Pos TextIndex::lcp(Pos i, Pos j) const {
  check_position(i);
  check_position(j);
  return lce(i, j);
}

Pos TextIndex::lcs(Pos i, Pos j) const {
  check_position(i);
  check_position(j);
  return lce_rev(i, j);
}

Pos TextIndex::lce(Pos i, Pos j) const noexcept {
  const Pos len = n();
  if (i < 1 || j < 1 || i > len || j > len) return 0;
  if (i == j) return len - i + 1;
  auto ri = static_cast<std::size_t>(fwd_.isa[static_cast<std::size_t>(i - 1)]);
  auto rj = static_cast<std::size_t>(fwd_.isa[static_cast<std::size_t>(j - 1)]);
  if (ri > rj) std::swap(ri, rj);
  return lcp_min_.query(ri + 1, rj);
}

Pos TextIndex::lce_rev(Pos i, Pos j) const noexcept {
  const Pos len = n();
  if (i < 1 || j < 1 || i > len || j > len) return 0;
  if (i == j) return i;
  auto ri = static_cast<std::size_t>(rev_.isa[static_cast<std::size_t>(len - i)]);
  auto rj = static_cast<std::size_t>(rev_.isa[static_cast<std::size_t>(len - j)]);
  if (ri > rj) std::swap(ri, rj);
  return rev_lcp_min_.query(ri + 1, rj);
}

}  // namespace qpi
