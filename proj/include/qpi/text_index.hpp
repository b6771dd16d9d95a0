#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpi/sparse_table.hpp"
#include "qpi/types.hpp"

namespace qpi {

/// Input text with symbols renumbered to a dense alphabet [0, sigma).
class Text {
public:
  explicit Text(std::string_view bytes);

  Pos size() const noexcept { return static_cast<Pos>(symbols_.size()); }
  int alphabet_size() const noexcept { return sigma_; }
  const std::string& bytes() const noexcept { return bytes_; }
  /// 0-based renumbered symbols.
  std::span<const std::int32_t> symbols() const noexcept { return symbols_; }
  /// Renumbered symbol at 1-based position i.
  std::int32_t operator[](Pos i) const { return symbols_[static_cast<std::size_t>(i - 1)]; }
  /// Raw bytes of factor T[f.i..f.j].
  std::string_view view(FactorRef f) const {
    return std::string_view(bytes_).substr(static_cast<std::size_t>(f.i - 1),
                                           static_cast<std::size_t>(f.length()));
  }

private:
  std::string bytes_;
  std::vector<std::int32_t> symbols_;
  int sigma_ = 0;
};

/// Suffix array, its inverse and the adjacent-suffix LCP array. All 0-based:
/// sa[r] is a 0-based start position, lcp[r] = lcp(sa[r-1], sa[r]), lcp[0] = 0.
struct SuffixArrays {
  std::vector<std::int32_t> sa;
  std::vector<std::int32_t> isa;
  std::vector<std::int32_t> lcp;
};

/// Prefix doubling with radix sort, O(n log n); LCP by Kasai's algorithm.
SuffixArrays build_suffix_arrays(std::span<const std::int32_t> s, int sigma);

/// Closed range of 1-based suffix-array ranks.
struct RankRange {
  Pos lo = 1;
  Pos hi = 0;

  Pos size() const noexcept { return hi - lo + 1; }
  friend bool operator==(const RankRange&, const RankRange&) = default;
};

struct RmqResult {
  Pos value = 0;
  Pos position = 0;

  friend bool operator==(const RmqResult&, const RmqResult&) = default;
};

/// Range-minimum over a fixed array with 1-based closed ranges; leftmost on ties.
class RangeMin {
public:
  RangeMin() = default;
  explicit RangeMin(std::vector<Pos> values);

  Pos size() const noexcept { return static_cast<Pos>(table_.size()); }
  RmqResult query(Pos l, Pos r) const;

private:
  MinTable<Pos> table_;
};

/// Text plus suffix arrays of T and of reversed T with O(1) LCE queries.
/// Immutable after construction.
class TextIndex {
public:
  explicit TextIndex(Text text);
  /// Reassembles an index from stored arrays; throws Error(Format) when they are inconsistent.
  TextIndex(Text text, SuffixArrays forward, SuffixArrays reverse);

  const Text& text() const noexcept { return text_; }
  Pos n() const noexcept { return text_.size(); }

  const SuffixArrays& forward() const noexcept { return fwd_; }
  const SuffixArrays& reverse() const noexcept { return rev_; }

  /// 1-based rank r -> 1-based start position.
  Pos sa(Pos r) const { return fwd_.sa[static_cast<std::size_t>(r - 1)] + 1; }
  /// 1-based position -> 1-based rank.
  Pos isa(Pos i) const { return fwd_.isa[static_cast<std::size_t>(i - 1)] + 1; }
  /// lcp of suffixes at ranks r-1 and r (1-based r, 0 for r = 1).
  Pos lcp_at(Pos r) const { return fwd_.lcp[static_cast<std::size_t>(r - 1)]; }

  /// Longest common prefix of T[i..n] and T[j..n]. Throws OutOfRange.
  Pos lcp(Pos i, Pos j) const;
  /// Longest common suffix of T[1..i] and T[1..j]. Throws OutOfRange.
  Pos lcs(Pos i, Pos j) const;

  /// Unchecked variants: positions outside [1..n] yield 0.
  Pos lce(Pos i, Pos j) const noexcept;
  Pos lce_rev(Pos i, Pos j) const noexcept;

  /// Minimum of the adjacent LCP values over ranks [l..r] (1-based).
  Pos min_lcp(Pos l, Pos r) const { return lcp_min_.query(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(r - 1)); }

  /// Ranks of all suffixes having T[f.i..f.j] as a prefix (binary search on LCP minima).
  RankRange locus(FactorRef f) const;

  void check_position(Pos i) const;
  void check_factor(FactorRef f) const;

private:
  void finish();

  Text text_;
  SuffixArrays fwd_;
  SuffixArrays rev_;
  MinTable<std::int32_t> lcp_min_;
  MinTable<std::int32_t> rev_lcp_min_;
};

}  // namespace qpi
