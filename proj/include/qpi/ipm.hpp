#pragma once

#include <vector>

#include "qpi/text_index.hpp"
#include "qpi/types.hpp"
#include "qpi/wavelet_matrix.hpp"

namespace qpi {

struct Interval {
  Pos lo = 0;
  Pos hi = -1;

  Pos length() const noexcept { return hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Cov(C, F): positions of F covered by occurrences of C lying inside F, as
/// sorted maximal intervals of 1-based offsets within F.
struct CoverageSet {
  std::vector<Interval> intervals;

  bool empty() const noexcept { return intervals.empty(); }
  /// True iff [1..len] is covered entirely.
  bool covers_all(Pos len) const noexcept {
    return intervals.size() == 1 && intervals.front().lo == 1 && intervals.front().hi == len;
  }
  /// Length of the covered prefix (0 when offset 1 is uncovered).
  Pos covered_prefix() const noexcept {
    return !intervals.empty() && intervals.front().lo == 1 ? intervals.front().hi : 0;
  }
};

/// Internal pattern matching over a TextIndex: suffix-array loci plus a
/// wavelet matrix over the suffix array for range-successor queries.
class Ipm {
public:
  explicit Ipm(const TextIndex& index);

  const TextIndex& index() const noexcept { return *index_; }

  /// Ranks of all suffixes having T[f.i..f.j] as a prefix.
  RankRange sa_interval(FactorRef f) const;

  /// Occurrences of `pattern` that lie entirely inside `window`, which may be
  /// at most twice as long as the pattern. Throws Error(Precondition) otherwise.
  ArithProg ipm(FactorRef pattern, FactorRef window) const;

  /// Same as ipm() with the locus precomputed; start positions restricted to
  /// [first_start, last_start]. The caller guarantees the result is a progression.
  ArithProg occurrences(RankRange locus, Pos first_start, Pos last_start) const;

  /// Number of occurrences of the locus with start in [first_start, last_start].
  Pos count(RankRange locus, Pos first_start, Pos last_start) const;
  /// Leftmost occurrence start >= from, or 0 if none.
  Pos next_occurrence(RankRange locus, Pos from) const;

  CoverageSet cov(FactorRef c, FactorRef f) const;

private:
  const TextIndex* index_;
  WaveletMatrix positions_;
};

}  // namespace qpi
