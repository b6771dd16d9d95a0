#pragma once

#include <vector>

#include "qpi/index.hpp"
#include "qpi/types.hpp"

namespace qpi {

/// Cover lengths of S as disjoint ascending progressions; |S| is always included.
struct CoverAnswer {
  std::vector<ArithProg> progressions;

  std::vector<Pos> lengths() const { return expand(progressions); }
};

/// Counters from one run of the candidate-verification recursion.
struct CoverStats {
  int max_depth = 0;
  int is_cover_calls = 0;
  bool fell_back = false;
};

/// Whether S[1..l] is a cover of S.
bool is_cover(const Index& idx, Pos l, FactorRef s);

/// Length of the longest prefix of S covered by S[1..l].
Pos covered_pref(const Index& idx, Pos l, FactorRef s);

/// Length of the shortest cover of S.
Pos min_cover(const Index& idx, FactorRef s);

/// Same answer as min_cover, testing the minimum of every border progression with is_cover.
Pos min_cover_simple(const Index& idx, FactorRef s);

/// The elements b of B (ascending border lengths of S, containing |S|) such
/// that S[1..b] covers S.
std::vector<Pos> covers_of_candidates(const Index& idx, const std::vector<Pos>& b, FactorRef s,
                                      CoverStats* stats = nullptr);

CoverAnswer all_covers(const Index& idx, FactorRef s, CoverStats* stats = nullptr);

}  // namespace qpi
