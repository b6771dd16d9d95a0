#pragma once

#include <vector>

#include "qpi/ipm.hpp"
#include "qpi/types.hpp"

namespace qpi {

/// Border lengths of a factor S split into ascending arithmetic progressions.
/// Each progression is a singleton, or has difference p such that every
/// element but its minimum is a periodic border with shortest period p.
/// |S| itself is always listed.
struct BorderDecomposition {
  std::vector<ArithProg> progressions;

  std::vector<Pos> lengths() const { return expand(progressions); }
};

/// All border lengths of S (including |S|), O(log |S|) IPM queries.
BorderDecomposition borders(const Ipm& ipm, FactorRef s);

/// All periods of S (including |S|) as ascending progressions.
std::vector<ArithProg> periods(const Ipm& ipm, FactorRef s);

/// Shortest period of S.
Pos shortest_period(const Ipm& ipm, FactorRef s);

}  // namespace qpi
