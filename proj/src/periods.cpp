#include "qpi/periods.hpp"

#include <algorithm>

namespace qpi {

namespace {

// Border lengths in [2^k, 2^{k+1}) come from occurrences of the length-2^k
// prefix of S starting in the last 2^{k+1} - 1 positions of S. All those
// occurrences share one d-periodic region, so validity of a candidate is
// decided by comparing the d-periodic extents from i and from the candidate.
void dyadic_level(const Ipm& ipm, FactorRef s, Pos block, std::vector<ArithProg>& out) {
  const auto& idx = ipm.index();
  const Pos i = s.i;
  const Pos j = s.j;
  const Pos len = s.length();
  const Pos bmax = std::min(2 * block - 1, len);
  const ArithProg occ = ipm.occurrences(ipm.sa_interval({i, i + block - 1}), j - bmax + 1, j - block + 1);
  if (occ.empty()) return;
  if (occ.count == 1) {
    const Pos x = occ.start;
    const Pos b = j - x + 1;
    if (idx.lce(i, x) >= b) out.push_back(ArithProg::single(b));
    return;
  }
  const Pos d = occ.diff;
  const Pos from_i = d + idx.lce(i, i + d);
  const Pos x0 = occ.start;
  const Pos region_end = x0 + d + idx.lce(x0, x0 + d) - 1;
  if (j <= region_end) {
    // Valid candidates: x >= j - from_i + 1.
    const Pos threshold = j - from_i + 1;
    Pos skip = 0;
    if (threshold > x0) skip = (threshold - x0 + d - 1) / d;
    if (skip >= occ.count) return;
    const Pos kept = occ.count - skip;
    const Pos b_min = j - occ.last() + 1;
    out.push_back(kept == 1 ? ArithProg::single(b_min) : ArithProg{b_min, d, kept});
    return;
  }
  const Pos x_star = region_end - from_i + 1;
  if (x_star < x0 || x_star > occ.last() || (x_star - x0) % d != 0) return;
  const Pos b = j - x_star + 1;
  if (idx.lce(i, x_star) >= b) out.push_back(ArithProg::single(b));
}

bool try_merge(ArithProg& x, const ArithProg& y) {
  if (y.count >= 2) {
    const Pos p = y.diff;
    if (x.count >= 2 && x.diff == p && x.last() + p == y.first()) {
      x.count += y.count;
      return true;
    }
    if (x.count == 1 && x.start >= p && x.start + p == y.first()) {
      x = {x.start, p, 1 + y.count};
      return true;
    }
    return false;
  }
  if (x.count >= 2 && x.last() + x.diff == y.start) {
    ++x.count;
    return true;
  }
  return false;
}

}  // namespace

BorderDecomposition borders(const Ipm& ipm, FactorRef s) {
  ipm.index().check_factor(s);
  std::vector<ArithProg> raw;
  for (Pos block = 1; block <= s.length(); block <<= 1) dyadic_level(ipm, s, block, raw);
  BorderDecomposition out;
  for (const auto& a : raw) {
    if (out.progressions.empty() || !try_merge(out.progressions.back(), a)) out.progressions.push_back(a);
  }
  return out;
}

std::vector<ArithProg> periods(const Ipm& ipm, FactorRef s) {
  const BorderDecomposition b = borders(ipm, s);
  const Pos len = s.length();
  std::vector<ArithProg> out;
  for (auto it = b.progressions.rbegin(); it != b.progressions.rend(); ++it) {
    ArithProg a = *it;
    if (a.last() == len) --a.count;  // border |S| is period 0
    if (a.count == 0) continue;
    out.push_back({len - a.last(), a.count == 1 ? 0 : a.diff, a.count});
  }
  out.push_back(ArithProg::single(len));
  return out;
}

Pos shortest_period(const Ipm& ipm, FactorRef s) {
  const BorderDecomposition b = borders(ipm, s);
  const Pos len = s.length();
  const ArithProg& top = b.progressions.back();
  if (top.count >= 2) return len - top.at(top.count - 2);
  if (b.progressions.size() >= 2) return len - b.progressions[b.progressions.size() - 2].last();
  return len;
}

}  // namespace qpi
