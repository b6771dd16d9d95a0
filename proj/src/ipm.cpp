#include "qpi/ipm.hpp"

#include <bit>

namespace qpi {

Ipm::Ipm(const TextIndex& index) : index_(&index) {
  const auto& sa = index.forward().sa;
  std::vector<std::uint32_t> values(sa.begin(), sa.end());
  positions_ = WaveletMatrix(std::move(values), std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(index.n())))));
}

RankRange Ipm::sa_interval(FactorRef f) const { return index_->locus(f); }

Pos Ipm::count(RankRange locus, Pos first_start, Pos last_start) const {
  if (first_start > last_start) return 0;
  return static_cast<Pos>(positions_.count_between(static_cast<std::size_t>(locus.lo - 1), static_cast<std::size_t>(locus.hi),
                                                   static_cast<std::uint64_t>(first_start - 1),
                                                   static_cast<std::uint64_t>(last_start - 1)));
}

Pos Ipm::next_occurrence(RankRange locus, Pos from) const {
  const auto v = positions_.next_value(static_cast<std::size_t>(locus.lo - 1), static_cast<std::size_t>(locus.hi),
                                       static_cast<std::uint64_t>(std::max<Pos>(from, 1) - 1));
  return v ? static_cast<Pos>(*v) + 1 : 0;
}

ArithProg Ipm::occurrences(RankRange locus, Pos first_start, Pos last_start) const {
  if (first_start > last_start) return {};
  const auto l = static_cast<std::size_t>(locus.lo - 1);
  const auto r = static_cast<std::size_t>(locus.hi);
  const std::size_t below = positions_.count_less(l, r, static_cast<std::uint64_t>(first_start - 1));
  const std::size_t upto = positions_.count_less(l, r, static_cast<std::uint64_t>(last_start));
  if (upto <= below) return {};
  const Pos cnt = static_cast<Pos>(upto - below);
  const Pos first = static_cast<Pos>(positions_.kth_smallest(l, r, below)) + 1;
  if (cnt == 1) return ArithProg::single(first);
  const Pos second = static_cast<Pos>(positions_.kth_smallest(l, r, below + 1)) + 1;
  const Pos diff = second - first;
  if (cnt >= 3) {
    const Pos last = static_cast<Pos>(positions_.kth_smallest(l, r, upto - 1)) + 1;
    if (last != first + (cnt - 1) * diff) {
      throw Error(ErrorCode::Invariant, "occurrences in window do not form an arithmetic progression");
    }
  }
  return {first, diff, cnt};
}

ArithProg Ipm::ipm(FactorRef pattern, FactorRef window) const {
  index_->check_factor(pattern);
  index_->check_factor(window);
  const Pos m = pattern.length();
  if (window.length() > 2 * m) {
    throw Error(ErrorCode::Precondition, "ipm window longer than twice the pattern");
  }
  return occurrences(sa_interval(pattern), window.i, window.j - m + 1);
}

CoverageSet Ipm::cov(FactorRef c, FactorRef f) const {
  index_->check_factor(c);
  index_->check_factor(f);
  CoverageSet out;
  const Pos m = c.length();
  if (m > f.length()) return out;
  const RankRange locus = sa_interval(c);
  const Pos last_start = f.j - m + 1;
  for (Pos t = f.i; t <= last_start; t += m) {
    const ArithProg occ = occurrences(locus, t, std::min(t + m, last_start));
    if (occ.empty()) continue;
    const Interval iv{occ.first() - f.i + 1, occ.last() + m - 1 - f.i + 1};
    if (!out.intervals.empty() && iv.lo <= out.intervals.back().hi + 1) {
      out.intervals.back().hi = std::max(out.intervals.back().hi, iv.hi);
    } else {
      out.intervals.push_back(iv);
    }
  }
  return out;
}

}  // namespace qpi
