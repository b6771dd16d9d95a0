#include "qpi/quasiperiod.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qpi/periods.hpp"

namespace qpi {

namespace {

bool covers_range(const CoverageSet& cs, Pos lo, Pos hi) {
  return std::any_of(cs.intervals.begin(), cs.intervals.end(),
                     [&](const Interval& iv) { return iv.lo <= lo && iv.hi >= hi; });
}

void check_length(Pos l, FactorRef s) {
  if (l < 1 || l > s.length()) {
    throw Error(ErrorCode::OutOfRange,
                "length " + std::to_string(l) + " outside [1, " + std::to_string(s.length()) + "]");
  }
}

// Ascending minima of the border progressions of S, ending with |S|.
std::vector<Pos> active_candidates(const Index& idx, FactorRef s) {
  const BorderDecomposition b = borders(idx.ipm(), s);
  std::vector<Pos> out;
  for (const auto& a : b.progressions) out.push_back(a.first());
  if (out.empty() || out.back() != s.length()) out.push_back(s.length());
  return out;
}

void check_aperiodic(const Index& idx, FactorRef s, Pos c) {
  if (!invariant_checks()) return;
  const Pos p = shortest_period(idx.ipm(), s.prefix(c));
  if (2 * p <= c) throw Error(ErrorCode::Invariant, "shortest cover is periodic");
}

class CandidateVerifier {
public:
  CandidateVerifier(const Index& idx, FactorRef s, CoverStats* stats) : idx_(idx), s_(s), stats_(stats) {
    const double n = static_cast<double>(std::max<Pos>(idx.n(), 2));
    cap_ = static_cast<int>(std::ceil(std::log2(std::max(1.0, std::log2(n))))) + 2;
  }

  std::vector<Pos> run(const std::vector<Pos>& b, int depth) {
    if (stats_ != nullptr) stats_->max_depth = std::max(stats_->max_depth, depth);
    if (depth > cap_) {
      if (stats_ != nullptr) stats_->fell_back = true;
      std::vector<Pos> out;
      for (Pos x : b) {
        if (test(x, s_.length())) out.push_back(x);
      }
      return out;
    }

    // link[t]: S[1..b_t] covers S[1..b_{t+1}].
    const std::size_t k = b.size();
    std::vector<bool> link(k, false);
    bool single = true;
    for (std::size_t t = 0; t + 1 < k; ++t) {
      link[t] = test(b[t], b[t + 1]);
      single = single && link[t];
    }
    if (single) return b;

    // Chain membership: chain_pos[t] is the index of b_t within its chain.
    std::vector<std::size_t> chain_pos(k, 0);
    for (std::size_t t = 1; t < k; ++t) chain_pos[t] = link[t - 1] ? chain_pos[t - 1] + 1 : 0;
    auto chain_last = [&](std::size_t t) { return t + 1 == k || !link[t]; };

    std::vector<Pos> refined;
    for (std::size_t t = 0; t < k; ++t) {
      if (b[t] == s_.length() || (chain_pos[t] % 2 == 0 && !chain_last(t))) refined.push_back(b[t]);
    }
    std::vector<Pos> confirmed = run(refined, depth + 1);

    std::vector<Pos> out = confirmed;
    for (std::size_t t = 0; t < k; ++t) {
      if (std::binary_search(refined.begin(), refined.end(), b[t])) continue;
      if (chain_pos[t] == 0 || !std::binary_search(confirmed.begin(), confirmed.end(), b[t - 1])) continue;
      const Pos next = *std::upper_bound(confirmed.begin(), confirmed.end(), b[t]);
      if (test(b[t], next)) out.push_back(b[t]);
    }
    std::sort(out.begin(), out.end());

    // Covers within each chain form a prefix of it, and a chain not ending
    // with |S| has a non-cover last element.
    for (std::size_t t = 0; t < k; ++t) {
      const bool in = std::binary_search(out.begin(), out.end(), b[t]);
      if (in && chain_pos[t] > 0 && !std::binary_search(out.begin(), out.end(), b[t - 1])) {
        throw Error(ErrorCode::Invariant, "covers do not form a prefix of a chain");
      }
      if (in && chain_last(t) && b[t] != s_.length()) {
        throw Error(ErrorCode::Invariant, "last element of a chain is a cover");
      }
    }
    return out;
  }

private:
  bool test(Pos l, Pos len) {
    if (stats_ != nullptr) ++stats_->is_cover_calls;
    return is_cover(idx_, l, s_.prefix(len));
  }

  const Index& idx_;
  FactorRef s_;
  CoverStats* stats_;
  int cap_ = 0;
};

void append_merged(std::vector<ArithProg>& out, const ArithProg& y) {
  if (y.empty()) return;
  if (!out.empty()) {
    ArithProg& x = out.back();
    if (x.count >= 2 && y.first() == x.last() + x.diff && (y.count == 1 || y.diff == x.diff)) {
      x.count += y.count;
      return;
    }
    if (x.count == 1 && y.count >= 2 && x.start + y.diff == y.first()) {
      x = {x.start, y.diff, y.count + 1};
      return;
    }
  }
  out.push_back(y);
}

}  // namespace

bool is_cover(const Index& idx, Pos l, FactorRef s) {
  const auto& ti = idx.text_index();
  ti.check_factor(s);
  check_length(l, s);
  const Pos len = s.length();
  if (l == len) return true;
  if (ti.lce(s.i, s.j - l + 1) < l) return false;

  const FactorRef c = s.prefix(l);
  const auto& ipm = idx.ipm();
  const auto& seeds = idx.seeds();
  const int b = block_exponent(l);
  const Pos block = Pos{1} << b;
  const Pos i1 = (s.i - 1 + block - 1) / block * block + 1;
  const Pos j1 = s.j / block * block;
  if (i1 + block - 1 > j1) return ipm.cov(c, s).covers_all(len);

  // Canonical decomposition of T[i1..j1] into basic factors of length >= 2^b.
  Pos pos = i1;
  while (pos <= j1) {
    int k = std::countr_zero(static_cast<std::uint64_t>(pos - 1));
    if (pos == 1) k = 62;
    while (pos + (Pos{1} << k) - 1 > j1) --k;
    const BasicInterval f{pos, k};
    if (!seeds.seeded_basic(c, f)) return false;
    if (pos > i1 && !seeds.test_concat(c, i1, pos - 1, f.last())) return false;
    pos = f.last() + 1;
  }

  if (!covers_range(ipm.cov(c, {s.i, i1 + 2 * l - 2}), 1, i1 + l - s.i)) return false;
  const Pos r0 = j1 - 2 * l + 2;
  return covers_range(ipm.cov(c, {r0, s.j}), l, s.j - r0 + 1);
}

Pos covered_pref(const Index& idx, Pos l, FactorRef s) { return idx.seeds().covered_pref(l, s); }

Pos min_cover(const Index& idx, FactorRef s) {
  idx.text_index().check_factor(s);
  const std::vector<Pos> c = active_candidates(idx, s);
  std::size_t t = 0;
  while (true) {
    // Candidates before t are not covers of S.
    const Pos p = covered_pref(idx, c[t], s);
    if (p == s.length()) {
      check_aperiodic(idx, s, c[t]);
      return c[t];
    }
    while (c[t] <= p) ++t;
  }
}

Pos min_cover_simple(const Index& idx, FactorRef s) {
  idx.text_index().check_factor(s);
  for (Pos c : active_candidates(idx, s)) {
    if (is_cover(idx, c, s)) return c;
  }
  throw Error(ErrorCode::Invariant, "no cover found among border candidates");
}

std::vector<Pos> covers_of_candidates(const Index& idx, const std::vector<Pos>& b, FactorRef s, CoverStats* stats) {
  const auto& ti = idx.text_index();
  ti.check_factor(s);
  const Pos len = s.length();
  if (b.empty() || b.back() != len || !std::is_sorted(b.begin(), b.end()) ||
      std::adjacent_find(b.begin(), b.end()) != b.end()) {
    throw Error(ErrorCode::Precondition, "candidates must be strictly ascending and end with |S|");
  }
  for (Pos x : b) {
    if (x < 1 || ti.lce(s.i, s.j - x + 1) < x) {
      throw Error(ErrorCode::Precondition, "candidate " + std::to_string(x) + " is not a border length");
    }
  }
  return CandidateVerifier(idx, s, stats).run(b, 0);
}

CoverAnswer all_covers(const Index& idx, FactorRef s, CoverStats* stats) {
  idx.text_index().check_factor(s);
  const BorderDecomposition bd = borders(idx.ipm(), s);
  std::vector<std::vector<Pos>> tested;
  std::vector<Pos> cands;
  for (const auto& a : bd.progressions) {
    tested.push_back(idx.runs().periodic_candidates(s, a));
    cands.insert(cands.end(), tested.back().begin(), tested.back().end());
  }
  cands.push_back(s.length());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  const std::vector<Pos> covers = covers_of_candidates(idx, cands, s, stats);
  CoverAnswer out;
  for (std::size_t t = 0; t < bd.progressions.size(); ++t) {
    append_merged(out.progressions, cut_progression(bd.progressions[t], tested[t], covers));
  }
  return out;
}

}  // namespace qpi
