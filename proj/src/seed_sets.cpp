#include "qpi/seed_sets.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <set>

#include "qpi/sparse_table.hpp"

namespace qpi {

namespace {

// Start positions of one locus with the multiset of gaps between neighbours.
struct OccurrenceSet {
  std::set<std::int32_t> starts;
  std::multiset<std::int32_t> gaps;

  void insert(std::int32_t v) {
    auto next = starts.lower_bound(v);
    if (next != starts.end() && next != starts.begin()) {
      auto prev = std::prev(next);
      gaps.erase(gaps.find(*next - *prev));
    }
    if (next != starts.end()) gaps.insert(*next - v);
    if (next != starts.begin()) gaps.insert(v - *std::prev(next));
    starts.insert(next, v);
  }

  std::int32_t max_gap() const { return gaps.empty() ? 0 : *gaps.rbegin(); }
};

using OccurrencePtr = std::unique_ptr<OccurrenceSet>;

OccurrencePtr merge(OccurrencePtr a, OccurrencePtr b) {
  if (!a) return b;
  if (!b) return a;
  if (a->starts.size() < b->starts.size()) std::swap(a, b);
  for (std::int32_t v : b->starts) a->insert(v);
  return a;
}

OccurrencePtr singleton(std::int32_t v) {
  auto s = std::make_unique<OccurrenceSet>();
  s->starts.insert(v);
  return s;
}

// Per-factor tables needed to decide which lengths of a locus are seeds.
class NodeBuilder {
public:
  NodeBuilder(const TextIndex& idx, BasicInterval b) : idx_(idx), a_(b.a), m_(b.length()) {
    node_.interval = b;
    sort_suffixes();
    suffix_periods();
    std::vector<Pos> reach(static_cast<std::size_t>(std::max<Pos>(m_ - 1, 1)), 0);
    for (Pos pi = 1; pi < m_; ++pi) {
      reach[static_cast<std::size_t>(pi - 1)] = pi + std::min(idx_.lce(a_, a_ + pi), m_ - pi);
    }
    reach_ = MaxTable<Pos>(std::move(reach));
  }

  SeedNode build() {
    enumerate_loci();
    std::sort(node_.entries.begin(), node_.entries.end(), [](const SeedEntry& x, const SeedEntry& y) {
      return std::pair{x.rank_lo, x.rank_hi} < std::pair{y.rank_lo, y.rank_hi};
    });
    return std::move(node_);
  }

private:
  Pos len(Pos x) const { return a_ + m_ - x; }

  void sort_suffixes() {
    auto& sa = node_.local_sa;
    sa.resize(static_cast<std::size_t>(m_));
    for (Pos t = 0; t < m_; ++t) sa[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(a_ + t);
    std::sort(sa.begin(), sa.end(), [&](std::int32_t x, std::int32_t y) {
      const Pos l = idx_.lce(x, y);
      if (l >= len(x) || l >= len(y)) return len(x) < len(y);
      return idx_.isa(x) < idx_.isa(y);
    });
    lcp_.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (Pos r = 1; r < m_; ++r) {
      const Pos x = sa[static_cast<std::size_t>(r - 1)];
      const Pos y = sa[static_cast<std::size_t>(r)];
      lcp_[static_cast<std::size_t>(r)] = std::min({idx_.lce(x, y), len(x), len(y)});
    }
  }

  // period_[e] = shortest period of B[e..m], via the prefix function of reversed B.
  void suffix_periods() {
    const auto m = static_cast<std::size_t>(m_);
    auto sym = [&](std::size_t t) { return idx_.text()[a_ + m_ - 1 - static_cast<Pos>(t)]; };
    std::vector<std::size_t> fail(m, 0);
    for (std::size_t t = 1; t < m; ++t) {
      std::size_t k = fail[t - 1];
      while (k > 0 && sym(t) != sym(k)) k = fail[k - 1];
      if (sym(t) == sym(k)) ++k;
      fail[t] = k;
    }
    period_.assign(m + 1, 0);
    for (std::size_t e = 1; e <= m; ++e) {
      const std::size_t l = m - e + 1;
      period_[e] = static_cast<Pos>(l - fail[l - 1]);
    }
  }

  // Records the seed lengths in (parent_depth, depth] of the locus at local
  // ranks [lo..hi] whose occurrences are `occ`.
  void record(std::int32_t lo, std::int32_t hi, Pos depth, Pos parent_depth, const OccurrenceSet& occ) {
    const Pos f = *occ.starts.begin() - a_ + 1;
    const Pos e = *occ.starts.rbegin() - a_ + 1;
    const Pos c_lo = std::max({parent_depth + 1, Pos{occ.max_gap()}, f, period_[static_cast<std::size_t>(e)]});
    const Pos c_hi = std::min(depth, m_ / 2);
    const auto first = static_cast<std::int32_t>(node_.lengths.size());
    for (Pos c = c_lo; c <= c_hi; ++c) {
      // B[1..f-1] must be covered by an occurrence hanging off the left end.
      const bool ok = f == 1 || reach_.query(static_cast<std::size_t>(f - 1), static_cast<std::size_t>(c - 1)) >= f + c - 1;
      if (!ok) continue;
      auto& ls = node_.lengths;
      if (static_cast<std::int32_t>(ls.size()) > first && ls.back().hi + 1 == c) {
        ++ls.back().hi;
      } else {
        ls.push_back({static_cast<std::int32_t>(c), static_cast<std::int32_t>(c)});
      }
    }
    const auto count = static_cast<std::int32_t>(node_.lengths.size()) - first;
    if (count > 0) node_.entries.push_back({lo, hi, first, count});
  }

  // Bottom-up traversal of the lcp-interval tree of B, including leaves.
  void enumerate_loci() {
    const auto& sa = node_.local_sa;
    const auto m = static_cast<std::int32_t>(m_);
    for (std::int32_t r = 0; r < m; ++r) {
      const Pos x = sa[static_cast<std::size_t>(r)];
      const Pos parent = std::max(lcp_[static_cast<std::size_t>(r)], r + 1 < m ? lcp_[static_cast<std::size_t>(r) + 1] : 0);
      if (len(x) > parent) record(r, r, len(x), parent, *singleton(static_cast<std::int32_t>(x)));
    }

    struct Frame {
      Pos depth;
      std::int32_t lb;
      OccurrencePtr occ;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, nullptr});
    for (std::int32_t r = 1; r <= m; ++r) {
      const Pos h = r < m ? lcp_[static_cast<std::size_t>(r)] : -1;
      const auto leaf = sa[static_cast<std::size_t>(r - 1)];
      if (h > stack.back().depth) {
        stack.push_back({h, r - 1, singleton(leaf)});
        continue;
      }
      stack.back().occ = merge(std::move(stack.back().occ), singleton(leaf));
      OccurrencePtr carry;
      std::int32_t lb = r - 1;
      while (!stack.empty() && h < stack.back().depth) {
        Frame top = std::move(stack.back());
        stack.pop_back();
        const Pos parent = std::max<Pos>({h, stack.empty() ? 0 : stack.back().depth, 0});
        if (top.depth > 0) record(top.lb, r - 1, top.depth, parent, *top.occ);
        lb = top.lb;
        if (!stack.empty() && h <= stack.back().depth) {
          stack.back().occ = merge(std::move(stack.back().occ), std::move(top.occ));
        } else {
          carry = std::move(top.occ);
        }
      }
      if (carry && h >= 0) stack.push_back({h, lb, std::move(carry)});
    }
  }

  const TextIndex& idx_;
  Pos a_;
  Pos m_;
  SeedNode node_;
  std::vector<Pos> lcp_;
  std::vector<Pos> period_;
  MaxTable<Pos> reach_;
};

// Definition-level seed test, used only for self-checks.
bool brute_is_seed(std::string_view c, std::string_view u) {
  const std::size_t cl = c.size();
  std::vector<std::size_t> occ;
  for (std::size_t x = 0; x + cl <= u.size(); ++x) {
    if (u.compare(x, cl, c) == 0) occ.push_back(x);
  }
  if (occ.empty()) return false;
  for (std::size_t t = 1; t < occ.size(); ++t) {
    if (occ[t] - occ[t - 1] > cl) return false;
  }
  bool left = occ.front() == 0;
  for (std::size_t l = occ.front(); !left && l < cl; ++l) left = u.substr(0, l) == c.substr(cl - l);
  const std::size_t tail = u.size() - (occ.back() + cl);
  bool right = tail == 0;
  for (std::size_t l = tail; !right && l < cl; ++l) right = u.substr(u.size() - l) == c.substr(0, l);
  return left && right;
}

}  // namespace

int block_exponent(Pos l) { return 1 + static_cast<int>(std::bit_width(static_cast<std::uint64_t>(l - 1))); }

SeedSets::SeedSets(const TextIndex& index, const Ipm& ipm) : index_(&index), ipm_(&ipm) {
  const int top = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(index.n()))) - 1;
  levels_.resize(static_cast<std::size_t>(top) + 1);
  for (int k = 1; k <= top; ++k) build_level(k);
}

SeedSets::SeedSets(const TextIndex& index, const Ipm& ipm, std::vector<std::vector<SeedNode>> levels)
    : index_(&index), ipm_(&ipm), levels_(std::move(levels)) {
  const Pos n = index.n();
  const int top = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n))) - 1;
  if (static_cast<int>(levels_.size()) != top + 1 || !levels_[0].empty()) {
    throw Error(ErrorCode::Format, "seed set level count does not match the text length");
  }
  for (int k = 1; k <= top; ++k) {
    const Pos m = Pos{1} << k;
    const auto& level = levels_[static_cast<std::size_t>(k)];
    if (static_cast<Pos>(level.size()) != n / m) throw Error(ErrorCode::Format, "seed set level has wrong node count");
    for (std::size_t t = 0; t < level.size(); ++t) {
      const SeedNode& node = level[t];
      const BasicInterval want{static_cast<Pos>(t) * m + 1, k};
      if (!(node.interval == want) || static_cast<Pos>(node.local_sa.size()) != m) {
        throw Error(ErrorCode::Format, "seed set node does not match its basic interval");
      }
      std::vector<bool> seen(static_cast<std::size_t>(m), false);
      for (auto x : node.local_sa) {
        const Pos off = x - want.a;
        if (off < 0 || off >= m || seen[static_cast<std::size_t>(off)]) {
          throw Error(ErrorCode::Format, "seed set local suffix array is not a permutation");
        }
        seen[static_cast<std::size_t>(off)] = true;
      }
      for (const auto& e : node.entries) {
        if (e.rank_lo < 0 || e.rank_hi < e.rank_lo || e.rank_hi >= m || e.first < 0 || e.count < 1 ||
            static_cast<std::size_t>(e.first) + static_cast<std::size_t>(e.count) > node.lengths.size()) {
          throw Error(ErrorCode::Format, "seed set entry out of range");
        }
      }
    }
  }
}

void SeedSets::build_level(int k) {
  const Pos m = Pos{1} << k;
  auto& level = levels_[static_cast<std::size_t>(k)];
  const Pos count = index_->n() / m;
  level.reserve(static_cast<std::size_t>(count));
  for (Pos t = 0; t < count; ++t) level.push_back(NodeBuilder(*index_, {t * m + 1, k}).build());
}

bool SeedSets::exists(BasicInterval b) const noexcept {
  if (b.k < 1 || static_cast<std::size_t>(b.k) >= levels_.size()) return false;
  return b.a >= 1 && (b.a - 1) % b.length() == 0 && b.last() <= index_->n();
}

const SeedNode& SeedSets::node(BasicInterval b) const {
  if (!exists(b)) {
    throw Error(ErrorCode::OutOfRange, "no basic interval of length 2^" + std::to_string(b.k) + " at " + std::to_string(b.a));
  }
  return levels_[static_cast<std::size_t>(b.k)][static_cast<std::size_t>((b.a - 1) >> b.k)];
}

std::vector<SeedOccurrence> SeedSets::seeds_of(BasicInterval b) const {
  std::vector<SeedOccurrence> out;
  if (b.k == 0) {
    index_->check_factor(b.factor());
    return out;
  }
  const SeedNode& nd = node(b);
  for (const auto& e : nd.entries) {
    const Pos x = nd.local_sa[static_cast<std::size_t>(e.rank_lo)];
    for (std::int32_t t = 0; t < e.count; ++t) {
      const LengthRange r = nd.lengths[static_cast<std::size_t>(e.first + t)];
      for (Pos c = r.lo; c <= r.hi; ++c) {
        const FactorRef f{x, x + c - 1};
        out.push_back({f, std::string(index_->text().view(f))});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SeedOccurrence& u, const SeedOccurrence& v) {
    return std::pair{u.factor.length(), std::string_view(u.text)} < std::pair{v.factor.length(), std::string_view(v.text)};
  });
  return out;
}

bool SeedSets::seeded_basic(FactorRef c, BasicInterval b) const {
  const auto& idx = *index_;
  idx.check_factor(c);
  const SeedNode& nd = node(b);
  const Pos cl = c.length();
  if (2 * cl > b.length()) throw Error(ErrorCode::Precondition, "seed query longer than half the basic factor");

  // A seed of B occurs in B starting within its first cl + 1 positions.
  const ArithProg occ = ipm_->occurrences(ipm_->sa_interval(c), b.a, b.a + cl);
  if (occ.empty()) return false;
  const Pos x = occ.first();
  const Pos end = b.last() + 1;
  auto below = [&](std::int32_t y) {
    const Pos l = std::min({idx.lce(y, x), cl, end - y});
    if (l == cl) return false;
    if (l == end - y) return true;
    return idx.isa(y) < idx.isa(x);
  };
  auto at_most = [&](std::int32_t y) { return below(y) || std::min(idx.lce(y, x), end - y) >= cl; };
  const auto& sa = nd.local_sa;
  const auto lo = static_cast<std::int32_t>(std::partition_point(sa.begin(), sa.end(), below) - sa.begin());
  const auto hi = static_cast<std::int32_t>(std::partition_point(sa.begin(), sa.end(), at_most) - sa.begin()) - 1;
  const auto it = std::lower_bound(nd.entries.begin(), nd.entries.end(), std::pair{lo, hi},
                                   [](const SeedEntry& e, std::pair<std::int32_t, std::int32_t> key) {
                                     return std::pair{e.rank_lo, e.rank_hi} < key;
                                   });
  if (it == nd.entries.end() || it->rank_lo != lo || it->rank_hi != hi) return false;
  for (std::int32_t t = 0; t < it->count; ++t) {
    const LengthRange r = nd.lengths[static_cast<std::size_t>(it->first + t)];
    if (r.lo <= cl && cl <= r.hi) return true;
  }
  return false;
}

bool SeedSets::test_concat(FactorRef c, Pos i, Pos j, Pos k) const {
  index_->check_factor(c);
  const Pos cl = c.length();
  if (j - 2 * cl + 1 < i || j + 2 * cl > k) throw Error(ErrorCode::Precondition, "concatenated factors shorter than 2|C|");
  index_->check_factor({i, k});
  // Offsets of U = T[j-c+1..j+c] within F = T[j-2c+1..j+2c] are [c+1..3c].
  const CoverageSet cs = ipm_->cov(c, {j - 2 * cl + 1, j + 2 * cl});
  return std::any_of(cs.intervals.begin(), cs.intervals.end(),
                     [&](const Interval& iv) { return iv.lo <= cl + 1 && iv.hi >= 3 * cl; });
}

namespace {

int rank_unchecked(Pos i, Pos n) {
  if (i == 1) return static_cast<int>(std::bit_width(std::bit_ceil(static_cast<std::uint64_t>(n)))) - 1;
  return std::countr_zero(static_cast<std::uint64_t>(i - 1));
}

}  // namespace

int SeedSets::rank(Pos i) const {
  index_->check_position(i);
  return rank_unchecked(i, index_->n());
}

Pos SeedSets::seeded_basic_pref(FactorRef c, Pos l, FactorRef s) const {
  const auto& idx = *index_;
  idx.check_factor(c);
  idx.check_factor(s);
  if (c.length() != l) throw Error(ErrorCode::Precondition, "seed candidate length differs from l");
  const int p = block_exponent(l);
  const Pos block = Pos{1} << p;
  if ((s.i - 1) % block != 0 || s.length() % block != 0) {
    throw Error(ErrorCode::Precondition, "factor is not a concatenation of length-" + std::to_string(block) + " basic factors");
  }
  const Pos start = s.i;
  const Pos end = s.j;
  const Pos n = idx.n();
  if (!seeded_basic(c, {start, p})) return 0;

  auto extend = [&](Pos last, int k) {
    const Pos next = last + (Pos{1} << k);
    if (next > end) return false;
    return seeded_basic(c, {last + 1, k}) && test_concat(c, start, last, next);
  };
  auto check = [&](Pos last, int k) {
    if (!invariant_checks()) return;
    const bool ok = last - start + 1 >= (Pos{1} << k) && (last + 1 > n || rank_unchecked(last + 1, n) >= k) &&
                    (last - start + 1 > 4096 || brute_is_seed(idx.text().view(c), idx.text().view({start, last})));
    if (!ok) throw Error(ErrorCode::Invariant, "doubling phase invariant violated");
  };

  Pos last = start + block - 1;
  int k = p;
  while (true) {
    check(last, k);
    if (last >= end) return s.length();
    if (!extend(last, k)) break;
    last += Pos{1} << k;
    if (last + 1 <= n && rank_unchecked(last + 1, n) > k) ++k;
  }
  while (true) {
    --k;
    if (k < p) break;
    if (last >= end) return s.length();
    if (extend(last, k)) last += Pos{1} << k;
  }
  return last - start + 1;
}

Pos SeedSets::covered_pref(Pos l, FactorRef s) const {
  const auto& idx = *index_;
  idx.check_factor(s);
  const Pos len = s.length();
  if (l < 1 || l > len) {
    throw Error(ErrorCode::OutOfRange, "prefix length " + std::to_string(l) + " outside [1, " + std::to_string(len) + "]");
  }
  const FactorRef c = s.prefix(l);
  const Pos w = std::min(len, 5 * l);
  const Pos r = ipm_->cov(c, s.prefix(w)).covered_prefix();
  // Position r + 1 could only be covered by an occurrence reaching past w.
  if (w == len || r <= w - l) return r;

  const int p = block_exponent(l);
  const Pos block = Pos{1} << p;
  const Pos i2 = (s.i - 1 + block - 1) / block * block + 1;
  const Pos j2 = s.j / block * block;
  if (i2 + block - 1 > j2) return ipm_->cov(c, s).covered_prefix();

  const Pos d = seeded_basic_pref(c, l, {i2, j2});
  // The covered prefix of S ends within [i2 + d - block, i2 + d + block - 2].
  const Pos from = std::max(s.i, i2 + d - block);
  const Pos wl = std::max(s.i, from - l);
  const Pos wr = std::min(s.j, i2 + d + block - 1 + l);
  const CoverageSet cs = ipm_->cov(c, {wl, wr});
  const Pos at = from - wl + 1;
  for (const auto& iv : cs.intervals) {
    if (iv.lo <= at && at <= iv.hi) {
      const Pos e = wl + iv.hi - 1;
      if (e >= wr - l + 1 && wr < s.j) break;
      return e - s.i + 1;
    }
  }
  throw Error(ErrorCode::Invariant, "covered prefix not located around the seeded block prefix");
}

}  // namespace qpi
