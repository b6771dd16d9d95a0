#include "qpi/runs.hpp"

#include <algorithm>
#include <map>

#include "qpi/periods.hpp"

namespace qpi {

namespace {

// next[i] = smallest j > i with isa[j] < isa[i], or n.
std::vector<std::int32_t> next_smaller(const std::vector<std::int32_t>& isa) {
  const auto n = static_cast<std::int32_t>(isa.size());
  std::vector<std::int32_t> next(isa.size(), n);
  std::vector<std::int32_t> stack;
  for (std::int32_t i = 0; i < n; ++i) {
    while (!stack.empty() && isa[static_cast<std::size_t>(stack.back())] > isa[static_cast<std::size_t>(i)]) {
      next[static_cast<std::size_t>(stack.back())] = i;
      stack.pop_back();
    }
    stack.push_back(i);
  }
  return next;
}

}  // namespace

Runs::Runs(const TextIndex& index) : index_(&index) {
  const Pos n = index.n();
  const auto symbols = index.text().symbols();
  const int sigma = index.text().alphabet_size();
  std::vector<std::int32_t> inverted(symbols.begin(), symbols.end());
  for (auto& c : inverted) c = sigma - 1 - c;
  const SuffixArrays inv = build_suffix_arrays(inverted, sigma);

  // Every run has a Lyndon root that is the longest Lyndon word starting at
  // its position under one of the two orders.
  std::map<std::pair<Pos, Pos>, Pos> found;  // (a, p) -> b
  for (const auto* isa : {&index.forward().isa, &inv.isa}) {
    const auto next = next_smaller(*isa);
    for (Pos x = 1; x <= n; ++x) {
      const Pos p = next[static_cast<std::size_t>(x - 1)] - (x - 1);
      const Pos left = x - index.lce_rev(x - 1, x + p - 1);
      const Pos right = x + p - 1 + index.lce(x, x + p);
      if (right - left + 1 >= 2 * p) found.emplace(std::pair{left, p}, right);
    }
  }

  runs_.reserve(found.size());
  for (const auto& [ap, b] : found) runs_.push_back({ap.first, b, ap.second, -1, -1});

  // Lyndon root: minimal rotation of T[a..a+p-1], i.e. the minimal suffix
  // start in [a, a+p-1]; identified by (p, leftmost rank of its length-p locus).
  const MinTable<std::int32_t> isa_min(index.forward().isa);
  std::map<std::pair<Pos, Pos>, std::int32_t> root_ids;
  for (auto& r : runs_) {
    const auto s = static_cast<Pos>(isa_min.arg(static_cast<std::size_t>(r.a - 1), static_cast<std::size_t>(r.a + r.p - 2))) + 1;
    const RankRange loc = index.locus({s, s + r.p - 1});
    auto [it, inserted] = root_ids.emplace(std::pair{r.p, loc.lo}, static_cast<std::int32_t>(root_ids.size()));
    r.root_id = it->second;
  }

  groups_.resize(root_ids.size());
  for (std::size_t t = 0; t < runs_.size(); ++t) {
    auto& r = runs_[t];
    auto& g = groups_[static_cast<std::size_t>(r.root_id)];
    g.root_id = r.root_id;
    g.period = r.p;
    r.root_pos = static_cast<std::int32_t>(g.starts.size());  // runs_ is sorted by a
    g.starts.push_back(r.a);
    g.lengths.push_back(r.length());
    by_start_.emplace(key(r.a, r.p), static_cast<std::int32_t>(t));
  }
  for (auto& g : groups_) g.min_length = MinTable<Pos>(g.lengths);
}

const RunRecord* Runs::find(Pos a, Pos p) const {
  const auto it = by_start_.find(key(a, p));
  return it == by_start_.end() ? nullptr : &runs_[static_cast<std::size_t>(it->second)];
}

const RunRecord* Runs::containing(Pos x, Pos y, Pos p) const {
  const auto& idx = *index_;
  if (p < 1 || x < 1 || y > idx.n() || y - x + 1 <= p) return nullptr;
  const Pos right = x + p - 1 + idx.lce(x, x + p);
  if (right < y) return nullptr;
  const Pos left = x - idx.lce_rev(x - 1, x + p - 1);
  if (right - left + 1 < 2 * p) return nullptr;
  return find(left, p);
}

std::optional<RunRecord> Runs::run_of(const Ipm& ipm, FactorRef s) const {
  index_->check_factor(s);
  const Pos p = shortest_period(ipm, s);
  if (s.length() < 2 * p) return std::nullopt;
  const RunRecord* r = containing(s.i, s.j, p);
  if (r == nullptr) throw Error(ErrorCode::Invariant, "periodic factor without an inducing run");
  return *r;
}

std::int32_t Runs::prefix_root(FactorRef s, Pos p) const {
  const RunRecord* r = containing(s.i, s.i + 2 * p - 1, p);
  return r == nullptr ? -1 : r->root_id;
}

std::optional<Pos> Runs::min_run_length(FactorRef s, Pos p, std::int32_t root_id) const {
  const auto& idx = *index_;
  idx.check_factor(s);
  if (root_id < 0 || static_cast<std::size_t>(root_id) >= groups_.size()) {
    throw Error(ErrorCode::Precondition, "unknown root id " + std::to_string(root_id));
  }
  const Pos len = s.length();
  if (len < 2 * p) throw Error(ErrorCode::Precondition, "factor has no p-periodic prefix of length 2p");
  const RunRecord* prefix_run = containing(s.i, s.i + 2 * p - 1, p);
  if (prefix_run == nullptr || prefix_run->root_id != root_id) {
    throw Error(ErrorCode::Precondition, "factor prefix is not induced by a run with the given root");
  }
  const Pos prefix_len = std::min(p + idx.lce(s.i, s.i + p), len);
  if (prefix_len == len) return len;

  const RunRecord* suffix_run = containing(s.j - 2 * p + 1, s.j, p);
  if (suffix_run == nullptr || suffix_run->root_id != root_id) return std::nullopt;
  const Pos suffix_len = std::min(p + idx.lce_rev(s.j, s.j - p), len);

  Pos best = std::min(prefix_len, suffix_len);
  const auto first = static_cast<std::size_t>(prefix_run->root_pos + 1);
  const auto last = static_cast<std::size_t>(suffix_run->root_pos);  // exclusive
  if (first < last) {
    best = std::min(best, groups_[static_cast<std::size_t>(root_id)].min_length.query(first, last - 1));
  }
  return best;
}

std::vector<Pos> Runs::periodic_candidates(FactorRef s, const ArithProg& a) const {
  const auto& idx = *index_;
  idx.check_factor(s);
  auto is_border = [&](Pos b) { return b >= 1 && b <= s.length() && idx.lce(s.i, s.j - b + 1) >= b; };
  if (a.empty() || !is_border(a.first()) || !is_border(a.last()) || (a.count >= 2 && !is_border(a.at(1)))) {
    throw Error(ErrorCode::Precondition, "progression is not made of borders of the factor");
  }
  if (a.count == 1) return {a.start};
  const Pos p = a.diff;
  std::vector<Pos> out{a.at(0), a.at(1)};
  const std::int32_t root = prefix_root(s, p);
  if (root < 0) throw Error(ErrorCode::Precondition, "periodic border without a prefix run");
  if (const auto r = min_run_length(s, p, root)) {
    // Elements of A in (r - 2p, r].
    const Pos lo = *r - 2 * p + 1;
    Pos t = lo <= a.start ? 0 : (lo - a.start + p - 1) / p;
    for (; t < a.count && a.at(t) <= *r; ++t) out.push_back(a.at(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArithProg cut_progression(const ArithProg& a, std::span<const Pos> tested, std::span<const Pos> covers) {
  Pos top = 0;
  for (Pos c : covers) {
    if (a.contains(c)) top = std::max(top, c);
  }
  if (top == 0) return {};
  for (Pos t : tested) {
    if (a.contains(t) && t <= top && std::find(covers.begin(), covers.end(), t) == covers.end()) {
      throw Error(ErrorCode::Invariant, "covers within a border progression do not form a prefix");
    }
  }
  const Pos count = a.count == 1 ? 1 : (top - a.start) / a.diff + 1;
  return count == 1 ? ArithProg::single(a.start) : ArithProg{a.start, a.diff, count};
}

}  // namespace qpi
