#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qpi/ipm.hpp"
#include "qpi/sparse_table.hpp"
#include "qpi/text_index.hpp"
#include "qpi/types.hpp"

namespace qpi {

/// Maximal repetition T[a..b] with shortest period p.
struct RunRecord {
  Pos a = 0;
  Pos b = 0;
  Pos p = 0;
  std::int32_t root_id = -1;
  /// Index of this run within its root group (groups are sorted by a).
  std::int32_t root_pos = -1;

  Pos length() const noexcept { return b - a + 1; }
};

/// Runs sharing one Lyndon root, ordered by start.
struct RootGroup {
  std::int32_t root_id = -1;
  Pos period = 0;
  std::vector<Pos> starts;
  std::vector<Pos> lengths;
  MinTable<Pos> min_length;
};

class Runs {
public:
  /// Computes all runs of the text from Lyndon arrays under both symbol
  /// orders and groups them by Lyndon root.
  explicit Runs(const TextIndex& index);

  /// Sorted by (a, p).
  const std::vector<RunRecord>& runs() const noexcept { return runs_; }
  const std::vector<RootGroup>& groups() const noexcept { return groups_; }

  /// Run with period p and left end a, if any.
  const RunRecord* find(Pos a, Pos p) const;

  /// The run with period p containing T[x..y], if T[x..y] has period p,
  /// y - x + 1 > p, and the p-periodic region around it is a run.
  const RunRecord* containing(Pos x, Pos y, Pos p) const;

  /// run(S): the run with period per(S) containing S, or nullopt when S is aperiodic.
  std::optional<RunRecord> run_of(const Ipm& ipm, FactorRef s) const;

  /// Minimum length (= exponent * p) of a run of S with the given root, where
  /// S has a p-periodic prefix of length >= 2p. nullopt when the suffix of
  /// length 2p is not induced by a run with that root.
  std::optional<Pos> min_run_length(FactorRef s, Pos p, std::int32_t root_id) const;

  /// Root id of the run inducing the prefix of S of length 2p, or -1.
  std::int32_t prefix_root(FactorRef s, Pos p) const;

  /// Up to four border lengths of A that decide which elements of A are covers.
  std::vector<Pos> periodic_candidates(FactorRef s, const ArithProg& a) const;

private:
  static std::uint64_t key(Pos a, Pos p) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(p);
  }

  const TextIndex* index_;
  std::vector<RunRecord> runs_;
  std::vector<RootGroup> groups_;
  std::unordered_map<std::uint64_t, std::int32_t> by_start_;
};

/// Elements of A that are covers, given which candidates were tested and which
/// of them were confirmed. The confirmed set must be a prefix of the tested
/// elements of A; otherwise Error(Invariant) is thrown.
ArithProg cut_progression(const ArithProg& a, std::span<const Pos> tested, std::span<const Pos> covers);

}  // namespace qpi
