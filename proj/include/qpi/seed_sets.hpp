#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpi/ipm.hpp"
#include "qpi/text_index.hpp"
#include "qpi/types.hpp"

namespace qpi {

/// Dyadic interval [a .. a + 2^k - 1] with 2^k dividing a - 1.
struct BasicInterval {
  Pos a = 1;
  int k = 0;

  Pos length() const noexcept { return Pos{1} << k; }
  Pos last() const noexcept { return a + length() - 1; }
  FactorRef factor() const noexcept { return {a, last()}; }

  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

/// Seed lengths [lo..hi] recorded on one locus of a basic factor's suffix
/// array: for c in a stored range, the length-c prefix of the suffixes at local
/// ranks [rank_lo..rank_hi] is a seed.
struct SeedEntry {
  std::int32_t rank_lo = 0;
  std::int32_t rank_hi = 0;
  std::int32_t first = 0;  // offset into SeedNode::lengths
  std::int32_t count = 0;
};

struct LengthRange {
  std::int32_t lo = 0;
  std::int32_t hi = 0;

  friend bool operator==(const LengthRange&, const LengthRange&) = default;
};

struct SeedNode {
  BasicInterval interval;
  /// Local suffix array of B: 1-based text positions, sorted by the suffixes of B.
  std::vector<std::int32_t> local_sa;
  /// Sorted by (rank_lo, rank_hi).
  std::vector<SeedEntry> entries;
  std::vector<LengthRange> lengths;
};

/// A seed of a basic factor, as a text factor of its shortest representative.
struct SeedOccurrence {
  FactorRef factor;
  std::string text;
};

/// Range tree over the basic factors of T; every node of length >= 2 stores
/// the seeds of its factor that are at most half as long.
class SeedSets {
public:
  SeedSets(const TextIndex& index, const Ipm& ipm);
  /// Reassembles stored nodes; throws Error(Format) when the node set is inconsistent.
  SeedSets(const TextIndex& index, const Ipm& ipm, std::vector<std::vector<SeedNode>> levels);

  /// levels()[k][t] is the node of [t*2^k + 1 .. (t+1)*2^k]; level 0 is empty.
  const std::vector<std::vector<SeedNode>>& levels() const noexcept { return levels_; }
  const SeedNode& node(BasicInterval b) const;
  bool exists(BasicInterval b) const noexcept;

  /// All seeds of B of length <= |B| / 2, one per distinct string, sorted by (length, text).
  std::vector<SeedOccurrence> seeds_of(BasicInterval b) const;

  /// Whether T[c] is a seed of B. Requires 2|C| <= |B|.
  bool seeded_basic(FactorRef c, BasicInterval b) const;

  /// Given C a seed of T[i..j] and of T[j+1..k] with 2|C| at most both
  /// lengths, whether C is a seed of T[i..k].
  bool test_concat(FactorRef c, Pos i, Pos j, Pos k) const;

  /// max{k : [i .. i + 2^k) is a basic interval} for the text padded to a power of two.
  int rank(Pos i) const;

  /// Longest prefix of S, made of whole length-2^p blocks (2^p the least power
  /// of two >= 2l), of which C is a seed. S must be aligned to those blocks.
  Pos seeded_basic_pref(FactorRef c, Pos l, FactorRef s) const;

  /// Length of the longest prefix of S covered by S[1..l].
  Pos covered_pref(Pos l, FactorRef s) const;

private:
  void build_level(int k);

  const TextIndex* index_;
  const Ipm* ipm_;
  std::vector<std::vector<SeedNode>> levels_;
};

/// Least p with 2^p >= 2l.
int block_exponent(Pos l);

}  // namespace qpi
