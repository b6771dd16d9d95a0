#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qpi {

/// Plain bit vector with constant-time rank.
class RankBitVector {
public:
  RankBitVector() = default;
  explicit RankBitVector(std::size_t size);

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void build_rank();

  /// Ones in [0, i).
  std::size_t rank1(std::size_t i) const;
  std::size_t rank0(std::size_t i) const { return i - rank1(i); }

private:
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> cumulative_;
};

/// Wavelet matrix over a sequence of integers in [0, 2^bits). Ranges are
/// half-open [l, r) over sequence indices.
class WaveletMatrix {
public:
  WaveletMatrix() = default;
  WaveletMatrix(std::vector<std::uint32_t> values, int bits);

  std::size_t size() const noexcept { return size_; }

  /// Number of values < x in [l, r).
  std::size_t count_less(std::size_t l, std::size_t r, std::uint64_t x) const;
  /// Number of values in [lo, hi] within [l, r).
  std::size_t count_between(std::size_t l, std::size_t r, std::uint64_t lo, std::uint64_t hi) const;
  /// k-th smallest (0-based) value in [l, r); requires k < r - l.
  std::uint32_t kth_smallest(std::size_t l, std::size_t r, std::size_t k) const;

  /// Smallest value >= x in [l, r).
  std::optional<std::uint32_t> next_value(std::size_t l, std::size_t r, std::uint64_t x) const;
  /// Largest value <= x in [l, r).
  std::optional<std::uint32_t> prev_value(std::size_t l, std::size_t r, std::uint64_t x) const;

private:
  std::size_t size_ = 0;
  int bits_ = 0;
  std::vector<RankBitVector> levels_;
  std::vector<std::size_t> zeros_;
};

}  // namespace qpi
