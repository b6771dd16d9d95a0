#include "qpi/wavelet_matrix.hpp"

#include <bit>

namespace qpi {

RankBitVector::RankBitVector(std::size_t size) : words_((size >> 6) + 1, 0) {}

void RankBitVector::build_rank() {
  cumulative_.assign(words_.size() + 1, 0);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    cumulative_[w + 1] = cumulative_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
  }
}

std::size_t RankBitVector::rank1(std::size_t i) const {
  const std::size_t w = i >> 6;
  const std::size_t off = i & 63;
  std::size_t r = cumulative_[w];
  if (off != 0) r += static_cast<std::size_t>(std::popcount(words_[w] & ((std::uint64_t{1} << off) - 1)));
  return r;
}

WaveletMatrix::WaveletMatrix(std::vector<std::uint32_t> values, int bits)
    : size_(values.size()), bits_(bits), levels_(static_cast<std::size_t>(bits)), zeros_(static_cast<std::size_t>(bits)) {
  std::vector<std::uint32_t> next(values.size());
  for (int level = 0; level < bits_; ++level) {
    const int shift = bits_ - 1 - level;
    auto& bv = levels_[static_cast<std::size_t>(level)];
    bv = RankBitVector(size_);
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if ((values[i] >> shift) & 1U) {
        bv.set(i);
      } else {
        ++zeros;
      }
    }
    bv.build_rank();
    zeros_[static_cast<std::size_t>(level)] = zeros;
    std::size_t z = 0;
    std::size_t o = zeros;
    for (std::size_t i = 0; i < size_; ++i) {
      if ((values[i] >> shift) & 1U) {
        next[o++] = values[i];
      } else {
        next[z++] = values[i];
      }
    }
    values.swap(next);
  }
}

std::size_t WaveletMatrix::count_less(std::size_t l, std::size_t r, std::uint64_t x) const {
  if (l >= r) return 0;
  if (x >= (std::uint64_t{1} << bits_)) return r - l;
  std::size_t result = 0;
  for (int level = 0; level < bits_ && l < r; ++level) {
    const int shift = bits_ - 1 - level;
    const auto& bv = levels_[static_cast<std::size_t>(level)];
    const std::size_t l0 = bv.rank0(l);
    const std::size_t r0 = bv.rank0(r);
    if ((x >> shift) & 1U) {
      result += r0 - l0;
      const std::size_t z = zeros_[static_cast<std::size_t>(level)];
      l = z + (l - l0);
      r = z + (r - r0);
    } else {
      l = l0;
      r = r0;
    }
  }
  return result;
}

std::size_t WaveletMatrix::count_between(std::size_t l, std::size_t r, std::uint64_t lo, std::uint64_t hi) const {
  if (lo > hi) return 0;
  return count_less(l, r, hi + 1) - count_less(l, r, lo);
}

std::uint32_t WaveletMatrix::kth_smallest(std::size_t l, std::size_t r, std::size_t k) const {
  std::uint32_t value = 0;
  for (int level = 0; level < bits_; ++level) {
    const int shift = bits_ - 1 - level;
    const auto& bv = levels_[static_cast<std::size_t>(level)];
    const std::size_t l0 = bv.rank0(l);
    const std::size_t r0 = bv.rank0(r);
    const std::size_t zeros_here = r0 - l0;
    if (k < zeros_here) {
      l = l0;
      r = r0;
    } else {
      k -= zeros_here;
      value |= std::uint32_t{1} << shift;
      const std::size_t z = zeros_[static_cast<std::size_t>(level)];
      l = z + (l - l0);
      r = z + (r - r0);
    }
  }
  return value;
}

std::optional<std::uint32_t> WaveletMatrix::next_value(std::size_t l, std::size_t r, std::uint64_t x) const {
  const std::size_t below = count_less(l, r, x);
  if (below >= r - l) return std::nullopt;
  return kth_smallest(l, r, below);
}

std::optional<std::uint32_t> WaveletMatrix::prev_value(std::size_t l, std::size_t r, std::uint64_t x) const {
  const std::size_t upto = count_less(l, r, x + 1);
  if (upto == 0) return std::nullopt;
  return kth_smallest(l, r, upto - 1);
}

}  // namespace qpi
