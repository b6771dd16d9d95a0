#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qpi {

/// Sparse table over a static array answering range-extremum queries in O(1).
/// Returns the position of the extremum; ties resolve to the leftmost position.
/// Indices are 0-based and ranges closed.
template <class T, class Better = std::less<T>>
class SparseTable {
public:
  SparseTable() = default;

  explicit SparseTable(std::vector<T> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n == 0) return;
    const int levels = std::bit_width(n);
    table_.resize(static_cast<std::size_t>(levels));
    table_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
    for (int k = 1; k < levels; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      const std::size_t width = std::size_t{1} << k;
      auto& row = table_[static_cast<std::size_t>(k)];
      const auto& prev = table_[static_cast<std::size_t>(k - 1)];
      row.resize(n - width + 1);
      for (std::size_t i = 0; i + width <= n; ++i) row[i] = pick(prev[i], prev[i + half]);
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<T>& values() const noexcept { return values_; }
  const T& operator[](std::size_t i) const { return values_[i]; }

  /// Position of the best value in [l, r].
  std::size_t arg(std::size_t l, std::size_t r) const {
    const int k = std::bit_width(r - l + 1) - 1;
    const auto& row = table_[static_cast<std::size_t>(k)];
    return pick(row[l], row[r + 1 - (std::size_t{1} << k)]);
  }

  const T& query(std::size_t l, std::size_t r) const { return values_[arg(l, r)]; }

private:
  std::uint32_t pick(std::uint32_t a, std::uint32_t b) const {
    if (Better{}(values_[b], values_[a])) return b;
    if (Better{}(values_[a], values_[b])) return a;
    return a < b ? a : b;
  }

  std::vector<T> values_;
  std::vector<std::vector<std::uint32_t>> table_;
};

template <class T>
using MinTable = SparseTable<T, std::less<T>>;
template <class T>
using MaxTable = SparseTable<T, std::greater<T>>;

}  // namespace qpi
