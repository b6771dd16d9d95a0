#pragma once

#include <memory>
#include <string_view>

#include "qpi/ipm.hpp"
#include "qpi/runs.hpp"
#include "qpi/seed_sets.hpp"
#include "qpi/text_index.hpp"

namespace qpi {

/// Everything built for one text: LCE/IPM structures, runs and the seed range
/// tree. Immutable once constructed; safe to query from many threads.
class Index {
public:
  explicit Index(std::string_view text);
  /// Rebuilds the derived structures around stored arrays.
  Index(Text text, SuffixArrays forward, SuffixArrays reverse, std::vector<std::vector<SeedNode>> seed_levels);

  Index(const Index&) = delete;
  Index& operator=(const Index&) = delete;

  const TextIndex& text_index() const noexcept { return *text_; }
  const Ipm& ipm() const noexcept { return *ipm_; }
  const Runs& runs() const noexcept { return *runs_; }
  const SeedSets& seeds() const noexcept { return *seeds_; }
  Pos n() const noexcept { return text_->n(); }

private:
  std::unique_ptr<TextIndex> text_;
  std::unique_ptr<Ipm> ipm_;
  std::unique_ptr<Runs> runs_;
  std::unique_ptr<SeedSets> seeds_;
};

}  // namespace qpi
