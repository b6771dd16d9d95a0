#include "qpi/index.hpp"

namespace qpi {

Index::Index(std::string_view text)
    : text_(std::make_unique<TextIndex>(Text(text))),
      ipm_(std::make_unique<Ipm>(*text_)),
      runs_(std::make_unique<Runs>(*text_)),
      seeds_(std::make_unique<SeedSets>(*text_, *ipm_)) {}

Index::Index(Text text, SuffixArrays forward, SuffixArrays reverse, std::vector<std::vector<SeedNode>> seed_levels)
    : text_(std::make_unique<TextIndex>(std::move(text), std::move(forward), std::move(reverse))),
      ipm_(std::make_unique<Ipm>(*text_)),
      runs_(std::make_unique<Runs>(*text_)),
      seeds_(std::make_unique<SeedSets>(*text_, *ipm_, std::move(seed_levels))) {}

}  // namespace qpi
