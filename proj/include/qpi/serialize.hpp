#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "qpi/index.hpp"

namespace qpi {

inline constexpr char kIndexMagic[4] = {'Q', 'P', 'I', '1'};
inline constexpr std::uint8_t kIndexVersion = 1;

/// Writes the text, both suffix-array triples and the seed range tree.
/// Layout is described in docs/index-format.md.
void save_index(const Index& idx, std::ostream& out);
void save_index(const Index& idx, const std::string& path);

/// Reads an index written by save_index; runs are recomputed. Throws
/// Error(Format) on malformed input and Error(Io) when the file is unreadable.
std::unique_ptr<Index> load_index(std::istream& in);
std::unique_ptr<Index> load_index(const std::string& path);

}  // namespace qpi
