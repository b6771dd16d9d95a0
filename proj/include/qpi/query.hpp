#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpi/index.hpp"

namespace qpi {

/// Answers one line of the text protocol:
///   MINCOVER i j | ALLCOVERS i j | ISCOVER i j l | COVEREDPREF i j l |
///   BORDERS i j | PERIODS i j | RUNS
/// Failures become "ERR <CODE> <message>" (or a JSON error object); this
/// function does not throw for malformed or out-of-range queries.
std::string answer_query(const Index& idx, std::string_view line, bool json = false);

/// Answers every line; output t belongs to input t regardless of thread count.
/// threads == 0 picks the hardware concurrency.
std::vector<std::string> answer_batch(const Index& idx, const std::vector<std::string>& lines, bool json = false,
                                      unsigned threads = 1);

}  // namespace qpi
