#include "qpi/types.hpp"

#include <algorithm>
#include <atomic>

namespace qpi {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyText: return "EEMPTY";
    case ErrorCode::OutOfRange: return "ERANGE";
    case ErrorCode::Precondition: return "EPRECOND";
    case ErrorCode::Invariant: return "EINVARIANT";
    case ErrorCode::CapExceeded: return "ECAP";
    case ErrorCode::Io: return "EIO";
    case ErrorCode::Format: return "EFORMAT";
    case ErrorCode::Parse: return "EPARSE";
  }
  return "EUNKNOWN";
}

namespace {
std::atomic<bool> checks_enabled{false};
}  // namespace

void set_invariant_checks(bool on) noexcept { checks_enabled.store(on, std::memory_order_relaxed); }
bool invariant_checks() noexcept { return checks_enabled.load(std::memory_order_relaxed); }

bool ArithProg::contains(Pos v) const noexcept {
  if (count == 0 || v < start || v > last()) return false;
  if (diff == 0) return v == start;
  return (v - start) % diff == 0;
}

std::vector<Pos> ArithProg::elements() const {
  std::vector<Pos> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Pos t = 0; t < count; ++t) out.push_back(at(t));
  return out;
}

std::vector<Pos> expand(const std::vector<ArithProg>& progs) {
  std::vector<Pos> out;
  for (const auto& p : progs) {
    for (Pos t = 0; t < p.count; ++t) out.push_back(p.at(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_progressions(const std::vector<ArithProg>& progs) {
  std::string out;
  for (const auto& p : progs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.start) + ':' + std::to_string(p.diff) + ':' +
           std::to_string(p.count);
  }
  return out;
}

}  // namespace qpi
