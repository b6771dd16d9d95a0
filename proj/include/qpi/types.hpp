#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpi {

/// 1-based text position or length.
using Pos = std::int64_t;

enum class ErrorCode {
  EmptyText,
  OutOfRange,
  Precondition,
  Invariant,
  CapExceeded,
  Io,
  Format,
  Parse,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Factor T[i..j] of the indexed text, both ends inclusive and 1-based.
struct FactorRef {
  Pos i = 1;
  Pos j = 1;

  Pos length() const noexcept { return j - i + 1; }
  /// Prefix of this factor with the given length.
  FactorRef prefix(Pos len) const noexcept { return {i, i + len - 1}; }

  friend bool operator==(const FactorRef&, const FactorRef&) = default;
};

/// start, start+diff, ..., start+(count-1)*diff. count == 0 is the empty set.
struct ArithProg {
  Pos start = 0;
  Pos diff = 0;
  Pos count = 0;

  static ArithProg single(Pos v) { return {v, 0, 1}; }

  bool empty() const noexcept { return count == 0; }
  Pos first() const noexcept { return start; }
  Pos last() const noexcept { return start + (count - 1) * diff; }
  Pos at(Pos t) const noexcept { return start + t * diff; }
  bool contains(Pos v) const noexcept;
  std::vector<Pos> elements() const;

  friend bool operator==(const ArithProg&, const ArithProg&) = default;
};

/// Extra self-checks inside the query algorithms (loop invariants, brute-force
/// cross-checks on small inputs). Off by default; process-wide.
void set_invariant_checks(bool on) noexcept;
bool invariant_checks() noexcept;

/// Expands a list of progressions into a sorted vector of values.
std::vector<Pos> expand(const std::vector<ArithProg>& progs);

/// "start:diff:count" tokens separated by single spaces.
std::string format_progressions(const std::vector<ArithProg>& progs);

}  // namespace qpi
