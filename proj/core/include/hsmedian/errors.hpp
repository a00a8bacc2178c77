#pragma once

#include <stdexcept>
#include <string>

namespace hsm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySample : Error {
  EmptySample() : Error("empty sample") {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct UnsupportedDimension : Error {
  explicit UnsupportedDimension(const std::string& what) : Error("unsupported dimension: " + what) {}
};

struct NotInGeneralPosition : Error {
  NotInGeneralPosition() : Error("sample is not in general position") {}
  explicit NotInGeneralPosition(const std::string& what) : Error(what) {}
};

struct DegenerateSubset : Error {
  explicit DegenerateSubset(const std::string& what) : Error("degenerate subset: " + what) {}
};

struct ExhaustedCandidates : Error {
  explicit ExhaustedCandidates(const std::string& what) : Error("exhausted candidates: " + what) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t row, std::size_t col)
      : Error("parse error at row " + std::to_string(row) + ", column " + std::to_string(col) +
              ": " + what),
        row(row),
        col(col) {}
  std::size_t row = 0;
  std::size_t col = 0;
};

// The constructive escape-point search failed its verification sweep.
struct EscapePointUnverified : Error {
  explicit EscapePointUnverified(const std::string& what) : Error(what) {}
};

struct NoBreakdownWithinBudget : Error {
  explicit NoBreakdownWithinBudget(const std::string& what) : Error(what) {}
};

}  // namespace hsm
