// Exception hierarchy: callers can tell bad input, broken preconditions and
// blown resource limits apart without parsing messages.
#pragma once

#include <stdexcept>
#include <string>

namespace fusionlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated precondition of an operation does not hold (bad parameters,
// non-normal subgroup passed to a quotient, prime not dividing the order...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// A Cayley table failed validation (identity, inverses or associativity).
struct MalformedTableError : Error {
  explicit MalformedTableError(const std::string& msg) : Error(msg) {}
};

// A configured limit (max order, max subgroups) was exceeded.
struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// Group file syntax error; carries the 1-based line number.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace detail {

// Internal consistency check. Failing means a bug in this library, not bad
// user input, but we throw instead of assert so release builds stay honest.
inline void require(bool cond, const std::string& msg) {
  if (!cond)
    throw Error("internal invariant violated: " + msg);
}

inline void precondition(bool cond, const std::string& msg) {
  if (!cond)
    throw PreconditionError(msg);
}

}  // namespace detail
}  // namespace fusionlab
