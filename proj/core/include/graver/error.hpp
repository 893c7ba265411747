#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graver {

/// Malformed graph: loops, repeated edges, out-of-range endpoints, empty input.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid closed walk, or a walk that does not satisfy an operation's
/// precondition (odd length, reducible sign partition, not primitive).
class WalkError : public std::invalid_argument {
 public:
  enum class Kind {
    Empty,
    UnknownEdge,
    NotIncident,
    NotClosed,
    TooShort,
    TooLong,
    OddWalk,
    NotIrreducible,
    NotPrimitive,
    NotOddChord,
  };

  WalkError(Kind kind, const std::string& what, std::ptrdiff_t position = -1)
      : std::invalid_argument(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  /// Step index the error refers to, or -1.
  std::ptrdiff_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::ptrdiff_t position_;
};

/// A configured resource cap (cycle count, support count, fiber size,
/// wall-clock budget) was hit. Results are never silently truncated.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A support passed the primitive-support check but no primitive walk could
/// be built on it.
class RealizationFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntax error in a graph file or a textual binomial / walk.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace graver
