#pragma once

#include <stdexcept>
#include <string>

namespace tanglecount {

// Raised when a vertex index is outside [0, n).
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Raised when the transitive closure of a relation would produce a < a.
class CycleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when an input exceeds a documented size bound.
class SizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ZeroConstantTermError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CompositionOrderError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ValuationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An n! * coefficient extraction produced a non-integer; signals an
// arithmetic bug, never a user error.
class IntegralityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class MalformedPathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Part data does not fit the skeleton it is being plugged into.
class SpecMismatchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_ = 0;
};

}  // namespace tanglecount
