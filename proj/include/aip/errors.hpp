#pragma once

#include <stdexcept>
#include <string>

namespace aip {

/// Malformed text: a token or component that does not fit the code grammar.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid code (crossing multiplicity, roles, signs) or a
/// request naming a crossing the code does not contain.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A link component whose L/R passages do not balance, so no integer
/// coloring closes up around it.
class UncolorableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aip
