#pragma once

#include <stdexcept>
#include <string>

namespace gz {

/// Precondition violated by the caller (bad index, wrong shape, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data fails a structural invariant (non-cyclic vector, bad matricial data, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed defect exceeded its tolerance, or a numerical step broke down.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input could not be decoded (malformed JSON, missing or mistyped fields).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void throw_domain(const std::string& what);

}  // namespace gz
