#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srgft {

/// Argument outside the domain of an operation (|q| >= 1, zero inverse, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Evaluation too close to a zero of a symmetrization or denominator.
class SingularityError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A documented precondition of a predicate, generator or check was not met.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace srgft
