#pragma once

#include <stdexcept>
#include <string>

namespace halfpoint {

/// A mathematical precondition was violated: off-curve point, singular point
/// handed to the group law, descriptor mismatch, division by zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A textual literal (field descriptor, field element, coefficient list)
/// could not be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace halfpoint
