#pragma once

#include <stdexcept>
#include <string>

namespace hookvan {

// Malformed textual input (partition strings, cycle types, config values).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hookvan
