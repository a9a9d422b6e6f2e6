#pragma once

#include <stdexcept>
#include <string>

namespace hexmetric {

/// Argument outside the domain of a geometric function (non-positive length,
/// t-coordinate outside the open region H3, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed combinatorial or coordinate input.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hexmetric
