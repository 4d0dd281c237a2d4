#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace viewcurve {

/// Malformed expression text. `offset()` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset),
        detail_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Evaluation left the domain of some sub-expression (division by zero,
/// sqrt of a negative number, non-finite result).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family-of-curves quantity was requested where the family is not regular.
class RegularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad suite / CLI configuration, or an unmet precondition of a check.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace viewcurve
