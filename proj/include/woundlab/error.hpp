#pragma once

#include <stdexcept>
#include <string>

namespace woundlab {

/// Raised when a series operation would need coefficients beyond the known
/// precision window.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed mathematical input (reducible modulus, zero leading
/// coefficient, square parameter where a non-square is required, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the expression parser; carries the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

}  // namespace woundlab
