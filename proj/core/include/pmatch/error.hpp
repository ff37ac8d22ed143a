#pragma once

#include <stdexcept>
#include <string>

namespace pmatch {

/// Shapes, lengths, ambient dimensions or moduli of the operands disagree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value violates a structural invariant (non-commuting square, bad
/// filtration, matching over its bounds, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `where()` names the offending JSON field path.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace pmatch
