#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sprugnoli {

/// Failure of a formal power series operation. The kind lets callers (and
/// tests) distinguish the contract that was violated.
class SeriesError : public std::domain_error {
 public:
  enum class Kind {
    out_of_range,
    order_mismatch,
    not_invertible,
    composition_undefined,
    reversion_undefined,
    no_rational_sqrt,
    division_undefined,
    singular_cf,
    insufficient_precision,
  };

  SeriesError(Kind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Expression text that does not match the grammar.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A tuple of series violates the membership constraints of its group.
class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix-level failures (singular diagonal, dimension mismatch, stripes).
class MatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sprugnoli
