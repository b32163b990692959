#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sprugnoli/series.hpp"

namespace sprugnoli::expr {

// Grammar (whitespace ignored, explicit '*' required):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= ['-'] INT | '(' ['-'] INT ')'
//   primary := INT | 'x' | '(' expr ')' | 'sqrt' '(' expr ')' | 'c' '(' expr ')'
//
// c(u) is the Catalan generating function (1 - sqrt(1 - 4u)) / (2u).

struct Node {
  enum class Kind { integer, variable, add, sub, neg, mul, div, pow, sqrt, catalan };

  Kind kind;
  Integer value;   // integer literal
  long exponent = 0;  // pow
  std::vector<std::unique_ptr<Node>> children;
};

using Ast = std::unique_ptr<Node>;

/// Throws ParseError with the offending position.
Ast parse(std::string_view text);

/// Exact truncated series to the requested order. Works at a higher internal
/// order when divisions cancel powers of x, and throws SeriesError if the
/// expression is undefined as a power series.
Series eval(const Node& ast, std::size_t order);

/// parse + eval.
Series eval(std::string_view text, std::size_t order);

/// Fully parenthesized text that parses back to an equivalent tree.
std::string to_string(const Node& ast);

}  // namespace sprugnoli::expr
