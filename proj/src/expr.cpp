#include "sprugnoli/expr.hpp"

#include <algorithm>
#include <cctype>

namespace sprugnoli::expr {

namespace {

Ast make(Node::Kind kind) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  return n;
}

Ast make(Node::Kind kind, Ast lhs, Ast rhs = nullptr) {
  auto n = make(kind);
  n->children.push_back(std::move(lhs));
  if (rhs) n->children.push_back(std::move(rhs));
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ast parse_all() {
    Ast e = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Ast parse_expr() {
    Ast lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Kind::add, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = make(Node::Kind::sub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Ast parse_term() {
    Ast lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Node::Kind::mul, std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = make(Node::Kind::div, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Ast parse_unary() {
    if (accept('-')) return make(Node::Kind::neg, parse_unary());
    return parse_power();
  }

  Ast parse_power() {
    Ast base = parse_primary();
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool negative = accept('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be an integer");
    Integer e = parse_integer();
    if (paren) expect(')');
    if (!e.fits_slong_p()) fail("exponent too large");
    auto n = make(Node::Kind::pow, std::move(base));
    n->exponent = negative ? -e.get_si() : e.get_si();
    return n;
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Ast parse_primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = make(Node::Kind::integer);
      n->value = parse_integer();
      return n;
    }
    if (accept('(')) {
      Ast inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return make(Node::Kind::variable);
      Node::Kind fn;
      if (name == "sqrt") {
        fn = Node::Kind::sqrt;
      } else if (name == "c") {
        fn = Node::Kind::catalan;
      } else {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      expect('(');
      Ast arg = parse_expr();
      expect(')');
      return make(fn, std::move(arg));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// x^shift * s. Intermediate values may carry negative powers of x, so that
// forms like (1+x)/(2x^2) * (1 - sqrt(...)) evaluate as written.
struct Value {
  Series s;
  long shift = 0;

  long precision() const { return shift + static_cast<long>(s.order()); }
};

Value normalized(Value v) {
  const std::size_t k = v.s.valuation();
  if (k > 0 && k <= v.s.order()) {
    v.s = shift_down(v.s, k);
    v.shift += static_cast<long>(k);
  }
  return v;
}

std::size_t to_size(long n) {
  if (n < 0) throw SeriesError(SeriesError::Kind::insufficient_precision, "no coefficients known");
  return static_cast<std::size_t>(n);
}

Value add_values(const Value& a, const Value& b, bool subtract) {
  const long e = std::min(a.shift, b.shift);
  const long p = std::min(a.precision(), b.precision());
  const std::size_t order = to_size(p - e);
  Series sa = shift_up(a.s, static_cast<std::size_t>(a.shift - e)).truncated(order);
  Series sb = shift_up(b.s, static_cast<std::size_t>(b.shift - e)).truncated(order);
  return {subtract ? sub(sa, sb) : add(sa, sb), e};
}

Value unit_part(const Value& v) {
  Value n = normalized(v);
  if (n.s.is_zero()) {
    throw SeriesError(n.precision() >= 0 ? SeriesError::Kind::insufficient_precision
                                         : SeriesError::Kind::division_undefined,
                      "division by a series with no known nonzero coefficient");
  }
  return n;
}

Value eval_at(const Node& n, std::size_t order) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::integer:
      return {Series::constant(Rational(n.value), order), 0};
    case K::variable:
      return {Series::one(order), 1};
    case K::neg: {
      Value v = eval_at(*n.children[0], order);
      return {neg(v.s), v.shift};
    }
    case K::sqrt: {
      Value v = normalized(eval_at(*n.children[0], order));
      if (v.s.is_zero()) throw SeriesError(SeriesError::Kind::insufficient_precision, "square root of unknown terms");
      if (v.shift % 2 != 0) throw SeriesError(SeriesError::Kind::no_rational_sqrt, "square root of an odd power of x");
      return {sqrt(v.s), v.shift / 2};
    }
    case K::pow: {
      if (n.exponent == 0) return {Series::one(order), 0};
      Value v = unit_part(eval_at(*n.children[0], order));
      return {pow(v.s, n.exponent), v.shift * n.exponent};
    }
    case K::catalan: {
      // (1 - sqrt(1 - 4u)) / (2u)
      Value u = eval_at(*n.children[0], order);
      const std::size_t o = to_size(u.precision());
      Value one{Series::one(o), 0};
      Value four_u{scale(4, u.s), u.shift};
      Value root = normalized(add_values(one, four_u, true));
      if (root.shift != 0) throw SeriesError(SeriesError::Kind::no_rational_sqrt, "c(u) needs 1 - 4u(0) != 0");
      Value num = add_values(one, {sqrt(root.s), 0}, true);
      Value den = unit_part({scale(2, u.s), u.shift});
      return {mul_exact(num.s, mul_inv(den.s)), num.shift - den.shift};
    }
    default:
      break;
  }
  const Value a = eval_at(*n.children[0], order);
  const Value b = eval_at(*n.children[1], order);
  switch (n.kind) {
    case K::add:
      return add_values(a, b, false);
    case K::sub:
      return add_values(a, b, true);
    case K::mul:
      return {mul_exact(a.s, b.s), a.shift + b.shift};
    case K::div: {
      const Value d = unit_part(b);
      return {mul_exact(a.s, mul_inv(d.s)), a.shift - d.shift};
    }
    default:
      throw std::logic_error("unhandled expression node");
  }
}

Series to_series(const Value& v) {
  const Value n = normalized(v);
  if (n.shift < 0 && !n.s.is_zero()) {
    throw SeriesError(SeriesError::Kind::division_undefined,
                      "not a power series: has a term in x^" + std::to_string(n.shift));
  }
  if (n.shift >= 0) return shift_up(n.s, static_cast<std::size_t>(n.shift));
  return Series(to_size(n.precision()));
}

}  // namespace

Ast parse(std::string_view text) { return Parser(text).parse_all(); }

Series eval(const Node& ast, std::size_t order) {
  // x-cancelling divisions and square roots lose known coefficients, so
  // evaluate with headroom and widen it until the result certifies `order`.
  for (std::size_t extra = 4; extra <= 64; extra *= 2) {
    try {
      Series s = to_series(eval_at(ast, order + extra));
      if (s.order() >= order) return s.truncated(order);
    } catch (const SeriesError& e) {
      if (e.kind() != SeriesError::Kind::insufficient_precision) throw;
    }
  }
  throw SeriesError(SeriesError::Kind::insufficient_precision,
                    "expression cannot be certified to order " + std::to_string(order));
}

Series eval(std::string_view text, std::size_t order) { return eval(*parse(text), order); }

std::string to_string(const Node& n) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::integer:
      return n.value.get_str();
    case K::variable:
      return "x";
    case K::neg:
      return "(-" + to_string(*n.children[0]) + ")";
    case K::sqrt:
      return "sqrt(" + to_string(*n.children[0]) + ")";
    case K::catalan:
      return "c(" + to_string(*n.children[0]) + ")";
    case K::pow:
      return "(" + to_string(*n.children[0]) + ")^(" + std::to_string(n.exponent) + ")";
    default:
      break;
  }
  const char* op = n.kind == K::add ? "+" : n.kind == K::sub ? "-" : n.kind == K::mul ? "*" : "/";
  return "(" + to_string(*n.children[0]) + op + to_string(*n.children[1]) + ")";
}

}  // namespace sprugnoli::expr
