#include "doctest.h"

#include "sprugnoli/expr.hpp"
#include "support/oracles.hpp"

using namespace sprugnoli;

namespace {

std::size_t error_position(const char* text) {
  try {
    (void)expr::parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("parsed: " << text);
  return 0;
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(expr::eval("1+2*x^2", 4) == Series::from_ints({1, 0, 2}, 4));
  CHECK(expr::eval("2-x-x", 3) == Series::from_ints({2, -2}, 3));
  CHECK(expr::eval("x/2/2", 3) == Series::from_ints({0}, 3) + Series::monomial(Rational(1, 4), 1, 3));
  CHECK(expr::eval("-x^2", 3) == Series::from_ints({0, 0, -1}, 3));
  CHECK(expr::eval("(1+x)^-1", 5) == expr::eval("1/(1+x)", 5));
  CHECK(expr::eval("(1+x)^(-2)", 5) == expr::eval("1/(1+x)^2", 5));
  CHECK(expr::eval(" 3 * ( x + 1 ) ", 2) == Series::from_ints({3, 3}, 2));
}

TEST_CASE("rational generating functions") {
  const auto fib = expr::eval("1/(1-x-x^2)", 10);
  CHECK(oracle::of(fib) == oracle::Poly{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
  CHECK(expr::eval("x/(1-x)^2", 6) == Series::from_ints({0, 1, 2, 3, 4, 5, 6}, 6));
}

TEST_CASE("cancelling divisions work above the requested order") {
  // x^3/x^3 needs three extra known coefficients.
  CHECK(expr::eval("(x^3+x^4)/(x^3)", 5) == Series::from_ints({1, 1}, 5));
  CHECK(expr::eval("(1-sqrt(1-4*x))/(2*x)", 6) == expr::eval("c(x)", 6));
  CHECK(expr::eval("(1-x^2-sqrt((1-x^2)*(1-5*x^2)))/(2*x^2)", 6).order() == 6);
}

TEST_CASE("Laurent intermediates") {
  // 1/x appears inside but cancels.
  CHECK(expr::eval("x*(1/x+1)", 4) == Series::from_ints({1, 1}, 4));
  CHECK(expr::eval("(x+1/x)*x^2-x", 4) == Series::from_ints({0, 0, 0, 1}, 4));
  CHECK_THROWS_AS(expr::eval("1/x", 4), SeriesError);
  CHECK_THROWS_AS(expr::eval("sqrt(x)", 4), SeriesError);
}

TEST_CASE("Catalan function") {
  const auto c = expr::eval("c(x)", 8);
  CHECK(oracle::of(c) == oracle::Poly{1, 1, 2, 5, 14, 42, 132, 429, 1430});
  const auto cneg = expr::eval("x*c(-x^2)", 8);
  CHECK(oracle::of(cneg) == oracle::Poly{0, 1, 0, -1, 0, 2, 0, -5, 0});
}

TEST_CASE("parse errors report positions") {
  CHECK(error_position("1+") == 2);
  CHECK(error_position("2x") == 1);
  CHECK(error_position("(1+x") == 4);
  CHECK(error_position("y") == 0);
  CHECK(error_position("x^x") == 2);
  CHECK(error_position("sqrt 2") == 5);
  CHECK(error_position("1+x)") == 3);
  CHECK_THROWS_AS(expr::parse(""), ParseError);
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"1/(1-x-x^2)", "-x^2*(1+x)^-3", "sqrt(1+6*x^2+x^4)-x^2-1", "c(-x^2)/(2-x)"}) {
    const auto ast = expr::parse(text);
    const auto printed = expr::to_string(*ast);
    CHECK(expr::eval(*expr::parse(printed), 10) == expr::eval(*ast, 10));
    CHECK(expr::to_string(*expr::parse(printed)) == printed);
  }
}
