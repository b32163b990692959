#include "doctest.h"

#include "sprugnoli/expr.hpp"
#include "sprugnoli/matrix.hpp"
#include "sprugnoli/riordan.hpp"
#include "support/oracles.hpp"

using namespace sprugnoli;

namespace {

Series E(const char* text, std::size_t order = 12) { return expr::eval(text, order); }

RiordanPair random_pair(oracle::Gen& gen, std::size_t order) { return {gen.f0(order), gen.f1(order)}; }

}  // namespace

TEST_CASE("triangular matrices") {
  const auto m = TriMatrix::from_rows({{2, 0, 0}, {1, 3, 0}, {-1, 4, 1}});
  CHECK(m(0, 2) == 0);
  CHECK(m.column(1) == Series::from_ints({0, 3, 4}, 2));
  CHECK(inverse(m) * m == TriMatrix::identity(3));
  CHECK(inverse(m).dense() == oracle::gauss_jordan_inverse(m.dense()));
  CHECK_THROWS_AS(inverse(TriMatrix::from_rows({{1, 0}, {1, 0}})), MatrixError);
  CHECK_THROWS_AS(TriMatrix(Matrix::from_rows({{1, 1}, {0, 1}})), MatrixError);
  CHECK(to_string(TriMatrix::from_rows({{1, 0}, {-1, 1}})) == " 1  0\n-1  1\n");
}

TEST_CASE("inverse agrees with Gauss-Jordan on random triangles") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    TriMatrix m(7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j <= i; ++j) m.set(i, j, i == j ? gen.nonzero() : gen.coeff());
    CHECK(inverse(m).dense() == oracle::gauss_jordan_inverse(m.dense()));
  }
}

TEST_CASE("membership") {
  CHECK_THROWS_AS(RiordanPair(E("x"), E("x")), MembershipError);
  CHECK_THROWS_AS(RiordanPair(E("1"), E("1+x")), MembershipError);
  CHECK_THROWS_AS(RiordanPair(E("1"), E("x^2")), MembershipError);
  CHECK_THROWS_AS(RiordanPair(E("1", 4), E("x", 5)), MembershipError);
  CHECK_THROWS_AS(StretchedPair(E("1"), E("x")), MembershipError);
}

TEST_CASE("Riordan array of binomial type") {
  const RiordanPair p(E("1/(1-x)"), E("x/(1-x)^2"));
  const auto m = build_riordan(p, 9);
  for (long n = 0; n < 9; ++n)
    for (long k = 0; k <= n; ++k) CHECK(m(n, k) == oracle::binomial(n + k, 2 * k));
  CHECK_THROWS(build_riordan(p, 14));
}

TEST_CASE("Riordan group laws") {
  oracle::Gen gen(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_pair(gen, 8), b = random_pair(gen, 8);
    CHECK(build_riordan(riordan_mul(a, b), 9) == build_riordan(a, 9) * build_riordan(b, 9));
    CHECK(build_riordan(riordan_inv(a), 9) * build_riordan(a, 9) == TriMatrix::identity(9));
    const auto h = gen.any(8);
    CHECK(oracle::of(riordan_apply(a, h)) == [&] {
      const auto v = apply(build_riordan(a, 9), h);
      return oracle::Poly(v.begin(), v.end());
    }());
  }
}

TEST_CASE("stretched arrays") {
  const StretchedPair s(E("1/(1-x)"), E("x^2/(1-x-x^2)"));
  const auto m = build_stretched(s, 9);
  CHECK(m.row(8) == std::vector<Rational>{1, 33, 38, 13, 1, 0, 0, 0, 0});
  const auto fib = E("1/(1-x-x^2)", 12);
  const auto via_matrix = apply(m, fib);
  const auto via_action = stretched_apply(s, fib);
  for (std::size_t n = 0; n < 9; ++n) CHECK(via_matrix[n] == via_action[n]);
  // Independent: column k of the oracle is g (xf)^k.
  std::vector<oracle::Poly> cols;
  for (std::size_t k = 0; k < 9; ++k)
    cols.push_back(oracle::mul(oracle::of(s.g()), oracle::power(oracle::of(s.xf()), k, 8), 8));
  CHECK(m == oracle::columns(cols, 9));
}
