#include "doctest.h"

#include "sprugnoli/expr.hpp"
#include "sprugnoli/production.hpp"
#include "sprugnoli/riordan.hpp"
#include "support/oracles.hpp"

using namespace sprugnoli;

namespace {

// M^-1 Mbar by Gauss-Jordan on the leading block.
Matrix production_oracle(const TriMatrix& m) {
  const std::size_t n = m.dim() - 1;
  const auto inv = oracle::gauss_jordan_inverse(m.dense().leading(n));
  Matrix bar(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bar(i, j) = m(i + 1, j);
  return inv * bar;
}

}  // namespace

TEST_CASE("production matrix agrees with dense elimination") {
  oracle::Gen gen(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = gen.triple(12);
    const auto m = build_sprugnoli(t, 10);
    CHECK(production_matrix(m) == production_oracle(m));
  }
  CHECK_THROWS_AS(production_matrix(TriMatrix::identity(1)), MatrixError);
}

TEST_CASE("ordinary Riordan arrays have period one") {
  const RiordanPair p(expr::eval("1/(1-x)", 12), expr::eval("x/(1-x)^2", 12));
  const auto s = extract_stripes(production_matrix(build_riordan(p, 10)), 1);
  CHECK(s.stripes.size() == 1);
  // A(t) = t / fbar(t), fbar by Lagrange inversion.
  const auto fbar = oracle::revert(oracle::of(p.f()), 12);
  const auto a = oracle::inv(oracle::Poly(fbar.begin() + 1, fbar.end()), 11);
  for (std::size_t i = 0; i < s.stripes[0].size(); ++i) CHECK(s.stripes[0][i] == a[i]);
}

TEST_CASE("stripes reconstruct the production matrix") {
  oracle::Gen gen(62);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = gen.triple(12);
    const auto p = production_matrix(build_sprugnoli(t, 10));
    const auto s = extract_stripes(p, 2);
    CHECK(reconstruct(s, p.dim()) == p);
    CHECK(recurrence_check(build_sprugnoli(t, 10), s).ok);
  }
}

TEST_CASE("a matrix without stripes is rejected") {
  auto p = production_matrix(build_sprugnoli(oracle::Gen(63).triple(12), 8));
  p(5, 3) += 1;
  CHECK_THROWS_AS(extract_stripes(p, 2), MatrixError);
  CHECK_NOTHROW(extract_stripes(p, 2, Rational(1)));
}

TEST_CASE("closed-form stripes") {
  oracle::Gen gen(64);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = gen.triple(12);
    const auto s = extract_stripes(production_matrix(build_sprugnoli(t, 12)), 2);
    const auto cf = ab_series_closed_form(t);
    for (std::size_t i = 0; i < s.z.size(); ++i) CHECK(cf.z[i] == s.z[i]);
    for (std::size_t i = 0; i < s.stripes[0].size(); ++i) CHECK(cf.a[i] == s.stripes[0][i]);
    for (std::size_t i = 0; i < s.stripes[1].size(); ++i) CHECK(cf.b[i] == s.stripes[1][i]);
    CHECK((cf.a + cf.b).is_even());
  }
}

TEST_CASE("recurrence values") {
  const SprugnoliTriple t(expr::eval("1/(1-x-x^2)", 12), expr::eval("x*(1+x)/(1-x)", 12),
                          expr::eval("x/(1-x^2)", 12));
  const auto m = build_sprugnoli(t, 12);
  const auto s = extract_stripes(production_matrix(m), 2);
  CHECK(recurrence_value(m, s, 6, 0) == 13);
  CHECK(recurrence_value(m, s, 7, 1) == 53);
  CHECK(recurrence_value(m, s, 6, 2) == 8);
  auto bad = m;
  bad.set(6, 2, 9);
  const auto report = recurrence_check(bad, s);
  CHECK_FALSE(report.ok);
  CHECK(report.row == 6);
  CHECK(report.col == 2);
}
