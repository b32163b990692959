#include "doctest.h"

#include "sprugnoli/expr.hpp"
#include "sprugnoli/higher_order.hpp"
#include "sprugnoli/poly_recurrence.hpp"
#include "support/oracles.hpp"

using namespace sprugnoli;

namespace {

constexpr std::size_t N = 12;

GeneralTuple random_tuple(oracle::Gen& gen, std::size_t m) {
  std::vector<Series> fs;
  for (std::size_t i = 1; i < m; ++i) fs.push_back(gen.f1(N));
  return {m, gen.f0(N), fs, gen.sparse(N, 1, m)};
}

// Column k = g f1 ... f_(k mod m) (x^(m-1) fm)^(k div m), one factor per step.
TriMatrix tuple_oracle(const GeneralTuple& t, std::size_t dim) {
  const std::size_t n = dim - 1, m = t.period();
  const auto step = oracle::cut(oracle::shift_up(oracle::of(t.fm()), m - 1), n);
  std::vector<oracle::Poly> cols;
  oracle::Poly base = oracle::cut(oracle::of(t.g()), n);
  for (std::size_t k = 0; k < dim; ++k) {
    if (k % m == 0) {
      if (k > 0) base = oracle::mul(base, step, n);
      cols.push_back(base);
    } else {
      cols.push_back(oracle::mul(cols.back(), oracle::of(t.fs()[k % m - 1]), n));
    }
  }
  return oracle::columns(cols, dim);
}

}  // namespace

TEST_CASE("tuple membership") {
  const auto one = Series::one(N), x = Series::x(N);
  CHECK_THROWS_AS(GeneralTuple(1, one, {}, x), MembershipError);
  CHECK_THROWS_AS(GeneralTuple(3, one, {x}, x), MembershipError);
  CHECK_THROWS_AS(GeneralTuple(3, one, {x, x}, expr::eval("x+x^2", N)), MembershipError);
  CHECK_NOTHROW(GeneralTuple(3, one, {x, x}, expr::eval("x+x^4", N)));
  CHECK(build_general(GeneralTuple::identity(4, N), 10) == TriMatrix::identity(10));
}

TEST_CASE("matrix and action for several periods") {
  oracle::Gen gen(71);
  for (std::size_t m = 2; m <= 4; ++m)
    for (int trial = 0; trial < 8; ++trial) {
      const auto t = random_tuple(gen, m);
      const auto mat = build_general(t, 10);
      CHECK(mat == tuple_oracle(t, 10));
      const auto h = gen.any(N);
      const auto act = general_apply(t, h);
      const auto via_matrix = apply(mat, h);
      for (std::size_t i = 0; i < 10; ++i) CHECK(act[i] == via_matrix[i]);
    }
}

TEST_CASE("period four follows the schema") {
  const GeneralTuple t(4, expr::eval("1/(1-x)", N),
                       {expr::eval("x*(1+x)", N), expr::eval("x/(1-2*x)", N), expr::eval("x/(1+x)", N)},
                       expr::eval("x/(1-x^4)", N));
  const auto mat = build_general(t, 11);
  const auto g = oracle::of(t.g());
  const auto step = oracle::cut(oracle::shift_up(oracle::of(t.fm()), 3), 10);
  for (std::size_t k = 0; k <= 10; ++k) {
    auto col = oracle::cut(g, 10);
    for (std::size_t i = 0; i < k % 4; ++i) col = oracle::mul(col, oracle::of(t.fs()[i]), 10);
    col = oracle::mul(col, oracle::power(step, k / 4, 10), 10);
    for (std::size_t n = k; n <= 10; ++n) CHECK(mat(n, k) == col[n]);
  }
}

TEST_CASE("period two reduces to the Sprugnoli group") {
  oracle::Gen gen(72);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = gen.triple(N);
    CHECK(build_general(GeneralTuple::from_sprugnoli(t), 11) == build_sprugnoli(t, 11));
    const auto u = gen.triple(N);
    CHECK(general_mul(GeneralTuple::from_sprugnoli(t), GeneralTuple::from_sprugnoli(u), 9) ==
          build_sprugnoli(sprugnoli_mul(t, u), 9));
  }
}

TEST_CASE("read-back regenerates inverses") {
  oracle::Gen gen(73);
  for (std::size_t m = 2; m <= 4; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      const auto t = random_tuple(gen, m);
      const auto gi = general_inv(t, 10);
      CHECK(gi.matrix.dense() == oracle::gauss_jordan_inverse(build_general(t, 10).dense()));
      const auto rb = read_back(build_general(t, 10), m);
      CHECK(rebuild(rb, 10) == build_general(t, 10));
      CHECK(rb.fm_support_ok);
    }
}

TEST_CASE("stripe sums of random tuples") {
  oracle::Gen gen(74);
  for (std::size_t m = 2; m <= 3; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      const auto t = random_tuple(gen, m);
      const auto s = extract_stripes(production_matrix(build_general(t, 13)), m);
      CHECK(s.stripes.size() == m);
      CHECK(reconstruct(s, 12) == production_matrix(build_general(t, 13)));
      const auto report = stripe_zero_pattern(s);
      for (std::size_t i = 0; i < report.sums.size(); ++i) {
        Rational sum;
        for (const auto& stripe : s.stripes) sum += stripe[i];
        CHECK(report.sums[i] == sum);
      }
    }
}

TEST_CASE("two-branch polynomial recurrence") {
  const auto polys = poly_sequence(PolyRecurrence{}, 5);
  // Independent expansion of (x + b) P_(n-1) - c P_(n-2).
  CHECK(polys[2] == std::vector<Rational>{-2, 0, 1});
  CHECK(polys[3] == std::vector<Rational>{3, -3, -1, 1});
  CHECK(polys[4] == std::vector<Rational>{5, 0, -5, 0, 1});
  const auto m = build_poly_recurrence(PolyRecurrence{}, 9);
  for (std::size_t n = 0; n < 9; ++n) CHECK(m(n, n) == 1);
  PolyRecurrence bad;
  bad.p1 = {0, 0, 1};
  CHECK_THROWS_AS(build_poly_recurrence(bad, 4), MatrixError);
}
