#include "sprugnoli/double_riordan.hpp"

namespace sprugnoli {

DoubleTriple::DoubleTriple(Series g, Series f1, Series f2) : g_(std::move(g)), f1_(std::move(f1)), f2_(std::move(f2)) {
  if (g_.order() != f1_.order() || g_.order() != f2_.order())
    throw MembershipError("double Riordan components differ in order");
  if (!g_.in_f0() || !g_.is_even()) throw MembershipError("double Riordan: g must be even with g(0) != 0");
  if (!f1_.in_f1() || !f1_.is_odd()) throw MembershipError("double Riordan: F1 must be odd and in F1");
  if (!f2_.in_f1() || !f2_.is_odd()) throw MembershipError("double Riordan: F2 must be odd and in F1");
}

TriMatrix build_double(const DoubleTriple& d, std::size_t dim) {
  if (dim > d.order() + 1) throw SeriesError(SeriesError::Kind::insufficient_precision, "dimension exceeds order");
  TriMatrix m(dim);
  Series col = d.g();
  for (std::size_t k = 0; k < dim; ++k) {
    if (k) col = mul(col, k % 2 == 1 ? d.f1() : d.f2());
    m.set_column(k, col);
  }
  return m;
}

DoubleTriple double_mul(const DoubleTriple& a, const DoubleTriple& b) {
  const std::size_t n = a.order();
  const Series h2 = mul(a.f1(), a.f2());  // h^2, valuation 2
  Series g = mul(a.g(), compose(even_part(b.g()), h2).truncated(n));
  Series f1 = mul_exact(a.f1(), compose(odd_part(b.f1()), h2)).truncated(n);
  Series f2 = mul_exact(a.f2(), compose(odd_part(b.f2()), h2)).truncated(n);
  return DoubleTriple(std::move(g), std::move(f1), std::move(f2));
}

DoubleTriple double_inv(const DoubleTriple& d) {
  const std::size_t n = d.order();
  const Series rho = even_part(mul(d.f1(), d.f2()));
  const Series hbar2 = aerate(revert(rho), 2, 0).truncated(n);
  const Series x = Series::x(n);
  Series g = mul_inv(compose(even_part(d.g()), hbar2).truncated(n));
  Series f1 = mul_exact(x, mul_inv(compose(odd_part(d.f1()), hbar2))).truncated(n);
  Series f2 = mul_exact(x, mul_inv(compose(odd_part(d.f2()), hbar2))).truncated(n);
  return DoubleTriple(std::move(g), std::move(f1), std::move(f2));
}

}  // namespace sprugnoli
