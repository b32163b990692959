#include "sprugnoli/sprugnoli.hpp"

namespace sprugnoli {

namespace {

Series x_times(const Series& s) { return shift_up(s, 1); }

bool is_x(const Series& s) { return s == Series::x(s.order()); }

bool is_one(const Series& s) { return s == Series::one(s.order()); }

}  // namespace

SprugnoliTriple::SprugnoliTriple(Series g, Series f1, Series f2)
    : g_(std::move(g)), f1_(std::move(f1)), f2_(std::move(f2)) {
  if (g_.order() != f1_.order() || g_.order() != f2_.order())
    throw MembershipError("Sprugnoli triple components differ in order");
  if (!g_.in_f0()) throw MembershipError("Sprugnoli triple: g must be in F0");
  if (!f1_.in_f1()) throw MembershipError("Sprugnoli triple: f1 must be in F1");
  if (!f2_.in_f1()) throw MembershipError("Sprugnoli triple: f2 must be in F1");
  if (!f2_.is_odd()) throw MembershipError("Sprugnoli triple: f2 must be odd");
}

SprugnoliTriple SprugnoliTriple::identity(std::size_t order) {
  return SprugnoliTriple(Series::one(order), Series::x(order), Series::x(order));
}

TriMatrix build_sprugnoli(const SprugnoliTriple& t, std::size_t dim) {
  if (dim > t.order() + 1) throw SeriesError(SeriesError::Kind::insufficient_precision, "dimension exceeds order");
  const std::size_t n = t.order();
  const Series xf2 = x_times(t.f2()).truncated(n);
  TriMatrix m(dim);
  Series even = t.g();
  for (std::size_t k = 0; k < dim; ++k) {
    if (k % 2 == 0) {
      if (k) even = mul(even, xf2);
      m.set_column(k, even);
    } else {
      m.set_column(k, mul(even, t.f1()));
    }
  }
  return m;
}

AerationParts aeration_split(const SprugnoliTriple& t, std::size_t dim) {
  const TriMatrix full = build_sprugnoli(t, dim);
  AerationParts parts{TriMatrix(dim), TriMatrix(dim)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) (j % 2 == 0 ? parts.even : parts.odd).set(i, j, full(i, j));
  return parts;
}

Series sprugnoli_apply(const SprugnoliTriple& t, const Series& h) {
  const std::size_t n = t.order();
  const Series hn = h.truncated(n);
  const Series xf2 = x_times(t.f2());
  Series even = mul(t.g(), compose(even_part(hn), xf2).truncated(n));
  Series odd = mul_exact(mul(t.g(), t.f1()), compose(odd_part(hn), xf2)).truncated(n);
  return add(even, odd);
}

Series third_component(const Series& f2, const Series& v2) {
  return mul_exact(f2, compose(odd_part(v2), x_times(f2))).truncated(f2.order());
}

SprugnoliTriple sprugnoli_mul(const SprugnoliTriple& a, const SprugnoliTriple& b) {
  Series first = sprugnoli_apply(a, b.g());
  Series second = div_exact(sprugnoli_apply(a, mul(b.g(), b.f1())), first).truncated(a.order());
  Series third = third_component(a.f2(), b.f2());
  return SprugnoliTriple(std::move(first), std::move(second), std::move(third));
}

Series compute_r2(const Series& f2) {
  if (!f2.in_f1() || !f2.is_odd()) throw MembershipError("r2 needs f2 odd with nonzero linear coefficient");
  const Series sigma = even_part(x_times(f2));
  return shift_down(aerate(revert(sigma), 2, 0), 1).truncated(f2.order());
}

Series compute_r1(const Series& f1, const Series& r2) {
  if (!f1.in_f1()) throw MembershipError("r1 needs f1 in F1");
  const std::size_t n = f1.order();
  const Series xr2 = x_times(r2);
  Series num = sub(Series::x(n), compose(even_part(f1), xr2).truncated(n));
  Series den = compose(odd_part(f1), xr2);
  if (!den.in_f0()) throw SeriesError(SeriesError::Kind::division_undefined, "f1^o(x r2) is not invertible");
  return div_exact(num, den).truncated(n);
}

InverseParts inverse_parts(const SprugnoliTriple& t) {
  const std::size_t n = t.order();
  InverseParts p;
  p.r2 = compute_r2(t.f2());
  p.r1 = compute_r1(t.f1(), p.r2);
  const Series xr2 = x_times(p.r2);
  const Series inv_g = mul_inv(t.g());
  const Series ge = compose(even_part(inv_g), xr2).truncated(n);
  const Series go = compose(odd_part(inv_g), xr2);
  p.w = add(ge, mul_exact(p.r1, go).truncated(n));
  if (!p.w.in_f0()) throw SeriesError(SeriesError::Kind::not_invertible, "w has zero constant term");
  Series num = add(mul_exact(xr2, go).truncated(n), mul(p.r1, ge));
  p.s1 = div_exact(num, p.w).truncated(n);
  p.s2 = p.r2;
  return p;
}

SprugnoliTriple sprugnoli_inv(const SprugnoliTriple& t) {
  InverseParts p = inverse_parts(t);
  return SprugnoliTriple(std::move(p.w), std::move(p.s1), std::move(p.s2));
}

Series bivariate_at(const SprugnoliTriple& t, const Series& y) {
  const std::size_t n = t.order();
  const Series one = Series::one(n);
  const Series yn = y.truncated(n);
  Series num = mul(t.g(), add(one, mul(yn, t.f1())));
  Series den = sub(one, mul(mul(yn, yn), x_times(t.f2()).truncated(n)));
  return mul(num, mul_inv(den));
}

Series sums_gf(const SprugnoliTriple& t, SumKind kind) {
  const std::size_t n = t.order();
  return bivariate_at(t, kind == SumKind::rows ? Series::one(n) : Series::x(n));
}

SprugnoliTriple from_riordan_sqrt_case(const Series& g, const Series& f2) {
  Series f1 = sqrt(x_times(f2)).truncated(f2.order());
  return SprugnoliTriple(g, std::move(f1), f2);
}

SprugnoliTriple scaling_element(const Series& g) {
  return SprugnoliTriple(g, Series::x(g.order()), Series::x(g.order()));
}

DoubleTriple as_double(const SprugnoliTriple& t) {
  if (!t.g().is_even() || !t.f1().is_odd()) throw MembershipError("double form needs g even and f1 odd");
  return DoubleTriple(t.g(), t.f1(), divide(x_times(t.f2()), t.f1()).truncated(t.order()));
}

bool belongs_to(const SprugnoliTriple& t, Subgroup s) {
  switch (s) {
    case Subgroup::scaling:
      return is_x(t.f1()) && is_x(t.f2());
    case Subgroup::unit_g:
      return is_one(t.g());
    case Subgroup::unit_g_f1:
      return is_one(t.g()) && is_x(t.f1());
    case Subgroup::unit_g_f2:
      return is_one(t.g()) && is_x(t.f2());
  }
  return false;
}

}  // namespace sprugnoli
