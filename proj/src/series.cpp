#include "sprugnoli/series.hpp"

#include <algorithm>
#include <sstream>

namespace sprugnoli {

using Kind = SeriesError::Kind;

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::from_ints(std::initializer_list<long> coeffs, std::size_t order) {
  return from_ints(std::span<const long>(coeffs.begin(), coeffs.size()), order);
}

Series Series::from_ints(std::span<const long> coeffs, std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s.coeffs_[i] = coeffs[i];
  return s;
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, std::size_t k, std::size_t order) {
  Series s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

const Rational& Series::coeff(std::size_t n) const {
  if (n > order()) {
    throw SeriesError(Kind::out_of_range, "coefficient " + std::to_string(n) +
                                              " beyond truncation order " + std::to_string(order()));
  }
  return coeffs_[n];
}

void Series::set(std::size_t n, const Rational& value) {
  if (n > order()) throw SeriesError(Kind::out_of_range, "set beyond truncation order");
  coeffs_[n] = value;
}

std::size_t Series::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  return coeffs_.size();
}

bool Series::is_odd() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool Series::is_even() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Series Series::truncated(std::size_t n) const {
  if (n > order()) {
    throw SeriesError(Kind::insufficient_precision, "series known to order " + std::to_string(order()) +
                                                        ", order " + std::to_string(n) + " requested");
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

std::string Series::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << "] + O(x^" << coeffs_.size() << ')';
  return os.str();
}

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw SeriesError(Kind::order_mismatch, std::string(op) + ": truncation orders " +
                                                std::to_string(a.order()) + " and " +
                                                std::to_string(b.order()) + " differ");
  }
}

// Cauchy product of the first n+1 coefficients of a and b.
Series convolve(const Series& a, const Series& b, std::size_t n) {
  std::vector<Rational> out(n + 1);
  std::size_t va = a.valuation(), vb = b.valuation();
  for (std::size_t k = va + vb; k <= n; ++k) {
    Rational acc;
    std::size_t lo = std::max(va, k > b.order() ? k - b.order() : std::size_t{0});
    std::size_t hi = std::min(k - vb, a.order());
    for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
    out[k] = acc;
  }
  return Series(std::move(out));
}

}  // namespace

Series add(const Series& a, const Series& b) {
  require_same_order(a, b, "add");
  std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return Series(std::move(out));
}

Series sub(const Series& a, const Series& b) {
  require_same_order(a, b, "sub");
  std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return Series(std::move(out));
}

Series neg(const Series& a) { return scale(-1, a); }

Series scale(const Rational& c, const Series& a) {
  std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : out) v *= c;
  return Series(std::move(out));
}

Series mul(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  return convolve(a, b, a.order());
}

Series mul_exact(const Series& a, const Series& b) {
  std::size_t exact = std::min(a.order() + b.valuation(), b.order() + a.valuation());
  return convolve(a, b, std::min(exact, std::max(a.order(), b.order())));
}

Series mul_inv(const Series& s) {
  if (!s.in_f0()) throw SeriesError(Kind::not_invertible, "series with zero constant term has no inverse");
  std::vector<Rational> t(s.order() + 1);
  Rational inv0 = 1 / s[0];
  t[0] = inv0;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * t[k - i];
    t[k] = -acc * inv0;
  }
  return Series(std::move(t));
}

Series div_exact(const Series& a, const Series& b) { return mul_exact(a, mul_inv(b)); }

Series divide(const Series& a, const Series& b) {
  std::size_t vb = b.valuation();
  if (vb > b.order()) throw SeriesError(Kind::division_undefined, "division by the zero series");
  if (a.valuation() < vb) {
    throw SeriesError(Kind::division_undefined, "numerator valuation " + std::to_string(a.valuation()) +
                                                    " below denominator valuation " + std::to_string(vb));
  }
  if (vb == 0) return div_exact(a, b);
  if (vb > a.order()) {
    throw SeriesError(Kind::insufficient_precision, "numerator too short to cancel x^" + std::to_string(vb));
  }
  return div_exact(shift_down(a, vb), shift_down(b, vb));
}

Series pow(const Series& s, long exponent) {
  Series base = exponent < 0 ? mul_inv(s) : s;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Series result = Series::one(s.order());
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e) base = mul(base, base);
  }
  return result;
}

Series shift_up(const Series& s, std::size_t k) {
  std::vector<Rational> out(s.order() + 1 + k);
  std::copy(s.coeffs().begin(), s.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return Series(std::move(out));
}

Series shift_down(const Series& s, std::size_t k) {
  if (k == 0) return s;
  if (s.valuation() < k) {
    throw SeriesError(Kind::division_undefined, "cannot divide by x^" + std::to_string(k) +
                                                    ": valuation is " + std::to_string(s.valuation()));
  }
  if (k > s.order()) {
    throw SeriesError(Kind::insufficient_precision, "dividing by x^" + std::to_string(k) +
                                                        " leaves no known coefficients");
  }
  return Series(std::vector<Rational>(s.coeffs().begin() + static_cast<std::ptrdiff_t>(k), s.coeffs().end()));
}

Series derivative(const Series& s) {
  if (s.order() == 0) throw SeriesError(Kind::insufficient_precision, "derivative of an order-0 series");
  std::vector<Rational> out(s.order());
  for (std::size_t i = 1; i <= s.order(); ++i) out[i - 1] = s[i] * static_cast<unsigned long>(i);
  return Series(std::move(out));
}

Series compose(const Series& outer, const Series& inner) {
  if (sgn(inner[0]) != 0) {
    throw SeriesError(Kind::composition_undefined, "inner series has nonzero constant term");
  }
  std::size_t v = inner.valuation();
  std::size_t exact = std::min(inner.order(), (outer.order() + 1) * v - 1);
  Series in = inner.truncated(exact);
  std::size_t top = std::min(outer.order(), exact);
  Series acc = Series::constant(outer[top], exact);
  for (std::size_t i = top; i-- > 0;) {
    acc = mul(acc, in);
    Rational c = acc[0] + outer[i];
    acc.set(0, c);
  }
  return acc;
}

Series compose_polynomial(std::span<const Rational> poly, const Series& inner) {
  Series acc(inner.order());
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = mul(acc, inner);
    acc.set(0, acc[0] + poly[i]);
  }
  return acc;
}

Series revert(const Series& s) {
  if (!s.in_f1()) throw SeriesError(Kind::reversion_undefined, "reversion needs a series in F1");
  const std::size_t n = s.order();
  const Series x = Series::x(n);
  const Series ds = derivative(s);
  Series u = Series::monomial(1 / s[1], 1, n);
  // Newton: u <- u - (s(u) - x) / s'(u). Each step at least doubles the
  // number of correct coefficients, so 2 + log2(n) steps suffice; n + 2 is a
  // hard bound in case of a bug.
  for (std::size_t step = 0; step < n + 2; ++step) {
    Series residual = sub(compose(s, u), x);
    std::size_t v = residual.valuation();
    if (v > n) return u;
    Series q = shift_down(residual, v);
    Series d = compose(ds, u.truncated(n - 1)).truncated(n - v);
    u = sub(u, shift_up(mul(q, mul_inv(d)), v));
  }
  throw SeriesError(Kind::reversion_undefined, "Newton iteration failed to converge");
}

Series sqrt(const Series& s) {
  std::size_t v = s.valuation();
  if (v > s.order()) return Series(s.order() / 2);
  if (v % 2 != 0) throw SeriesError(Kind::no_rational_sqrt, "odd valuation " + std::to_string(v));
  auto root = rational_sqrt(s[v]);
  if (!root) {
    throw SeriesError(Kind::no_rational_sqrt, "leading coefficient " + s[v].get_str() + " is not a rational square");
  }
  Series u = scale(1 / s[v], shift_down(s, v));
  std::vector<Rational> t(u.order() + 1);
  t[0] = 1;
  for (std::size_t k = 1; k <= u.order(); ++k) {
    Rational acc;
    for (std::size_t i = 1; i < k; ++i) acc += t[i] * t[k - i];
    t[k] = (u[k] - acc) / 2;
  }
  return shift_up(scale(*root, Series(std::move(t))), v / 2);
}

Series section(const Series& s, std::size_t m, std::size_t r) {
  if (m == 0 || r >= m) throw std::invalid_argument("section needs m >= 1 and 0 <= r < m");
  if (r > s.order()) {
    throw SeriesError(Kind::insufficient_precision, "residue " + std::to_string(r) + " beyond truncation order");
  }
  std::size_t len = (s.order() - r) / m + 1;
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = s[m * i + r];
  return Series(std::move(out));
}

Series aerate(const Series& s, std::size_t m, std::size_t r, std::size_t target_order) {
  if (m == 0 || r >= m) throw std::invalid_argument("aerate needs m >= 1 and 0 <= r < m");
  std::size_t limit = m * (s.order() + 1) + r - 1;
  if (target_order > limit) {
    throw SeriesError(Kind::insufficient_precision, "aeration known only to order " + std::to_string(limit));
  }
  Series t(target_order);
  for (std::size_t i = 0; i <= s.order() && m * i + r <= target_order; ++i) t.set(m * i + r, s[i]);
  return t;
}

Series aerate(const Series& s, std::size_t m, std::size_t r) {
  return aerate(s, m, r, m * (s.order() + 1) + r - 1);
}

Series jacobi_cf(std::span<const Rational> b, std::span<const Rational> lambda, std::size_t order) {
  if (b.empty() || lambda.empty()) throw std::invalid_argument("continued fraction needs coefficients");
  const std::size_t depth = (order + 1) / 2 + 1;
  const Series x = Series::x(order);
  const Series x2 = Series::monomial(1, 2, order);
  Series tail = Series::one(order);
  for (std::size_t d = depth; d-- > 0;) {
    Series denom = Series::one(order) - scale(b[d % b.size()], x) - scale(lambda[d % lambda.size()], mul(x2, tail));
    if (sgn(denom[0]) == 0) throw SeriesError(Kind::singular_cf, "zero denominator at depth " + std::to_string(d));
    tail = mul_inv(denom);
  }
  return tail;
}

}  // namespace sprugnoli
