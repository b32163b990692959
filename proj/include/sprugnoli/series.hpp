#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sprugnoli/errors.hpp"
#include "sprugnoli/rational.hpp"

namespace sprugnoli {

/// Truncated formal power series a_0 + a_1 x + ... + a_N x^N over the
/// rationals. The truncation order N is part of the value: coefficients
/// beyond N are unknown, not zero. Every operation below returns a series
/// whose order is the largest index it can certify exactly.
class Series {
 public:
  /// The zero series at order 0.
  Series() : coeffs_(1) {}

  /// The zero series at the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}

  /// Order is coeffs.size() - 1; an empty vector is rejected.
  explicit Series(std::vector<Rational> coeffs);

  /// Integer coefficients, zero-padded (or cut) to the given order.
  static Series from_ints(std::initializer_list<long> coeffs, std::size_t order);
  static Series from_ints(std::span<const long> coeffs, std::size_t order);

  static Series constant(const Rational& c, std::size_t order);
  static Series one(std::size_t order) { return constant(1, order); }
  static Series x(std::size_t order) { return monomial(1, 1, order); }
  /// c x^k at the given order (zero if k > order).
  static Series monomial(const Rational& c, std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  /// [x^n]; throws SeriesError(out_of_range) when n > order().
  const Rational& coeff(std::size_t n) const;
  /// Unchecked access.
  const Rational& operator[](std::size_t n) const noexcept { return coeffs_[n]; }
  void set(std::size_t n, const Rational& value);

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, order() + 1 if none is known.
  std::size_t valuation() const noexcept;
  bool is_zero() const noexcept { return valuation() > order(); }

  bool in_f0() const noexcept { return sgn(coeffs_[0]) != 0; }
  bool in_f1() const noexcept { return in_fr(1); }
  /// Valuation exactly r (leading coefficient nonzero).
  bool in_fr(std::size_t r) const noexcept { return valuation() == r; }
  /// All even-index coefficients vanish.
  bool is_odd() const noexcept;
  /// All odd-index coefficients vanish.
  bool is_even() const noexcept;

  /// Drops coefficients above n. Throws insufficient_precision if n > order().
  Series truncated(std::size_t n) const;

  bool operator==(const Series& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

// Ring operations. Operands must share one truncation order.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scale(const Rational& c, const Series& a);
/// Cauchy product truncated at the common order.
Series mul(const Series& a, const Series& b);

/// Product of series with possibly different orders, truncated where it is
/// still exact: min(order(a) + val(b), order(b) + val(a)), capped at the
/// larger of the two orders.
Series mul_exact(const Series& a, const Series& b);

/// Multiplicative inverse; requires a nonzero constant term.
Series mul_inv(const Series& s);

/// a / b for b in F0 with exact truncation (see mul_exact).
Series div_exact(const Series& a, const Series& b);

/// a / b with cancellation of common powers of x: b = x^k b', a = x^k a'.
/// Throws division_undefined if val(a) < val(b) or b is zero.
Series divide(const Series& a, const Series& b);

/// Integer power; negative exponents invert first.
Series pow(const Series& s, long exponent);

/// x^k s; order grows by k.
Series shift_up(const Series& s, std::size_t k);
/// s / x^k; requires val(s) >= k, order shrinks by k.
Series shift_down(const Series& s, std::size_t k);

Series derivative(const Series& s);

/// outer(inner) for inner with zero constant term, by Horner. The result
/// order is min(order(inner), (order(outer) + 1) * val(inner) - 1).
Series compose(const Series& outer, const Series& inner);

/// poly(inner) for a genuine polynomial (finite list of coefficients); any
/// inner is allowed.
Series compose_polynomial(std::span<const Rational> poly, const Series& inner);

/// Compositional inverse of s in F1, by Newton iteration.
Series revert(const Series& s);

/// t with t*t = s and positive leading coefficient. Requires even valuation
/// 2v and a rational-square leading coefficient; result order is order - v.
Series sqrt(const Series& s);

/// Coefficients m*i + r of s, i = 0..floor((N - r) / m).
Series section(const Series& s, std::size_t m, std::size_t r);
/// Even bisection, the series of even-index coefficients (h^e).
inline Series even_part(const Series& s) { return section(s, 2, 0); }
/// Odd bisection (h^o).
inline Series odd_part(const Series& s) { return section(s, 2, 1); }

/// Places coefficient i of s at index m*i + r, zeros elsewhere, up to index
/// target_order. Throws insufficient_precision past m * (order(s) + 1) + r - 1.
Series aerate(const Series& s, std::size_t m, std::size_t r, std::size_t target_order);
/// Same, at the largest certifiable order m * (order(s) + 1) + r - 1.
Series aerate(const Series& s, std::size_t m, std::size_t r);

/// Expansion of 1/(1 - b0 x - l0 x^2/(1 - b1 x - l1 x^2/(...))) to order N.
/// Both coefficient lists repeat cyclically.
Series jacobi_cf(std::span<const Rational> b, std::span<const Rational> lambda, std::size_t order);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Rational& c, const Series& a) { return scale(c, a); }

}  // namespace sprugnoli
