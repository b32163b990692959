#include "sprugnoli/rational.hpp"

#include <stdexcept>

namespace sprugnoli {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

std::optional<Integer> integer_sqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return Integer(sqrt(n));
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto num = integer_sqrt(q.get_num());
  auto den = integer_sqrt(q.get_den());
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

}  // namespace sprugnoli
