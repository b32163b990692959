#pragma once

#include <cstddef>

#include "sprugnoli/double_riordan.hpp"
#include "sprugnoli/matrix.hpp"
#include "sprugnoli/riordan.hpp"
#include "sprugnoli/series.hpp"

namespace sprugnoli {

/// Element (g, f1, f2) of the Sprugnoli group: g in F0, f1 in F1, f2 in F1
/// and odd. All three share one truncation order.
///
/// Column k of the matrix has generating function
///   g * f1^(k mod 2) * (x f2)^floor(k/2),
/// i.e. g, g f1, g (x f2), g f1 (x f2), g (x f2)^2, ...
class SprugnoliTriple {
 public:
  /// Throws MembershipError if any constraint fails.
  SprugnoliTriple(Series g, Series f1, Series f2);

  static SprugnoliTriple identity(std::size_t order);

  const Series& g() const noexcept { return g_; }
  const Series& f1() const noexcept { return f1_; }
  const Series& f2() const noexcept { return f2_; }
  std::size_t order() const noexcept { return g_.order(); }

  bool operator==(const SprugnoliTriple&) const = default;

 private:
  Series g_;
  Series f1_;
  Series f2_;
};

/// Building blocks of the inverse (w, s1, s2) = (1, r1, r2) (1/g, x, x).
struct InverseParts {
  Series r1;
  Series r2;
  Series w;
  Series s1;
  Series s2;
};

/// The matrix as a sum of two horizontal aerations of stretched arrays:
/// `even` carries columns g (x f2)^m at k = 2m, `odd` carries
/// g f1 (x f2)^m at k = 2m + 1.
struct AerationParts {
  TriMatrix even;
  TriMatrix odd;
};

TriMatrix build_sprugnoli(const SprugnoliTriple& t, std::size_t dim);
AerationParts aeration_split(const SprugnoliTriple& t, std::size_t dim);

/// (g, f1, f2) . h = g h^e(x f2) + g f1 h^o(x f2). h must be known at least
/// to the triple's order.
Series sprugnoli_apply(const SprugnoliTriple& t, const Series& h);

/// Group product. First component a.u, second (a.(u v1)) / (a.u), third
/// f2 v2^o(x f2); the last equals (1/x) sqrt(x f2) v2(sqrt(x f2)) because v2
/// is odd.
SprugnoliTriple sprugnoli_mul(const SprugnoliTriple& a, const SprugnoliTriple& b);

/// f2 v2^o(x f2), the third component of (g, f1, f2)(u, v1, v2).
Series third_component(const Series& f2, const Series& v2);

/// r2 = (1/x) (reversion of sqrt(x f2))^2, computed as the odd series with
/// coefficient 2i+1 equal to coefficient i+1 of revert((x f2)^e).
Series compute_r2(const Series& f2);

/// r1 = (x - f1^e(x r2)) / f1^o(x r2).
Series compute_r1(const Series& f1, const Series& r2);

InverseParts inverse_parts(const SprugnoliTriple& t);
SprugnoliTriple sprugnoli_inv(const SprugnoliTriple& t);

enum class SumKind { rows, diagonals };

/// Row sums g(1 + f1)/(1 - x f2) or diagonal sums g(1 + x f1)/(1 - x^2 f2).
Series sums_gf(const SprugnoliTriple& t, SumKind kind);

/// The bivariate generating function g(1 + y f1)/(1 - y^2 x f2) with y
/// specialized to a series (y = 1 gives row sums, y = x diagonal sums).
Series bivariate_at(const SprugnoliTriple& t, const Series& y);

/// (g, sqrt(x f2), f2), whose matrix is the Riordan array (g, sqrt(x f2)).
/// Throws SeriesError(no_rational_sqrt) if sqrt(x f2) is not rational.
SprugnoliTriple from_riordan_sqrt_case(const Series& g, const Series& f2);

/// (g, x, x).
SprugnoliTriple scaling_element(const Series& g);

/// For g even and f1 odd, (g, f1, f2) has the same matrix as the double
/// Riordan element <g, f1, x f2 / f1>. Throws MembershipError otherwise.
DoubleTriple as_double(const SprugnoliTriple& t);

enum class Subgroup {
  scaling,      // (g, x, x)
  unit_g,       // (1, f1, f2)
  unit_g_f1,    // (1, x, f2)
  unit_g_f2,    // (1, f1, x)
};

bool belongs_to(const SprugnoliTriple& t, Subgroup s);

}  // namespace sprugnoli
