#pragma once

#include <cstddef>
#include <vector>

#include "sprugnoli/matrix.hpp"

namespace sprugnoli {

/// Two-branch three-term recurrence
///   P_n = (x + b_even) P_(n-1) - c_even P_(n-2)   for n even,
///   P_n = (x + b_odd)  P_(n-1) - c_odd  P_(n-2)   for n odd,
/// seeded with P_0 and P_1 (coefficient vectors, lowest degree first).
struct PolyRecurrence {
  Rational b_even = 1;
  Rational b_odd = -1;
  Rational c_even = 1;
  Rational c_odd = 1;
  std::vector<Rational> p0{Rational(1)};
  std::vector<Rational> p1{Rational(-1), Rational(1)};
};

/// Polynomials P_0 .. P_(count-1), lowest degree first.
std::vector<std::vector<Rational>> poly_sequence(const PolyRecurrence& r, std::size_t count);

/// Row n holds the coefficients of P_n. Throws MatrixError if some P_n has
/// degree above n.
TriMatrix build_poly_recurrence(const PolyRecurrence& r, std::size_t count);

}  // namespace sprugnoli
