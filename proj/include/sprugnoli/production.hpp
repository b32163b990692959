#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sprugnoli/matrix.hpp"
#include "sprugnoli/sprugnoli.hpp"

namespace sprugnoli {

/// Recurrence coefficients read off a production matrix with period m:
/// column 0 is Z, and column k > 0 holds stripe (k - 1) mod m starting at
/// row k - 1. For Sprugnoli arrays stripe 0 is A (odd columns) and stripe 1
/// is B (even columns).
struct ProductionStripes {
  std::size_t period = 1;
  std::vector<Rational> z;
  std::vector<std::vector<Rational>> stripes;
};

/// P = M^-1 Mbar for M of dimension n + 1, where Mbar is M without its top
/// row. The result has dimension n; lower-triangularity of M makes every
/// reported entry exact.
Matrix production_matrix(const TriMatrix& m);

/// Reads Z and the m stripes from P and checks that every column carries
/// its stripe (|difference| <= tolerance, exact by default) with zeros above
/// row k - 1. Throws MatrixError naming the first inconsistent entry.
ProductionStripes extract_stripes(const Matrix& p, std::size_t period, const Rational& tolerance = Rational(0));

/// The production matrix of dimension dim described by the stripes.
Matrix reconstruct(const ProductionStripes& s, std::size_t dim);

/// Generating functions of Z, A and B from the triple alone:
///   A = (1, r1, r2) . (f1/x),  B = (1/x) (1, r1, r2) . f2,
///   Z = (1, r1, r2) . ((1 - g0/g)/x).
/// Known to order N - 1.
struct ClosedFormStripes {
  Series z;
  Series a;
  Series b;
};

ClosedFormStripes ab_series_closed_form(const SprugnoliTriple& t);

/// Value of the row recurrence for entry (row, col), row >= 1:
///   t(row, 0) = sum_i t(row-1, i) z_i,
///   t(row, k) = sum_i t(row-1, k-1+i) s_i  with s the stripe of column k.
/// Throws MatrixError if a needed coefficient is missing.
Rational recurrence_value(const TriMatrix& m, const ProductionStripes& s, std::size_t row, std::size_t col);

struct RecurrenceReport {
  bool ok = true;
  std::size_t row = 0;
  std::size_t col = 0;
  Rational expected;  // from the recurrence
  Rational actual;    // entry of M
  std::string message;
};

/// Checks every entry of rows 1.. of M against the recurrences, using as
/// many rows as the stripes cover.
RecurrenceReport recurrence_check(const TriMatrix& m, const ProductionStripes& s);

}  // namespace sprugnoli
