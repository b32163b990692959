#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sprugnoli/matrix.hpp"
#include "sprugnoli/production.hpp"
#include "sprugnoli/series.hpp"
#include "sprugnoli/sprugnoli.hpp"

namespace sprugnoli {

/// Element (g, f1, ..., f_{m-1}, fm) of the order-m group. fm is nonzero
/// only at exponents congruent to 1 mod m, so x^(m-1) fm is a series in x^m.
///
/// Column k has generating function
///   g * f1 * ... * f_(k mod m) * (x^(m-1) fm)^floor(k/m).
class GeneralTuple {
 public:
  /// Throws MembershipError on a bad period, component count, order
  /// mismatch, valuation or fm support.
  GeneralTuple(std::size_t m, Series g, std::vector<Series> fs, Series fm);

  static GeneralTuple identity(std::size_t m, std::size_t order);
  static GeneralTuple from_sprugnoli(const SprugnoliTriple& t);

  std::size_t period() const noexcept { return m_; }
  const Series& g() const noexcept { return g_; }
  const std::vector<Series>& fs() const noexcept { return fs_; }
  const Series& fm() const noexcept { return fm_; }
  std::size_t order() const noexcept { return g_.order(); }

  bool operator==(const GeneralTuple&) const = default;

 private:
  std::size_t m_;
  Series g_;
  std::vector<Series> fs_;
  Series fm_;
};

TriMatrix build_general(const GeneralTuple& t, std::size_t dim);

/// sum_r g (f1 ... f_r) section(h, m, r)(x^(m-1) fm), r = 0..m-1.
Series general_apply(const GeneralTuple& t, const Series& h);

TriMatrix general_mul(const GeneralTuple& a, const GeneralTuple& b, std::size_t dim);

/// Components read off the columns of a matrix: g = column 0,
/// f_i = column i / column i-1 for i < m, fm = column m / (x^(m-1) column 0).
/// Orders differ: f_i is known to dim - i, fm to dim - m.
struct ReadBack {
  Series g;
  std::vector<Series> fs;
  Series fm;
  bool fm_support_ok = false;
};

struct GeneralInverse {
  TriMatrix matrix;
  std::optional<ReadBack> components;
  /// The read-back components rebuild the inverse matrix exactly.
  bool regenerates = false;
  std::string message;
};

/// Exact triangular inverse, plus an attempt to recover a tuple from it.
/// Read-back problems are reported in the result.
GeneralInverse general_inv(const GeneralTuple& t, std::size_t dim);

/// Reads components from any lower-triangular matrix with nonzero diagonal.
ReadBack read_back(const TriMatrix& m, std::size_t period);

/// Rebuilds a matrix from read-back components (unequal orders allowed).
TriMatrix rebuild(const ReadBack& r, std::size_t dim);

/// Column-wise sum of the stripes, aligned at their first entries, and the
/// indices where the sum vanishes.
struct StripeSumReport {
  std::vector<Rational> sums;
  std::vector<std::size_t> zero_indices;
  /// Zeros recur with the stripe period over the whole window.
  bool periodic = false;
};

StripeSumReport stripe_zero_pattern(const ProductionStripes& s);

}  // namespace sprugnoli
