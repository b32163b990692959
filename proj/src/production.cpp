#include "sprugnoli/production.hpp"

namespace sprugnoli {

namespace {

bool close(const Rational& a, const Rational& b, const Rational& tol) {
  Rational d = a - b;
  return abs(d) <= tol;
}

SprugnoliTriple inverse_core(const SprugnoliTriple& t, std::size_t order) {
  Series r2 = compute_r2(t.f2());
  Series r1 = compute_r1(t.f1(), r2);
  return SprugnoliTriple(Series::one(order), r1.truncated(order), r2.truncated(order));
}

}  // namespace

Matrix production_matrix(const TriMatrix& m) {
  if (m.dim() < 2) throw MatrixError("production matrix needs dimension >= 2");
  const std::size_t n = m.dim() - 1;
  const TriMatrix inv = inverse(m.leading(n));
  Matrix p(n);
  // P = inv * Mbar, Mbar(i, j) = m(i + 1, j).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc;
      for (std::size_t k = 0; k <= i; ++k) acc += inv(i, k) * m(k + 1, j);
      p(i, j) = acc;
    }
  return p;
}

ProductionStripes extract_stripes(const Matrix& p, std::size_t period, const Rational& tolerance) {
  if (period == 0) throw std::invalid_argument("stripe period must be >= 1");
  const std::size_t n = p.dim();
  ProductionStripes s;
  s.period = period;
  for (std::size_t i = 0; i < n; ++i) s.z.push_back(p(i, 0));
  for (std::size_t j = 0; j < period && j + 1 < n; ++j) {
    std::vector<Rational> stripe;
    for (std::size_t i = j; i < n; ++i) stripe.push_back(p(i, j + 1));
    s.stripes.push_back(std::move(stripe));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const auto& stripe = s.stripes[(k - 1) % period];
    for (std::size_t i = 0; i < n; ++i) {
      const Rational want = i + 1 < k ? Rational(0) : stripe[i - (k - 1)];
      if (!close(p(i, k), want, tolerance)) {
        throw MatrixError("not striped with period " + std::to_string(period) + ": entry (" + std::to_string(i) +
                          ", " + std::to_string(k) + ") is " + p(i, k).get_str() + ", stripe gives " +
                          want.get_str());
      }
    }
  }
  return s;
}

Matrix reconstruct(const ProductionStripes& s, std::size_t dim) {
  Matrix p(dim);
  for (std::size_t i = 0; i < dim && i < s.z.size(); ++i) p(i, 0) = s.z[i];
  for (std::size_t k = 1; k < dim; ++k) {
    const auto& stripe = s.stripes.at((k - 1) % s.period);
    for (std::size_t i = k - 1; i < dim && i - (k - 1) < stripe.size(); ++i) p(i, k) = stripe[i - (k - 1)];
  }
  return p;
}

ClosedFormStripes ab_series_closed_form(const SprugnoliTriple& t) {
  const std::size_t n = t.order();
  if (n < 2) throw SeriesError(SeriesError::Kind::insufficient_precision, "closed-form stripes need order >= 2");
  const SprugnoliTriple core = inverse_core(t, n - 1);
  ClosedFormStripes out;
  out.a = sprugnoli_apply(core, shift_down(t.f1(), 1));
  out.b = shift_down(sprugnoli_apply(SprugnoliTriple(Series::one(n), compute_r1(t.f1(), compute_r2(t.f2())),
                                                     compute_r2(t.f2())),
                                     t.f2()),
                     1);
  Series ratio = sub(Series::one(n), scale(t.g()[0], mul_inv(t.g())));
  out.z = sprugnoli_apply(core, shift_down(ratio, 1));
  return out;
}

Rational recurrence_value(const TriMatrix& m, const ProductionStripes& s, std::size_t row, std::size_t col) {
  if (row == 0 || row >= m.dim() || col > row) throw MatrixError("recurrence needs 1 <= row < dim and col <= row");
  const std::vector<Rational>& coeffs = col == 0 ? s.z : s.stripes.at((col - 1) % s.period);
  const std::size_t first = col == 0 ? 0 : col - 1;
  Rational acc;
  for (std::size_t j = first; j <= row - 1; ++j) {
    const std::size_t i = j - first;
    if (i >= coeffs.size()) {
      throw MatrixError("stripe too short for entry (" + std::to_string(row) + ", " + std::to_string(col) + ")");
    }
    acc += m(row - 1, j) * coeffs[i];
  }
  return acc;
}

RecurrenceReport recurrence_check(const TriMatrix& m, const ProductionStripes& s) {
  RecurrenceReport report;
  const std::size_t rows = std::min(m.dim(), s.z.size() + 1);
  for (std::size_t r = 1; r < rows; ++r)
    for (std::size_t k = 0; k <= r; ++k) {
      Rational expected = recurrence_value(m, s, r, k);
      if (expected != m(r, k)) {
        report.ok = false;
        report.row = r;
        report.col = k;
        report.expected = expected;
        report.actual = m(r, k);
        report.message = "entry (" + std::to_string(r) + ", " + std::to_string(k) + ") is " + m(r, k).get_str() +
                         ", recurrence gives " + expected.get_str();
        return report;
      }
    }
  report.message = "all recurrences hold";
  return report;
}

}  // namespace sprugnoli
