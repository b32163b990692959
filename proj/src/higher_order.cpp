#include "sprugnoli/higher_order.hpp"

#include <algorithm>

namespace sprugnoli {

namespace {

bool supported_mod(const Series& s, std::size_t m) {
  for (std::size_t i = 0; i <= s.order(); ++i)
    if (sgn(s[i]) != 0 && i % m != 1) return false;
  return true;
}

// Column k from components that may carry different orders.
Series column_series(const Series& g, const std::vector<Series>& fs, const Series& step, std::size_t m,
                     std::size_t k) {
  Series col = g;
  for (std::size_t i = 0; i < k % m; ++i) col = mul_exact(col, fs[i]);
  for (std::size_t q = 0; q < k / m; ++q) col = mul_exact(col, step);
  return col;
}

}  // namespace

GeneralTuple::GeneralTuple(std::size_t m, Series g, std::vector<Series> fs, Series fm)
    : m_(m), g_(std::move(g)), fs_(std::move(fs)), fm_(std::move(fm)) {
  if (m_ < 2) throw MembershipError("general tuple: period must be >= 2");
  if (fs_.size() != m_ - 1) throw MembershipError("general tuple: expected " + std::to_string(m_ - 1) + " middle components");
  if (fm_.order() != g_.order()) throw MembershipError("general tuple components differ in order");
  for (const Series& f : fs_)
    if (f.order() != g_.order()) throw MembershipError("general tuple components differ in order");
  if (!g_.in_f0()) throw MembershipError("general tuple: g must be in F0");
  for (std::size_t i = 0; i < fs_.size(); ++i)
    if (!fs_[i].in_f1()) throw MembershipError("general tuple: f" + std::to_string(i + 1) + " must be in F1");
  if (!fm_.in_f1()) throw MembershipError("general tuple: last component must be in F1");
  if (!supported_mod(fm_, m_))
    throw MembershipError("general tuple: last component must vanish off exponents = 1 mod " + std::to_string(m_));
}

GeneralTuple GeneralTuple::identity(std::size_t m, std::size_t order) {
  return GeneralTuple(m, Series::one(order), std::vector<Series>(m - 1, Series::x(order)), Series::x(order));
}

GeneralTuple GeneralTuple::from_sprugnoli(const SprugnoliTriple& t) { return GeneralTuple(2, t.g(), {t.f1()}, t.f2()); }

TriMatrix build_general(const GeneralTuple& t, std::size_t dim) {
  if (dim > t.order() + 1) throw SeriesError(SeriesError::Kind::insufficient_precision, "dimension exceeds order");
  const std::size_t n = t.order();
  const std::size_t m = t.period();
  const Series step = shift_up(t.fm(), m - 1).truncated(n);
  TriMatrix out(dim);
  Series base = t.g();
  for (std::size_t k = 0; k < dim; ++k) {
    if (k && k % m == 0) base = mul(base, step);
    Series col = base;
    for (std::size_t i = 0; i < k % m; ++i) col = mul(col, t.fs()[i]);
    out.set_column(k, col);
  }
  return out;
}

Series general_apply(const GeneralTuple& t, const Series& h) {
  const std::size_t n = t.order();
  const std::size_t m = t.period();
  const Series hn = h.truncated(n);
  const Series inner = shift_up(t.fm(), m - 1);
  Series prefix = t.g();
  Series total(n);
  for (std::size_t r = 0; r < m && r <= n; ++r) {
    if (r) prefix = mul(prefix, t.fs()[r - 1]);
    total = add(total, mul_exact(prefix, compose(section(hn, m, r), inner)).truncated(n));
  }
  return total;
}

TriMatrix general_mul(const GeneralTuple& a, const GeneralTuple& b, std::size_t dim) {
  return build_general(a, dim) * build_general(b, dim);
}

ReadBack read_back(const TriMatrix& m, std::size_t period) {
  if (period < 2) throw MembershipError("read-back period must be >= 2");
  if (m.dim() <= period) throw MatrixError("read-back needs dimension > period");
  ReadBack r;
  r.g = m.column(0);
  for (std::size_t i = 1; i < period; ++i) r.fs.push_back(divide(m.column(i), m.column(i - 1)));
  r.fm = shift_down(divide(m.column(period), r.g), period - 1);
  r.fm_support_ok = r.fm.in_f1() && supported_mod(r.fm, period);
  return r;
}

TriMatrix rebuild(const ReadBack& r, std::size_t dim) {
  const std::size_t m = r.fs.size() + 1;
  const Series step = shift_up(r.fm, m - 1);
  TriMatrix out(dim);
  for (std::size_t k = 0; k < dim; ++k) out.set_column(k, column_series(r.g, r.fs, step, m, k));
  return out;
}

GeneralInverse general_inv(const GeneralTuple& t, std::size_t dim) {
  GeneralInverse out;
  out.matrix = inverse(build_general(t, dim));
  try {
    ReadBack r = read_back(out.matrix, t.period());
    if (!r.fm_support_ok) {
      out.message = "read-back last component violates the support constraint";
    } else {
      out.regenerates = rebuild(r, dim) == out.matrix;
      out.message = out.regenerates ? "read-back regenerates the inverse" : "read-back does not regenerate the inverse";
    }
    out.components = std::move(r);
  } catch (const std::exception& e) {
    out.message = std::string("read-back failed: ") + e.what();
  }
  return out;
}

StripeSumReport stripe_zero_pattern(const ProductionStripes& s) {
  StripeSumReport report;
  if (s.stripes.empty()) return report;
  std::size_t len = s.stripes.front().size();
  for (const auto& st : s.stripes) len = std::min(len, st.size());
  for (std::size_t i = 0; i < len; ++i) {
    Rational acc;
    for (const auto& st : s.stripes) acc += st[i];
    if (sgn(acc) == 0) report.zero_indices.push_back(i);
    report.sums.push_back(acc);
  }
  const std::size_t m = s.period;
  report.periodic = !report.zero_indices.empty();
  for (std::size_t i = m; i < len && report.periodic; ++i)
    if ((sgn(report.sums[i]) == 0) != (sgn(report.sums[i - m]) == 0)) report.periodic = false;
  return report;
}

}  // namespace sprugnoli
