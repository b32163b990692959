#include "sprugnoli/poly_recurrence.hpp"

#include <algorithm>

#include "sprugnoli/errors.hpp"

namespace sprugnoli {

std::vector<std::vector<Rational>> poly_sequence(const PolyRecurrence& r, std::size_t count) {
  std::vector<std::vector<Rational>> out;
  if (count > 0) out.push_back(r.p0);
  if (count > 1) out.push_back(r.p1);
  for (std::size_t n = 2; n < count; ++n) {
    const auto& a = out[n - 1];
    const auto& b = out[n - 2];
    const bool even = n % 2 == 0;
    const Rational& shift = even ? r.b_even : r.b_odd;
    const Rational& back = even ? r.c_even : r.c_odd;
    std::vector<Rational> p(std::max(a.size() + 1, b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      p[i + 1] += a[i];
      p[i] += shift * a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) p[i] -= back * b[i];
    out.push_back(std::move(p));
  }
  return out;
}

TriMatrix build_poly_recurrence(const PolyRecurrence& r, std::size_t count) {
  const auto polys = poly_sequence(r, count);
  TriMatrix m(count);
  for (std::size_t n = 0; n < count; ++n)
    for (std::size_t i = 0; i < polys[n].size(); ++i) {
      if (sgn(polys[n][i]) == 0) continue;
      if (i > n) throw MatrixError("P_" + std::to_string(n) + " has degree above " + std::to_string(n));
      if (i < count) m.set(n, i, polys[n][i]);
    }
  return m;
}

}  // namespace sprugnoli
