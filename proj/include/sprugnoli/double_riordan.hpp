#pragma once

#include <cstddef>

#include "sprugnoli/matrix.hpp"
#include "sprugnoli/series.hpp"

namespace sprugnoli {

/// Double Riordan element <<g, F1, F2>>: g even with g(0) != 0, F1 and F2
/// odd with nonzero linear coefficient. Columns are
/// g, g F1, g F1 F2, g F1^2 F2, ...
class DoubleTriple {
 public:
  DoubleTriple(Series g, Series f1, Series f2);

  const Series& g() const noexcept { return g_; }
  const Series& f1() const noexcept { return f1_; }
  const Series& f2() const noexcept { return f2_; }
  std::size_t order() const noexcept { return g_.order(); }

  bool operator==(const DoubleTriple&) const = default;

 private:
  Series g_;
  Series f1_;
  Series f2_;
};

/// a(n, k) = [x^n] g F1^ceil(k/2) F2^floor(k/2).
TriMatrix build_double(const DoubleTriple& d, std::size_t dim);

/// <<g, f1, f2>> <<G, F1, F2>> = <<g G(h), (f1/h) F1(h), (f2/h) F2(h)>>,
/// h = sqrt(f1 f2). Computed without square roots: G even gives
/// G(h) = G^e(f1 f2), and F odd gives F(h)/h = F^o(f1 f2).
DoubleTriple double_mul(const DoubleTriple& a, const DoubleTriple& b);

/// <<1/g(hbar), x hbar/f1(hbar), x hbar/f2(hbar)>>. Only hbar^2 is needed,
/// and hbar^2 = rbar(x^2) with rbar the reversion of (f1 f2)^e.
DoubleTriple double_inv(const DoubleTriple& d);

}  // namespace sprugnoli
