#pragma once

#include <cstddef>

#include "sprugnoli/matrix.hpp"
#include "sprugnoli/series.hpp"

namespace sprugnoli {

/// Ordinary Riordan array (g, f): g in F0, f in F1, both at one order.
class RiordanPair {
 public:
  /// Throws MembershipError unless g in F0, f in F1 and the orders agree.
  RiordanPair(Series g, Series f);

  const Series& g() const noexcept { return g_; }
  const Series& f() const noexcept { return f_; }
  std::size_t order() const noexcept { return g_.order(); }

  bool operator==(const RiordanPair&) const = default;

 private:
  Series g_;
  Series f_;
};

/// Vertically stretched Riordan array (g, xf) with xf in F2.
class StretchedPair {
 public:
  StretchedPair(Series g, Series xf);

  const Series& g() const noexcept { return g_; }
  const Series& xf() const noexcept { return xf_; }
  std::size_t order() const noexcept { return g_.order(); }

 private:
  Series g_;
  Series xf_;
};

/// t(n, k) = [x^n] g f^k, for n, k < dim. Requires dim <= order + 1.
TriMatrix build_riordan(const RiordanPair& p, std::size_t dim);
/// g * h(f).
Series riordan_apply(const RiordanPair& p, const Series& h);
/// (g, f)(u, v) = (g u(f), v(f)).
RiordanPair riordan_mul(const RiordanPair& a, const RiordanPair& b);
/// (1 / g(fbar), fbar).
RiordanPair riordan_inv(const RiordanPair& p);

/// Columns g (xf)^k.
TriMatrix build_stretched(const StretchedPair& s, std::size_t dim);
/// g * h(xf).
Series stretched_apply(const StretchedPair& s, const Series& h);

/// Shared column builder: column k is first_column * step^k.
TriMatrix geometric_columns(const Series& first_column, const Series& step, std::size_t dim);

}  // namespace sprugnoli
