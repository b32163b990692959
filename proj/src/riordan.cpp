#include "sprugnoli/riordan.hpp"

namespace sprugnoli {

namespace {

void require_dim(std::size_t dim, std::size_t order) {
  if (dim > order + 1) {
    throw SeriesError(SeriesError::Kind::insufficient_precision,
                      "dimension " + std::to_string(dim) + " needs truncation order " + std::to_string(dim - 1));
  }
}

}  // namespace

RiordanPair::RiordanPair(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
  if (g_.order() != f_.order()) throw MembershipError("Riordan pair components differ in order");
  if (!g_.in_f0()) throw MembershipError("Riordan pair: g must be in F0");
  if (!f_.in_f1()) throw MembershipError("Riordan pair: f must be in F1");
}

StretchedPair::StretchedPair(Series g, Series xf) : g_(std::move(g)), xf_(std::move(xf)) {
  if (g_.order() != xf_.order()) throw MembershipError("stretched pair components differ in order");
  if (!g_.in_f0()) throw MembershipError("stretched pair: g must be in F0");
  if (!xf_.in_fr(2)) throw MembershipError("stretched pair: xf must be in F2");
}

TriMatrix geometric_columns(const Series& first_column, const Series& step, std::size_t dim) {
  require_dim(dim, first_column.order());
  TriMatrix m(dim);
  Series col = first_column;
  for (std::size_t k = 0; k < dim; ++k) {
    if (k) col = mul(col, step);
    m.set_column(k, col);
  }
  return m;
}

TriMatrix build_riordan(const RiordanPair& p, std::size_t dim) { return geometric_columns(p.g(), p.f(), dim); }

Series riordan_apply(const RiordanPair& p, const Series& h) {
  return mul(p.g(), compose(h, p.f()).truncated(p.order()));
}

RiordanPair riordan_mul(const RiordanPair& a, const RiordanPair& b) {
  return RiordanPair(mul(a.g(), compose(b.g(), a.f())), compose(b.f(), a.f()));
}

RiordanPair riordan_inv(const RiordanPair& p) {
  Series fbar = revert(p.f());
  return RiordanPair(mul_inv(compose(p.g(), fbar)), fbar);
}

TriMatrix build_stretched(const StretchedPair& s, std::size_t dim) { return geometric_columns(s.g(), s.xf(), dim); }

Series stretched_apply(const StretchedPair& s, const Series& h) {
  return mul(s.g(), compose(h, s.xf()).truncated(s.order()));
}

}  // namespace sprugnoli
