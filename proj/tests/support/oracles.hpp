#pragma once

// Reference implementations used only by the tests. They work on plain
// coefficient vectors with textbook formulas and share no code with the
// library beyond the Rational type.

#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sprugnoli/matrix.hpp"
#include "sprugnoli/series.hpp"
#include "sprugnoli/sprugnoli.hpp"

namespace oracle {

using sprugnoli::Rational;
using Poly = std::vector<Rational>;

inline Poly of(const sprugnoli::Series& s) { return Poly(s.coeffs().begin(), s.coeffs().end()); }

inline Poly cut(Poly p, std::size_t n) {
  p.resize(n + 1);
  return p;
}

inline Poly mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n + 1);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly inv(const Poly& a, std::size_t n) {
  Poly b(n + 1);
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc += a[i] * b[k - i];
    b[k] = -acc / a[0];
  }
  return b;
}

inline Poly power(const Poly& a, std::size_t k, std::size_t n) {
  Poly r(n + 1);
  r[0] = 1;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a, n);
  return r;
}

// sum_k a_k b^k, one power at a time.
inline Poly compose(const Poly& a, const Poly& b, std::size_t n) {
  Poly r(n + 1), p(n + 1);
  p[0] = 1;
  for (std::size_t k = 0; k < a.size() && k <= n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) r[i] += a[k] * p[i];
    p = mul(p, b, n);
  }
  return r;
}

// Lagrange inversion: [x^k] fbar = (1/k) [x^(k-1)] (x/f)^k.
inline Poly revert(const Poly& f, std::size_t n) {
  Poly shifted(f.begin() + 1, f.end());
  Poly q = inv(cut(shifted, n), n);
  Poly r(n + 1);
  for (std::size_t k = 1; k <= n; ++k) r[k] = power(q, k, n)[k - 1] / Rational(static_cast<long>(k));
  return r;
}

inline Poly shift_up(const Poly& a, std::size_t k) {
  Poly r(k);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

inline Poly section(const Poly& a, std::size_t m, std::size_t r) {
  Poly out;
  for (std::size_t i = r; i < a.size(); i += m) out.push_back(a[i]);
  return out;
}

inline sprugnoli::TriMatrix columns(const std::vector<Poly>& cols, std::size_t dim) {
  sprugnoli::TriMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t n = k; n < dim; ++n) m.set(n, k, n < cols[k].size() ? cols[k][n] : Rational(0));
  return m;
}

// Column k = g f1^(k mod 2) (x f2)^(k div 2), one multiplication per step.
inline sprugnoli::TriMatrix sprugnoli_matrix(const Poly& g, const Poly& f1, const Poly& f2, std::size_t dim) {
  const std::size_t n = dim - 1;
  const Poly xf2 = cut(shift_up(f2, 1), n);
  std::vector<Poly> cols;
  Poly even = cut(g, n);
  for (std::size_t k = 0; k < dim; ++k) {
    if (k % 2 == 0) {
      cols.push_back(even);
    } else {
      cols.push_back(mul(even, f1, n));
      even = mul(even, xf2, n);
    }
  }
  return columns(cols, dim);
}

// Gauss-Jordan elimination on the dense matrix.
inline sprugnoli::Matrix gauss_jordan_inverse(const sprugnoli::Matrix& m) {
  const std::size_t n = m.dim();
  sprugnoli::Matrix a = m, b = sprugnoli::Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw std::domain_error("singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(b(p, j), b(c, j));
    }
    const Rational d = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= d;
      b(c, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        b(i, j) -= f * b(c, j);
      }
    }
  }
  return b;
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (long i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

// Moments of a Jacobi continued fraction as weighted Motzkin paths: up
// steps weigh 1, level steps at height h weigh b[h], down steps from
// height h + 1 weigh lambda[h]; both lists repeat.
inline Poly motzkin_moments(const Poly& b, const Poly& lambda, std::size_t count) {
  Poly out;
  std::vector<Rational> paths(count + 2);
  paths[0] = 1;
  for (std::size_t len = 0; len < count; ++len) {
    out.push_back(paths[0]);
    std::vector<Rational> next(count + 2);
    for (std::size_t h = 0; h <= count; ++h) {
      if (sgn(paths[h]) == 0) continue;
      next[h + 1] += paths[h];
      next[h] += paths[h] * b[h % b.size()];
      if (h > 0) next[h - 1] += paths[h] * lambda[(h - 1) % lambda.size()];
    }
    paths = std::move(next);
  }
  return out;
}

// Seeded source of small random series with coefficients in -3..3.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long coeff() { return std::uniform_int_distribution<long>(-3, 3)(rng_); }
  long nonzero() {
    long c = 0;
    while (c == 0) c = coeff();
    return c;
  }

  sprugnoli::Series any(std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (auto& v : c) v = coeff();
    return sprugnoli::Series(c);
  }
  /// Coefficients at indices `first`, `first + step`, ...; the first is nonzero.
  sprugnoli::Series sparse(std::size_t order, std::size_t first, std::size_t step) {
    std::vector<Rational> c(order + 1);
    for (std::size_t i = first; i <= order; i += step) c[i] = i == first ? nonzero() : coeff();
    return sprugnoli::Series(c);
  }
  sprugnoli::Series f0(std::size_t order) { return sparse(order, 0, 1); }
  sprugnoli::Series f1(std::size_t order) { return sparse(order, 1, 1); }
  sprugnoli::Series even_f0(std::size_t order) { return sparse(order, 0, 2); }
  sprugnoli::Series odd_f1(std::size_t order) { return sparse(order, 1, 2); }

  sprugnoli::SprugnoliTriple triple(std::size_t order) { return {f0(order), f1(order), odd_f1(order)}; }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
