#include "sprugnoli/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sprugnoli {

namespace {

const Rational kZero;

void require_square(const std::vector<std::vector<long>>& rows) {
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw MatrixError("rows must form a square matrix");
}

std::string render(std::size_t dim, auto&& at) {
  std::vector<std::string> cells(dim * dim);
  std::size_t width = 1;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      cells[i * dim + j] = at(i, j).get_str();
      width = std::max(width, cells[i * dim + j].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& c = cells[i * dim + j];
      if (j) os << ' ';
      os << std::string(width - c.size(), ' ') << c;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
  require_square(rows);
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::leading(std::size_t k) const {
  if (k > dim_) throw MatrixError("leading block larger than matrix");
  Matrix m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
  return m;
}

bool Matrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw MatrixError("dimension mismatch in product");
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

TriMatrix::TriMatrix(const Matrix& m) : TriMatrix(m.dim()) {
  if (!m.is_lower_triangular()) throw MatrixError("matrix is not lower-triangular");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j) entries_[index(i, j)] = m(i, j);
}

TriMatrix TriMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  return TriMatrix(Matrix::from_rows(rows));
}

TriMatrix TriMatrix::identity(std::size_t dim) {
  TriMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

const Rational& TriMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw MatrixError("index out of range");
  return j > i ? kZero : entries_[index(i, j)];
}

void TriMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= dim_ || j > i) throw MatrixError("write outside the lower triangle");
  entries_[index(i, j)] = value;
}

Series TriMatrix::column(std::size_t j) const {
  if (dim_ == 0) throw MatrixError("column of an empty matrix");
  Series s(dim_ - 1);
  for (std::size_t i = j; i < dim_; ++i) s.set(i, (*this)(i, j));
  return s;
}

void TriMatrix::set_column(std::size_t j, const Series& s) {
  if (s.order() + 1 < dim_) throw SeriesError(SeriesError::Kind::insufficient_precision, "column series too short");
  for (std::size_t i = 0; i < j; ++i)
    if (sgn(s[i]) != 0) throw MatrixError("column generator is nonzero above the diagonal");
  for (std::size_t i = j; i < dim_; ++i) entries_[index(i, j)] = s[i];
}

std::vector<Rational> TriMatrix::row(std::size_t i) const {
  std::vector<Rational> r(dim_);
  for (std::size_t j = 0; j <= i; ++j) r[j] = entries_[index(i, j)];
  return r;
}

TriMatrix TriMatrix::leading(std::size_t k) const {
  if (k > dim_) throw MatrixError("leading block larger than matrix");
  TriMatrix m(k);
  std::copy_n(entries_.begin(), k * (k + 1) / 2, m.entries_.begin());
  return m;
}

Matrix TriMatrix::dense() const {
  Matrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = entries_[index(i, j)];
  return m;
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
  if (a.dim() != b.dim()) throw MatrixError("dimension mismatch in product");
  TriMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc;
      for (std::size_t k = j; k <= i; ++k) acc += a(i, k) * b(k, j);
      c.set(i, j, acc);
    }
  return c;
}

TriMatrix operator+(const TriMatrix& a, const TriMatrix& b) {
  if (a.dim() != b.dim()) throw MatrixError("dimension mismatch in sum");
  TriMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

TriMatrix inverse(const TriMatrix& m) {
  const std::size_t n = m.dim();
  TriMatrix r(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      if (sgn(m(i, i)) == 0) throw MatrixError("zero diagonal entry at " + std::to_string(i));
      Rational acc = i == j ? Rational(1) : Rational(0);
      for (std::size_t k = j; k < i; ++k) acc -= m(i, k) * r(k, j);
      r.set(i, j, acc / m(i, i));
    }
  }
  return r;
}

std::vector<Rational> apply(const TriMatrix& m, const Series& s) {
  if (s.order() + 1 < m.dim()) throw SeriesError(SeriesError::Kind::insufficient_precision, "vector too short");
  std::vector<Rational> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k <= i; ++k) out[i] += m(i, k) * s[k];
  return out;
}

std::string to_string(const TriMatrix& m) {
  return render(m.dim(), [&](std::size_t i, std::size_t j) -> const Rational& { return m(i, j); });
}

std::string to_string(const Matrix& m) {
  return render(m.dim(), [&](std::size_t i, std::size_t j) -> const Rational& { return m(i, j); });
}

}  // namespace sprugnoli
