#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "silt/linalg/field.hpp"

namespace silt {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
class Matrix {
 public:
  using K = typename F::Elem;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vec<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return silt::is_zero(x); });
  }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  [[nodiscard]] Vec<F> column(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  [[nodiscard]] Vec<F> row(std::size_t r) const { return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  [[nodiscard]] Vec<F> flatten() const { return data_; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
  [[nodiscard]] Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix b(field_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) b(i, j) = (*this)(rs[i], cs[j]);
    return b;
  }

  // Raises FieldMismatch if an entry lives in a different field.
  void validate() const {
    for (const K& x : data_) field_.check(x);
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!silt::is_zero(o.data_[i])) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!silt::is_zero(o.data_[i])) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (K& x : a.data_)
      if (!silt::is_zero(x)) x = -x;
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (K& x : a.data_)
      if (!silt::is_zero(x)) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (silt::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!silt::is_zero(y)) c(i, j) += x * y;
        }
      }
    return c;
  }
  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec<F> out(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!silt::is_zero(a(i, k)) && !silt::is_zero(v[k])) out[i] += a(i, k) * v[k];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }
  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
      os << "[";
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << field_.format((*this)(r, c));
      os << "]\n";
    }
    return os.str();
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("shape " + shape() + " vs " + o.shape());
  }

  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& x) { return is_zero(x); });
}

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form. Pivots are taken in the first column that has a
// nonzero entry, from the first eligible row.
template <class F>
Echelon<F> rref(Matrix<F> m, std::size_t pivot_col_limit = static_cast<std::size_t>(-1)) {
  m.validate();
  using K = typename F::Elem;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t ncols = std::min(m.cols(), pivot_col_limit);
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    K inv = m(r, c).inverse();
    if (!(inv == m.field().one()))
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) nz.push_back(j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

// Basis of the right kernel, one vector per free column, read off the
// reduced echelon form.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  auto e = rref(m);
  const F& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!is_zero(e.reduced(i, free))) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  Matrix<F> aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, m.cols()) = b[i];
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("invertibility of a non-square matrix");
  return rank(m) == m.rows();
}

template <class F>
typename F::Elem determinant(Matrix<F> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  m.validate();
  using K = typename F::Elem;
  K det = m.field().one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det = det * m(c, c);
    K inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = m.field().one();
  auto e = rref(std::move(aug), n);
  if (e.pivots.size() != n) throw std::domain_error("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

template <class F>
Matrix<F> hstack(const F& field, std::size_t rows, const std::vector<const Matrix<F>*>& parts) {
  std::size_t cols = 0;
  for (auto* p : parts) cols += p->cols();
  Matrix<F> out(field, rows, cols);
  std::size_t c = 0;
  for (auto* p : parts) {
    out.set_block(0, c, *p);
    c += p->cols();
  }
  return out;
}

// Solves M x = b for many right-hand sides against a fixed M by caching a
// row transform T with T M in reduced echelon form.
template <class F>
class LinearSolver {
 public:
  LinearSolver() = default;
  explicit LinearSolver(const Matrix<F>& m) : field_(m.field()), rows_(m.rows()), cols_(m.cols()) {
    Matrix<F> aug(m.field(), m.rows(), m.cols() + m.rows());
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols() + i) = m.field().one();
    auto e = rref(std::move(aug), m.cols());
    pivots_ = std::move(e.pivots);
    transform_ = e.reduced.block(0, m.cols(), m.rows(), m.rows());
  }

  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

  [[nodiscard]] std::optional<Vec<F>> solve(const Vec<F>& b) const {
    if (b.size() != rows_) throw DimensionMismatch("solver: right-hand side length mismatch");
    Vec<F> y = transform_ * b;
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
      if (!is_zero(y[i])) return std::nullopt;
    Vec<F> x(cols_, field_.zero());
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
    return x;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> pivots_;
  Matrix<F> transform_;
};

// Incrementally maintained span of vectors in F^n, kept in echelon form.
template <class F>
class SpanBuilder {
 public:
  SpanBuilder(F field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }

  [[nodiscard]] Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& x = v[pivots_[i]];
      if (is_zero(x)) continue;
      auto f = x;
      for (std::size_t j = pivots_[i]; j < dim_; ++j)
        if (!is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
    }
    return v;
  }
  [[nodiscard]] bool contains(const Vec<F>& v) const { return is_zero_vec<F>(reduce(v)); }

  // Returns true when v was independent of the current span.
  bool add(const Vec<F>& v) {
    if (v.size() != dim_) throw DimensionMismatch("span: vector length mismatch");
    Vec<F> r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && is_zero(r[p])) ++p;
    if (p == dim_) return false;
    auto inv = r[p].inverse();
    for (std::size_t j = p; j < dim_; ++j)
      if (!is_zero(r[j])) r[j] = r[j] * inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

// Indices of a maximal independent subfamily, chosen greedily in order.
template <class F>
std::vector<std::size_t> independent_subset(const F& field, std::size_t dim, const std::vector<Vec<F>>& vs) {
  SpanBuilder<F> span(field, dim);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (span.add(vs[i])) keep.push_back(i);
  return keep;
}

}  // namespace silt
