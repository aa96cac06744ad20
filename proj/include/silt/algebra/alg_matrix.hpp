#pragma once

#include <vector>

#include "silt/algebra/algebra.hpp"

namespace silt {

// Matrix with algebra entries. Entry (s, r) of a map between sums of
// indecomposable projectives sends the r-th source summand e_aA to the s-th
// target summand e_bA by left multiplication, so it lies in e_b A e_a.
template <class F>
class AlgMatrix {
 public:
  AlgMatrix() = default;
  AlgMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  AlgElem<F>& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const AlgElem<F>& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  [[nodiscard]] AlgMatrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    AlgMatrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
  }
  void set_block(std::size_t r0, std::size_t c0, const AlgMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  friend AlgMatrix operator+(AlgMatrix a, const AlgMatrix& b) {
    a.same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!b.data_[i].is_zero()) a.data_[i] += b.data_[i];
    return a;
  }
  friend AlgMatrix operator-(AlgMatrix a, const AlgMatrix& b) {
    a.same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!b.data_[i].is_zero()) a.data_[i] -= b.data_[i];
    return a;
  }
  friend AlgMatrix operator-(AlgMatrix a) {
    for (auto& e : a.data_) e = -e;
    return a;
  }
  friend AlgMatrix operator*(const typename F::Elem& s, AlgMatrix a) {
    for (auto& e : a.data_) e = s * e;
    return a;
  }
  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void same_shape(const AlgMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("algebra matrices of different shapes");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgElem<F>> data_;
};

// Composite "first b, then a" as matrices: (a b)(s, r) = sum_k a(s, k) b(k, r).
template <class F>
AlgMatrix<F> mul(const Algebra<F>& alg, const AlgMatrix<F>& a, const AlgMatrix<F>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("algebra matrix product shape mismatch");
  AlgMatrix<F> out(a.rows(), b.cols());
  for (std::size_t s = 0; s < a.rows(); ++s)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(s, k);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < b.cols(); ++r) {
        const auto& y = b(k, r);
        if (!y.is_zero()) out(s, r) += alg.mul(x, y);
      }
    }
  return out;
}

template <class F>
AlgMatrix<F> identity_alg_matrix(const Algebra<F>& alg, const std::vector<int>& vertices) {
  AlgMatrix<F> m(vertices.size(), vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) m(i, i) = alg.idempotent(vertices[i]);
  return m;
}

// Entries are left in e_b A e_a for the given row/column vertices.
template <class F>
bool entries_well_placed(const Algebra<F>& alg, const AlgMatrix<F>& m, const std::vector<int>& row_vertices,
                         const std::vector<int>& col_vertices) {
  if (m.rows() != row_vertices.size() || m.cols() != col_vertices.size()) return false;
  for (std::size_t s = 0; s < m.rows(); ++s)
    for (std::size_t r = 0; r < m.cols(); ++r)
      for (const auto& [b, c] : m(s, r).terms)
        if (alg.basis(b).source != row_vertices[s] || alg.basis(b).target != col_vertices[r]) return false;
  return true;
}

}  // namespace silt
