#pragma once

#include <optional>
#include <random>
#include <vector>

#include "silt/linalg/polynomial.hpp"

namespace silt {

// A finite-dimensional algebra of N x N matrices, given by a spanning family
// closed under products, with `unit` as its identity (an idempotent matrix).
template <class F>
struct MatrixAlgebra {
  F field;
  std::vector<Matrix<F>> basis;
  Matrix<F> unit;
};

template <class F>
struct IdempotentSplit {
  std::vector<Matrix<F>> idempotents;  // orthogonal, primitive, summing to the unit
  bool exact = true;
};

namespace detail {

template <class F>
typename F::Elem trace_product(const Matrix<F>& x, const Matrix<F>& y) {
  auto acc = x.field().zero();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (!is_zero(x(i, j)) && !is_zero(y(j, i))) acc += x(i, j) * y(j, i);
  return acc;
}

template <class F>
Matrix<F> combine(const F& f, const std::vector<Matrix<F>>& basis, const Vec<F>& c, std::size_t n) {
  Matrix<F> m(f, n, n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!is_zero(c[j])) m += c[j] * basis[j];
  return m;
}

// Minimal polynomial of a relative to the unit u (constant term means u).
template <class F>
Poly<F> relative_min_poly(const Matrix<F>& a, const Matrix<F>& u) {
  const F& f = a.field();
  const std::size_t n2 = a.rows() * a.cols();
  std::vector<Vec<F>> powers;
  Matrix<F> cur = u;
  for (std::size_t k = 0;; ++k) {
    Vec<F> flat = cur.flatten();
    if (k > 0) {
      Matrix<F> span = Matrix<F>::from_columns(f, n2, powers);
      if (auto c = solve(span, flat)) {
        std::vector<typename F::Elem> coeffs(k + 1, f.zero());
        for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*c)[i];
        coeffs[k] = f.one();
        return Poly<F>(f, std::move(coeffs));
      }
    } else if (is_zero_vec<F>(flat)) {
      return Poly<F>::constant(f, f.one());
    }
    powers.push_back(std::move(flat));
    cur = cur * a;
  }
}

template <class F>
Matrix<F> eval_relative(const Poly<F>& p, const Matrix<F>& a, const Matrix<F>& u) {
  Matrix<F> acc(a.field(), a.rows(), a.cols());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * a + p.coeffs()[i] * u;
  return acc;
}

// For a with relative min poly x^r g, g(0) != 0, both factors nontrivial:
// the idempotent projecting away from the generalized kernel.
template <class F>
std::optional<Matrix<F>> fitting_idempotent(const Matrix<F>& a, const Matrix<F>& u) {
  const F& f = a.field();
  Poly<F> m = relative_min_poly(a, u);
  std::size_t r = 0;
  while (r < m.coeffs().size() && is_zero(m.coeffs()[r])) ++r;
  if (r == 0 || static_cast<int>(r) == m.degree()) return std::nullopt;
  Poly<F> xr = Poly<F>::monomial(f, r);
  Poly<F> g = divmod(m, xr).first;
  auto [d, s, t] = poly_ext_gcd(xr, g);
  if (d.degree() != 0) return std::nullopt;
  return eval_relative(s * xr, a, u);
}

}  // namespace detail

// Splits the unit into primitive orthogonal idempotents. The radical is the
// kernel of the trace form, which is exact in characteristic 0 and for p > N.
// Assumes the semisimple quotient is split over the base field.
template <class F>
IdempotentSplit<F> primitive_idempotents(const MatrixAlgebra<F>& alg, std::mt19937_64& rng) {
  const F& f = alg.field;
  const std::size_t n = alg.unit.rows();
  IdempotentSplit<F> out;
  const std::uint64_t p = f.characteristic();
  if (p != 0 && p <= n) out.exact = false;

  std::vector<MatrixAlgebra<F>> work{alg};
  while (!work.empty()) {
    MatrixAlgebra<F> cur = std::move(work.back());
    work.pop_back();
    if (cur.unit.is_zero()) continue;

    // Independent spanning set of cur.
    std::vector<Vec<F>> flats;
    for (const auto& b : cur.basis) flats.push_back(b.flatten());
    std::vector<Matrix<F>> basis;
    for (auto i : independent_subset(f, n * n, flats)) basis.push_back(cur.basis[i]);
    const std::size_t d = basis.size();

    Matrix<F> gram(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) gram(i, j) = gram(j, i) = detail::trace_product(basis[i], basis[j]);
    auto rad = kernel_basis(gram);
    if (d - rad.size() <= 1) {
      out.idempotents.push_back(cur.unit);
      continue;
    }
    std::vector<Matrix<F>> rad_m;
    for (const auto& c : rad) rad_m.push_back(detail::combine(f, basis, c, n));

    std::optional<Matrix<F>> e;

    // Cheap attempt: basis members and their shifts by rational eigenvalues.
    for (std::size_t j = 0; j < d && !e; ++j) {
      Poly<F> m = detail::relative_min_poly(basis[j], cur.unit);
      for (const auto& lambda : roots(m, rng)) {
        e = detail::fitting_idempotent(basis[j] - lambda * cur.unit, cur.unit);
        if (e) break;
      }
    }

    // Centre modulo the radical: a non-scalar central element has at least two
    // distinct eigenvalues, all in the base field.
    if (!e) {
      SpanBuilder<F> radspan(f, n * n);
      for (const auto& r : rad_m) radspan.add(r.flatten());
      std::vector<Matrix<F>> top;
      for (const auto& b : basis)
        if (radspan.add(b.flatten())) top.push_back(b);
      std::vector<Vec<F>> cols;
      for (const auto& b : top) cols.push_back(b.flatten());
      for (const auto& r : rad_m) cols.push_back(r.flatten());
      LinearSolver<F> coords(Matrix<F>::from_columns(f, n * n, cols));
      const std::size_t t = top.size();
      // z = sum c_i top_i is central modulo rad iff the top coordinates of
      // [top_i, top_k] combine to zero for every k.
      std::vector<Vec<F>> rows(t * t, Vec<F>(t, f.zero()));
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t k = 0; k < t; ++k) {
          auto c = coords.solve((top[i] * top[k] - top[k] * top[i]).flatten());
          if (!c) throw std::logic_error("spanning family is not closed under products");
          for (std::size_t q = 0; q < t; ++q) rows[k * t + q][i] = (*c)[q];
        }
      auto sols = kernel_basis(Matrix<F>::from_rows(f, t, rows));
      SpanBuilder<F> scalars(f, n * n);
      scalars.add(cur.unit.flatten());
      for (const auto& r : rad_m) scalars.add(r.flatten());
      for (const auto& c : sols) {
        Matrix<F> z = detail::combine(f, top, c, n);
        if (scalars.contains(z.flatten())) continue;
        for (const auto& lambda : roots(detail::relative_min_poly(z, cur.unit), rng)) {
          e = detail::fitting_idempotent(z - lambda * cur.unit, cur.unit);
          if (e) break;
        }
        if (e) break;
      }
    }

    // Simple quotient of matrix type: an element annihilating a vector killed
    // by the radical is a zero divisor modulo the radical.
    if (!e) {
      std::vector<Vec<F>> rows;
      for (const auto& r : rad_m)
        for (std::size_t i = 0; i < n; ++i) rows.push_back(r.row(i));
      Matrix<F> img_unit = cur.unit;
      for (std::size_t i = 0; i < n; ++i) {
        Vec<F> row(n, f.zero());
        for (std::size_t j = 0; j < n; ++j) row[j] = (i == j ? f.one() : f.zero()) - img_unit(i, j);
        rows.push_back(std::move(row));
      }
      auto fixed = kernel_basis(Matrix<F>::from_rows(f, n, rows));
      for (const auto& w : fixed) {
        // y = sum c_j b_j with y w = 0, y outside rad.
        std::vector<Vec<F>> cols;
        for (const auto& b : basis) cols.push_back(b * w);
        auto ann = kernel_basis(Matrix<F>::from_columns(f, n, cols));
        SpanBuilder<F> radspan(f, n * n);
        for (const auto& r : rad_m) radspan.add(r.flatten());
        for (const auto& c : ann) {
          Matrix<F> y = detail::combine(f, basis, c, n);
          if (radspan.contains(y.flatten())) continue;
          e = detail::fitting_idempotent(y, cur.unit);
          for (std::size_t j = 0; j < d && !e; ++j)
            if (!is_zero(detail::trace_product(y, basis[j]))) e = detail::fitting_idempotent(y * basis[j], cur.unit);
          if (e) break;
        }
        if (e) break;
      }
    }

    // Random elements as a last resort.
    for (int t = 0; t < 256 && !e; ++t) {
      Vec<F> c(d);
      for (auto& x : c) x = f.random(rng, 8);
      Matrix<F> a = detail::combine(f, basis, c, n);
      for (const auto& lambda : roots(detail::relative_min_poly(a, cur.unit), rng)) {
        e = detail::fitting_idempotent(a - lambda * cur.unit, cur.unit);
        if (e) break;
      }
    }

    if (!e) {
      out.exact = false;
      out.idempotents.push_back(cur.unit);
      continue;
    }
    Matrix<F> e2 = cur.unit - *e;
    for (const Matrix<F>* piece : {&*e, &e2}) {
      MatrixAlgebra<F> sub{f, {}, *piece};
      for (const auto& b : basis) sub.basis.push_back(*piece * b * *piece);
      work.push_back(std::move(sub));
    }
  }
  return out;
}

}  // namespace silt
