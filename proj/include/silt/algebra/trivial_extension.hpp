#pragma once

#include <optional>
#include <string>
#include <vector>

#include "silt/algebra/automorphism.hpp"

namespace silt {

// T(A) = A + DA. Basis: the basis of A (same indices) followed by the dual
// basis, dual(b) at index dim(A) + b. For b in e_s A e_t the functional
// dual(b) lies in e_t T e_s.
template <class F>
AlgebraPtr<F> trivial_extension(const AlgebraPtr<F>& a) {
  const int d = a->dim();
  const int top = a->max_length();
  const F& f = a->field();
  std::vector<BasisInfo> basis = a->basis();
  for (int b = 0; b < d; ++b) {
    const auto& info = a->basis(b);
    basis.push_back({info.target, info.source, top + 1 - info.length, {}, false, "D(" + info.name + ")"});
  }
  const int td = 2 * d;
  std::vector<Sparse<F>> table(static_cast<std::size_t>(td * td));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) table[static_cast<std::size_t>(i * td + j)] = a->product(i, j);
  // (a . g)(u) = g(u a) and (g . c)(u) = g(c u)
  for (int x = 0; x < d; ++x)
    for (int u = 0; u < d; ++u) {
      for (const auto& [b, c] : a->product(u, x)) table[static_cast<std::size_t>(x * td + d + b)].emplace_back(d + u, c);
      for (const auto& [b, c] : a->product(x, u)) table[static_cast<std::size_t>((d + b) * td + x)].emplace_back(d + u, c);
    }
  for (auto& cell : table) cell = AlgElem<F>(std::move(cell)).terms;
  return std::make_shared<const Algebra<F>>(f, a->quiver(), std::move(basis), std::move(table), "T(" + a->label() + ")");
}

// Extends sigma on A to T(A): sigma on A and f -> f o sigma^{-1} on DA.
template <class F>
AlgebraAutomorphism<F> extend_to_trivial_extension(const AlgebraAutomorphism<F>& sigma, const AlgebraPtr<F>& t) {
  const auto d = static_cast<std::size_t>(sigma.algebra()->dim());
  if (static_cast<std::size_t>(t->dim()) != 2 * d) throw DimensionMismatch("not the trivial extension of this algebra");
  Matrix<F> m(t->field(), 2 * d, 2 * d);
  m.set_block(0, 0, sigma.matrix());
  m.set_block(d, d, inverse(sigma.matrix()).transpose());
  return AlgebraAutomorphism<F>(t, sigma.vertex_permutation(), std::move(m), sigma.name());
}

// Symmetrizing form on T(A): sum of the coordinates of the duals of the
// vertex idempotents. Returns the Gram matrix of (u, v) -> phi(u v).
template <class F>
Matrix<F> trivial_extension_gram(const AlgebraPtr<F>& t, int base_dim) {
  const auto n = static_cast<std::size_t>(t->dim());
  Matrix<F> g(t->field(), n, n);
  for (int u = 0; u < t->dim(); ++u)
    for (int v = 0; v < t->dim(); ++v)
      for (const auto& [k, c] : t->product(u, v))
        if (k >= base_dim && k - base_dim < t->vertex_count()) g(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) += c;
  return g;
}

// Algebra map from a presentation algebra into another algebra, given the
// images of the arrows. Returns the matrix (columns = images of the basis of
// the source) when it is multiplicative; nullopt otherwise.
template <class F>
std::optional<Matrix<F>> algebra_map_from_arrows(const AlgebraPtr<F>& src, const AlgebraPtr<F>& dst,
                                                 const std::vector<AlgElem<F>>& arrow_images) {
  const Quiver& q = src->quiver();
  if (static_cast<int>(arrow_images.size()) != q.arrow_count()) throw IndexError("arrow image list has the wrong length");
  Matrix<F> m(dst->field(), static_cast<std::size_t>(dst->dim()), static_cast<std::size_t>(src->dim()));
  std::vector<AlgElem<F>> img(static_cast<std::size_t>(src->dim()));
  for (int b = 0; b < src->dim(); ++b) {
    const auto& info = src->basis(b);
    AlgElem<F> cur = dst->idempotent(info.source);
    for (int a : info.word) cur = dst->mul(cur, arrow_images[static_cast<std::size_t>(a)]);
    img[static_cast<std::size_t>(b)] = cur;
    for (const auto& [k, c] : cur.terms) m(static_cast<std::size_t>(k), static_cast<std::size_t>(b)) = c;
  }
  for (int b = 0; b < src->dim(); ++b)
    for (int c = 0; c < src->dim(); ++c) {
      AlgElem<F> lhs;
      for (const auto& [k, x] : src->product(b, c)) lhs += x * img[static_cast<std::size_t>(k)];
      if (lhs != dst->mul(img[static_cast<std::size_t>(b)], img[static_cast<std::size_t>(c)])) return std::nullopt;
    }
  return m;
}

}  // namespace silt
