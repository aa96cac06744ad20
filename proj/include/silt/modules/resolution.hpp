#pragma once

#include <optional>
#include <string>
#include <vector>

#include "silt/modules/module.hpp"

namespace silt {

struct ResolutionTooLong : Error {
  using Error::Error;
};

// P_len -> ... -> P_1 -> P_0 -> M. terms[k] lists the vertices of the
// indecomposable summands of P_k (cohomological degree -k); diffs[k] maps
// P_{k+1} to P_k; augmentation[j] is the image in M of the j-th generator of P_0.
template <class F>
struct Resolution {
  std::vector<std::vector<int>> terms;
  std::vector<AlgMatrix<F>> diffs;
  std::vector<ModuleElement<F>> augmentation;

  [[nodiscard]] int length() const { return terms.empty() ? -1 : static_cast<int>(terms.size()) - 1; }
};

// Radical of M at each vertex: the span of the images of the generators.
template <class F>
Subspaces<F> radical_subspaces(const Module<F>& m) {
  const Algebra<F>& a = m.algebra();
  std::vector<std::vector<Vec<F>>> cols(static_cast<std::size_t>(a.vertex_count()));
  for (int g : a.generators()) {
    const auto& info = a.basis(g);
    const auto& act = m.action(g);
    for (std::size_t c = 0; c < act.cols(); ++c) cols[static_cast<std::size_t>(info.target)].push_back(act.column(c));
  }
  Subspaces<F> out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const auto dv = static_cast<std::size_t>(m.dim(v));
    auto& cv = cols[static_cast<std::size_t>(v)];
    std::vector<Vec<F>> kept;
    for (auto i : independent_subset(m.field(), dv, cv)) kept.push_back(cv[i]);
    out.push_back(Matrix<F>::from_columns(m.field(), dv, kept));
  }
  return out;
}

// Generators of a projective cover: standard basis vectors of each M_v that
// extend a basis of rad M_v, taken in order.
template <class F>
std::vector<ModuleElement<F>> top_generators(const Module<F>& m) {
  auto rad = radical_subspaces(m);
  std::vector<ModuleElement<F>> gens;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) {
    const auto dv = static_cast<std::size_t>(m.dim(v));
    SpanBuilder<F> span(m.field(), dv);
    const auto& r = rad[static_cast<std::size_t>(v)];
    for (std::size_t c = 0; c < r.cols(); ++c) span.add(r.column(c));
    for (std::size_t i = 0; i < dv; ++i) {
      Vec<F> e(dv, m.field().zero());
      e[i] = m.field().one();
      if (span.add(e)) gens.push_back({v, std::move(e)});
    }
  }
  return gens;
}

// Per-vertex matrix of the map from the projective sum on `gens` to M.
template <class F>
std::vector<Matrix<F>> cover_map(const Module<F>& m, const std::vector<ModuleElement<F>>& gens) {
  const Algebra<F>& a = m.algebra();
  std::vector<int> verts;
  for (const auto& g : gens) verts.push_back(g.vertex);
  std::vector<Matrix<F>> out;
  for (int w = 0; w < a.vertex_count(); ++w) {
    auto off = projective_offsets(a, verts, w);
    Matrix<F> x(m.field(), static_cast<std::size_t>(m.dim(w)), off.back());
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (int u : a.between(gens[s].vertex, w)) {
        Vec<F> img = m.action(u) * gens[s].coords;
        for (std::size_t r = 0; r < img.size(); ++r) x(r, off[s] + static_cast<std::size_t>(a.position(u))) = img[r];
      }
    out.push_back(std::move(x));
  }
  return out;
}

// Element of e_i A e_v from coordinates in the basis e_i A e_v.
template <class F>
AlgElem<F> element_from_coords(const Algebra<F>& a, int i, int v, const Vec<F>& coords, std::size_t offset) {
  Sparse<F> terms;
  const auto& bs = a.between(i, v);
  for (std::size_t k = 0; k < bs.size(); ++k)
    if (!is_zero(coords[offset + k])) terms.emplace_back(bs[k], coords[offset + k]);
  return AlgElem<F>(std::move(terms));
}

template <class F>
Resolution<F> minimal_projective_resolution(const Module<F>& m, int max_length) {
  if (max_length < 0) throw std::invalid_argument("max_length must be non-negative");
  const Algebra<F>& a = m.algebra();
  const auto& alg = m.algebra_ptr();
  Resolution<F> res;
  if (m.is_zero()) return res;

  auto gens = top_generators(m);
  res.augmentation = gens;
  Module<F> cur = m;
  for (int k = 0;; ++k) {
    std::vector<int> verts;
    for (const auto& g : gens) verts.push_back(g.vertex);
    res.terms.push_back(verts);
    Module<F> p = projective_sum(alg, verts);
    auto f = cover_map(cur, gens);
    Subspaces<F> ker;
    bool zero = true;
    for (int w = 0; w < a.vertex_count(); ++w) {
      auto kb = kernel_basis(f[static_cast<std::size_t>(w)]);
      if (!kb.empty()) zero = false;
      ker.push_back(Matrix<F>::from_columns(a.field(), static_cast<std::size_t>(p.dim(w)), kb));
    }
    if (zero) break;
    if (k == max_length) throw ResolutionTooLong("syzygy " + std::to_string(k + 1) + " is nonzero at the length cap");
    auto [omega, basis] = subquotient_with_basis(p, zero_space(p), ker);
    auto next = top_generators(omega);
    AlgMatrix<F> d(verts.size(), next.size());
    for (std::size_t j = 0; j < next.size(); ++j) {
      const int v = next[j].vertex;
      Vec<F> in_p = basis[static_cast<std::size_t>(v)] * next[j].coords;
      auto off = projective_offsets(a, verts, v);
      for (std::size_t i = 0; i < verts.size(); ++i) d(i, j) = element_from_coords(a, verts[i], v, in_p, off[i]);
    }
    res.diffs.push_back(std::move(d));
    cur = std::move(omega);
    gens = std::move(next);
  }
  return res;
}

// Projective dimension, or nullopt when it exceeds the cap.
template <class F>
std::optional<int> projective_dimension(const Module<F>& m, int cap) {
  try {
    return minimal_projective_resolution(m, cap).length();
  } catch (const ResolutionTooLong&) {
    return std::nullopt;
  }
}

// Global dimension as the maximum over simples, or nullopt beyond the cap.
template <class F>
std::optional<int> global_dimension(const AlgebraPtr<F>& alg, int cap) {
  int best = 0;
  for (int i = 0; i < alg->vertex_count(); ++i) {
    auto pd = projective_dimension(simple(alg, i), cap);
    if (!pd) return std::nullopt;
    best = std::max(best, *pd);
  }
  return best;
}

}  // namespace silt
