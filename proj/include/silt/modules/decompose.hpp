#pragma once

#include <random>
#include <vector>

#include "silt/modules/idempotents.hpp"
#include "silt/modules/iso.hpp"
#include "silt/modules/module.hpp"

namespace silt {

template <class F>
struct IsoResult {
  bool isomorphic = false;
  bool exact = true;
  double failure_bound = 0.0;
  std::string method;
  std::optional<ModuleMap<F>> witness;
};

template <class F>
IsoResult<F> is_isomorphic(const Module<F>& m, const Module<F>& n, std::uint64_t seed = 0, std::uint64_t budget = kDefaultBudget) {
  require_same_algebra(m.algebra_ptr(), n.algebra_ptr());
  IsoResult<F> r;
  if (m.dims() != n.dims()) {
    r.method = "dimension vector";
    return r;
  }
  if (m.is_zero()) {
    r.isomorphic = true;
    r.method = "zero";
    r.witness = zero_map(m, n);
    return r;
  }
  auto hom = hom_space(m, n);
  std::vector<std::vector<Matrix<F>>> family;
  for (auto& h : hom) family.push_back(h.comps);
  std::mt19937_64 rng(seed);
  auto s = find_invertible(m.field(), family, static_cast<std::size_t>(m.algebra().vertex_count()), rng, budget);
  r.exact = s.exact;
  r.failure_bound = s.failure_bound;
  r.method = s.method;
  if (s.found()) {
    r.isomorphic = true;
    ModuleMap<F> w = zero_map(m, n);
    for (std::size_t j = 0; j < hom.size(); ++j)
      for (std::size_t v = 0; v < w.comps.size(); ++v) w.comps[v] += (*s.coeffs)[j] * hom[j].comps[v];
    r.witness = std::move(w);
  }
  return r;
}

// Block-diagonal matrix of a module endomorphism on the total space.
template <class F>
Matrix<F> total_matrix(const F& f, const ModuleMap<F>& g) {
  std::size_t n = 0;
  for (const auto& c : g.comps) n += c.rows();
  Matrix<F> out(f, n, n);
  std::size_t off = 0;
  for (const auto& c : g.comps) {
    out.set_block(off, off, c);
    off += c.rows();
  }
  return out;
}

template <class F>
struct ModuleDecomposition {
  std::vector<Module<F>> summands;
  bool exact = true;
};

template <class F>
ModuleDecomposition<F> decompose(const Module<F>& m, std::uint64_t seed = 0) {
  ModuleDecomposition<F> out;
  if (m.is_zero()) return out;
  const F& f = m.field();
  MatrixAlgebra<F> end{f, {}, Matrix<F>::identity(f, static_cast<std::size_t>(m.total_dim()))};
  for (const auto& g : hom_space(m, m)) end.basis.push_back(total_matrix(f, g));
  std::mt19937_64 rng(seed);
  auto split = primitive_idempotents(end, rng);
  out.exact = split.exact;
  const int nv = m.algebra().vertex_count();
  for (const auto& e : split.idempotents) {
    Subspaces<F> img;
    std::size_t off = 0;
    for (int v = 0; v < nv; ++v) {
      const auto dv = static_cast<std::size_t>(m.dim(v));
      img.push_back(independent_columns(e.block(off, off, dv, dv)));
      off += dv;
    }
    out.summands.push_back(subquotient(m, zero_space(m), img));
  }
  // Deterministic order: by dimension vector.
  std::stable_sort(out.summands.begin(), out.summands.end(),
                   [](const Module<F>& a, const Module<F>& b) { return a.dims() < b.dims(); });
  return out;
}

}  // namespace silt
