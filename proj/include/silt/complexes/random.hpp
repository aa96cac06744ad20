#pragma once

#include <random>
#include <vector>

#include "silt/complexes/hom.hpp"
#include "silt/modules/resolution.hpp"

namespace silt {

// Quotient of a sum of one or two indecomposable projectives by up to three
// random elements with small coefficients.
template <class F>
Module<F> random_module(const AlgebraPtr<F>& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vert(0, a->vertex_count() - 1), count(1, 2), coin(0, 3);
  std::vector<int> verts;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) verts.push_back(vert(rng));
  Module<F> p = projective_sum(a, verts);
  std::vector<ModuleElement<F>> gens;
  const int g = coin(rng);
  for (int i = 0; i < g; ++i) {
    const int w = vert(rng);
    if (p.dim(w) == 0) continue;
    Vec<F> c(static_cast<std::size_t>(p.dim(w)));
    for (auto& x : c) x = a->field().random(rng, 2);
    gens.push_back({w, std::move(c)});
  }
  return quotient_module(p, gens);
}

template <class F>
ProjComplex<F> resolution_complex(const Module<F>& m, int max_length = 64) {
  return resolution_to_complex(m.algebra_ptr(), minimal_projective_resolution(m, max_length));
}

// Random combination of cycles of degree 0 (classes and boundaries).
template <class F>
ChainMap<F> random_chain_map(const ProjComplex<F>& x, const ProjComplex<F>& y, std::mt19937_64& rng) {
  const F& f = x.algebra().field();
  auto h = homotopy_hom(x, y, 0);
  if (h.cochain_dim == 0) return zero_chain_map(x, y);
  Vec<F> v(h.cochain_dim, f.zero());
  auto add = [&](const std::vector<Vec<F>>& vs) {
    for (const auto& b : vs) {
      auto c = f.random(rng, 2);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
  };
  add(h.basis);
  add(h.boundaries);
  return chain_map_from(x, y, 0, v);
}

// Cone of a random map between shifted resolutions of random modules.
template <class F>
ProjComplex<F> random_complex(const AlgebraPtr<F>& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> sh(-1, 1);
  auto x = shift(resolution_complex(random_module(a, rng)), sh(rng));
  auto y = shift(resolution_complex(random_module(a, rng)), sh(rng));
  return cone(x, y, random_chain_map(x, y, rng));
}

}  // namespace silt
