#pragma once

#include <vector>

#include "silt/complexes/decompose.hpp"
#include "silt/silting/silting.hpp"

namespace silt {

template <class F>
ComplexIsoResult<F> alpha_invariant(const ProjComplex<F>& x, const AlgebraAutomorphism<F>& sigma, std::uint64_t seed = 0,
                                    std::uint64_t budget = kDefaultBudget) {
  return iso_complex(x, twist_complex(x, sigma), seed, budget);
}

// Every indecomposable summand is fixed by sigma up to isomorphism.
template <class F>
bool summands_invariant(const SiltingObject<F>& m, const AlgebraAutomorphism<F>& sigma, std::uint64_t seed = 0) {
  for (const auto& s : m.summands)
    if (!alpha_invariant(s, sigma, seed).isomorphic) return false;
  return true;
}

// Complex over T(A) obtained by applying - (x)_A T(A) termwise; the basis of
// A sits inside T(A) with the same indices.
template <class F>
ProjComplex<F> induce_trivial_extension(const ProjComplex<F>& x, const AlgebraPtr<F>& t) {
  const Algebra<F>& a = x.algebra();
  if (t->vertex_count() != a.vertex_count() || t->dim() != 2 * a.dim())
    throw DimensionMismatch("target is not the trivial extension of the complex's algebra");
  if (x.is_zero()) return ProjComplex<F>(t);
  return minimize(ProjComplex<F>(t, x.lo(), x.terms(), x.diffs()));
}

}  // namespace silt
