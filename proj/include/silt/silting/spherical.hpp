#pragma once

#include <string>
#include <utility>
#include <vector>

#include "silt/complexes/hom.hpp"
#include "silt/modules/decompose.hpp"
#include "silt/silting/approximation.hpp"

namespace silt {

struct InvalidCertificate : Error {
  using Error::Error;
};

template <class F>
struct SphericalCertificate {
  Module<F> module;
  ProjComplex<F> resolution;
  int d = 0;
  // (j, dim Hom(P_E, P_E[j])) over the whole window.
  std::vector<std::pair<int, std::size_t>> ext;
  // Nonzero homology of nakayama(P_E) as (degree, module).
  std::vector<std::pair<int, Module<F>>> serre_homology;
  bool ext_ok = false;
  bool serre_ok = false;
  IsoResult<F> serre_iso;

  [[nodiscard]] bool valid() const { return ext_ok && serre_ok; }
};

template <class F>
SphericalCertificate<F> check_spherical(const Module<F>& e, int d, int max_length = 64, std::uint64_t seed = 0) {
  if (d < 1) throw std::invalid_argument("sphericity needs d >= 1");
  SphericalCertificate<F> c;
  c.module = e;
  c.d = d;
  c.resolution = resolution_to_complex(e.algebra_ptr(), minimal_projective_resolution(e, max_length));
  const auto& p = c.resolution;
  c.ext = hom_dimensions(p, p);
  c.ext_ok = true;
  bool seen_d = false;
  for (auto [j, dim] : c.ext) {
    const std::size_t want = (j == 0 || j == d) ? 1 : 0;
    if (j == d) seen_d = true;
    if (dim != want) c.ext_ok = false;
  }
  if (!seen_d) c.ext_ok = false;
  auto nu = nakayama(p);
  for (int k = nu.lo; k <= nu.hi(); ++k) {
    auto h = homology(nu, k);
    if (!h.is_zero()) c.serre_homology.emplace_back(k, std::move(h));
  }
  c.serre_ok = c.serre_homology.size() == 1 && c.serre_homology[0].first == -d;
  if (c.serre_ok) {
    c.serre_iso = is_isomorphic(c.serre_homology[0].second, e, seed);
    c.serre_ok = c.serre_iso.isomorphic;
  }
  return c;
}

namespace detail {

// All degree-0 maps from P[j] into X (or from X into P[j]) over the window of
// shifts j, as pairs (source or target complex, chain map).
template <class F>
std::vector<std::pair<ProjComplex<F>, ChainMap<F>>> shifted_hom_basis(const ProjComplex<F>& p, const ProjComplex<F>& x,
                                                                      bool into_x) {
  std::vector<std::pair<ProjComplex<F>, ChainMap<F>>> out;
  if (p.is_zero() || x.is_zero()) return out;
  // P[j] and X share a degree when lo(P) - j <= hi(X) and hi(P) - j >= lo(X).
  for (int j = p.lo() - x.hi(); j <= p.hi() - x.lo(); ++j) {
    auto pj = shift(p, j);
    auto h = into_x ? homotopy_hom(pj, x, 0) : homotopy_hom(x, pj, 0);
    auto maps = into_x ? hom_basis_maps(pj, x, h) : hom_basis_maps(x, pj, h);
    for (auto& g : maps) out.emplace_back(pj, std::move(g));
  }
  return out;
}

}  // namespace detail

// Cone of the evaluation map from the sum of P_E[j] (one copy per basis
// element of Hom(P_E[j], X)) to X, minimized.
template <class F>
ProjComplex<F> spherical_twist(const SphericalCertificate<F>& cert, const ProjComplex<F>& x) {
  if (!cert.valid()) throw InvalidCertificate("spherical twist needs a valid certificate");
  auto basis = detail::shifted_hom_basis(cert.resolution, x, true);
  std::vector<const ChainMap<F>*> parts;
  std::vector<const ProjComplex<F>*> sources;
  std::vector<ProjComplex<F>> pieces;
  for (const auto& [pj, g] : basis) {
    parts.push_back(&g);
    sources.push_back(&pj);
    pieces.push_back(pj);
  }
  auto s = direct_sum(x.algebra_ptr(), pieces);
  auto ev = detail::stack_right(x, s, parts, sources);
  return minimize(cone(s, x, ev));
}

// Co-cone of the coevaluation map from X to the sum of P_E[j] (one copy per
// basis element of Hom(X, P_E[j])), minimized.
template <class F>
ProjComplex<F> inverse_spherical_twist(const SphericalCertificate<F>& cert, const ProjComplex<F>& x) {
  if (!cert.valid()) throw InvalidCertificate("spherical twist needs a valid certificate");
  auto basis = detail::shifted_hom_basis(cert.resolution, x, false);
  std::vector<const ChainMap<F>*> parts;
  std::vector<const ProjComplex<F>*> targets;
  std::vector<ProjComplex<F>> pieces;
  for (const auto& [pj, g] : basis) {
    parts.push_back(&g);
    targets.push_back(&pj);
    pieces.push_back(pj);
  }
  auto t = direct_sum(x.algebra_ptr(), pieces);
  auto coev = detail::stack_left(x, t, parts, targets);
  return minimize(shift(cone(x, t, coev), -1));
}

// Phi_E^m for any integer m.
template <class F>
ProjComplex<F> twist_power(const SphericalCertificate<F>& cert, ProjComplex<F> x, int m) {
  for (int i = 0; i < m; ++i) x = spherical_twist(cert, x);
  for (int i = 0; i > m; --i) x = inverse_spherical_twist(cert, x);
  return x;
}

}  // namespace silt
