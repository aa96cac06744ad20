#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "silt/complexes/hom.hpp"
#include "silt/modules/idempotents.hpp"
#include "silt/modules/iso.hpp"

namespace silt {

// Scalar parts of the entries of a map between sums of projectives.
template <class F>
Matrix<F> top_part(const Algebra<F>& a, const AlgMatrix<F>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix<F> out(a.field(), m.rows(), m.cols());
  for (std::size_t s = 0; s < m.rows(); ++s)
    for (std::size_t r = 0; r < m.cols(); ++r)
      if (rows[s] == cols[r]) out(s, r) = a.top_coeff(m(s, r), cols[r]);
  return out;
}

// Inverse of a square map between sums of projectives with invertible top.
template <class F>
AlgMatrix<F> invert_alg_matrix(const Algebra<F>& a, const AlgMatrix<F>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix<F> top_inv = inverse(top_part(a, m, rows, cols));
  AlgMatrix<F> bar(cols.size(), rows.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (!is_zero(top_inv(i, j))) bar(i, j) = top_inv(i, j) * a.idempotent(cols[i]);
  AlgMatrix<F> nil = identity_alg_matrix(a, cols) - mul(a, bar, m);
  AlgMatrix<F> term = identity_alg_matrix(a, cols), sum(cols.size(), cols.size());
  while (!term.is_zero()) {
    sum = sum + term;
    term = mul(a, term, nil);
  }
  return mul(a, sum, bar);
}

template <class F>
std::vector<std::size_t> independent_column_indices(const Matrix<F>& m) {
  std::vector<Vec<F>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return independent_subset(m.field(), m.rows(), cols);
}

// The summand of X cut out by an idempotent chain endomorphism e.
template <class F>
ProjComplex<F> image_summand(const ProjComplex<F>& x, const ChainMap<F>& e) {
  const Algebra<F>& a = x.algebra();
  if (x.is_zero()) return x;
  std::vector<std::vector<int>> terms;
  std::vector<AlgMatrix<F>> incl, proj;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const auto& t = x.term(k);
    auto ek = e.comp(k, x, x);
    Matrix<F> top = top_part(a, ek, t, t);
    auto cs = independent_column_indices(top);
    std::vector<std::size_t> all(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) all[i] = i;
    auto rs = independent_column_indices(top.select(all, cs).transpose());
    std::vector<int> cv, rv;
    for (auto c : cs) cv.push_back(t[c]);
    for (auto r : rs) rv.push_back(t[r]);
    AlgMatrix<F> iota = ek.select(all, cs);
    AlgMatrix<F> minv = invert_alg_matrix(a, ek.select(rs, cs), rv, cv);
    proj.push_back(mul(a, minv, ek.select(rs, all)));
    incl.push_back(std::move(iota));
    terms.push_back(std::move(cv));
  }
  std::vector<AlgMatrix<F>> diffs;
  for (int k = x.lo(); k < x.hi(); ++k) {
    const auto i = static_cast<std::size_t>(k - x.lo());
    diffs.push_back(mul(a, proj[i + 1], mul(a, x.diff(k), incl[i])));
  }
  return ProjComplex<F>(x.algebra_ptr(), x.lo(), std::move(terms), std::move(diffs));
}

template <class F>
struct ComplexDecomposition {
  std::vector<ProjComplex<F>> summands;
  bool exact = true;
};

// Block-diagonal scalar parts of a chain endomorphism, one block per degree.
// On minimal complexes this is an algebra map whose kernel is nilpotent.
template <class F>
Matrix<F> top_matrix(const ProjComplex<F>& x, const ChainMap<F>& g) {
  const Algebra<F>& a = x.algebra();
  const std::size_t n = x.summand_count();
  Matrix<F> out(a.field(), n, n);
  std::size_t off = 0;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const auto& t = x.term(k);
    out.set_block(off, off, top_part(a, g.comp(k, x, x), t, t));
    off += t.size();
  }
  return out;
}

template <class F>
ChainMap<F> linear_combination(const ProjComplex<F>& x, const std::vector<ChainMap<F>>& maps, const Vec<F>& c) {
  ChainMap<F> g = zero_chain_map(x, x);
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (is_zero(c[j])) continue;
    for (std::size_t i = 0; i < g.comps.size(); ++i) g.comps[i] = g.comps[i] + c[j] * maps[j].comps[i];
  }
  return g;
}

// Turns an endomorphism that is idempotent modulo a nilpotent ideal into an
// idempotent by iterating g -> 3g^2 - 2g^3.
template <class F>
ChainMap<F> lift_idempotent(const ProjComplex<F>& x, ChainMap<F> g) {
  const F& f = x.algebra().field();
  const auto three = f.from_int(3), two = f.from_int(2);
  for (int it = 0; it < 64; ++it) {
    auto g2 = compose(g, g, x, x, x);
    if (g2.comps == g.comps) return g;
    auto g3 = compose(g2, g, x, x, x);
    for (std::size_t i = 0; i < g.comps.size(); ++i) g.comps[i] = three * g2.comps[i] - two * g3.comps[i];
  }
  throw std::logic_error("idempotent lifting did not converge");
}

// Splits the endomorphism algebra modulo the maps with radical entries, then
// lifts the primitive idempotents back to chain maps.
template <class F>
ComplexDecomposition<F> decompose_complex(const ProjComplex<F>& input, std::uint64_t seed = 0) {
  ComplexDecomposition<F> out;
  ProjComplex<F> x = minimize(input);
  if (x.is_zero()) return out;
  const F& f = x.algebra().field();
  HomSpace<F> h = homotopy_hom(x, x, 0);
  auto maps = hom_basis_maps(x, x, h);
  const std::size_t n = x.summand_count();
  MatrixAlgebra<F> top{f, {}, Matrix<F>::identity(f, n)};
  std::vector<Vec<F>> flats;
  std::vector<std::size_t> kept;
  SpanBuilder<F> span(f, n * n);
  for (std::size_t j = 0; j < maps.size(); ++j) {
    auto m = top_matrix(x, maps[j]);
    auto flat = m.flatten();
    if (!span.add(flat)) continue;
    top.basis.push_back(std::move(m));
    flats.push_back(std::move(flat));
    kept.push_back(j);
  }
  std::mt19937_64 rng(seed);
  auto split = primitive_idempotents(top, rng);
  out.exact = split.exact;
  if (split.idempotents.size() == 1) {
    out.summands.push_back(x);
    return out;
  }
  LinearSolver<F> coords(Matrix<F>::from_columns(f, n * n, flats));
  std::vector<ChainMap<F>> basis;
  for (auto j : kept) basis.push_back(maps[j]);
  for (const auto& e : split.idempotents) {
    auto c = coords.solve(e.flatten());
    if (!c) throw std::logic_error("idempotent outside the endomorphism algebra");
    auto g = lift_idempotent(x, linear_combination(x, basis, *c));
    out.summands.push_back(minimize(image_summand(x, g)));
  }
  std::stable_sort(out.summands.begin(), out.summands.end(), [](const ProjComplex<F>& p, const ProjComplex<F>& q) {
    return std::make_pair(p.lo(), p.terms()) < std::make_pair(q.lo(), q.terms());
  });
  return out;
}

template <class F>
struct ComplexIsoResult {
  bool isomorphic = false;
  bool exact = true;
  double failure_bound = 0.0;
  std::string method;
  std::optional<ChainMap<F>> witness;
};

// Per-degree multisets of summand vertices.
template <class F>
std::map<int, std::vector<int>> term_profile(const ProjComplex<F>& x) {
  std::map<int, std::vector<int>> out;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    auto t = x.term(k);
    std::sort(t.begin(), t.end());
    if (!t.empty()) out[k] = std::move(t);
  }
  return out;
}

// Homotopy equivalence test. Both sides are minimized first; between minimal
// complexes a map is a homotopy equivalence iff its scalar parts are invertible.
template <class F>
ComplexIsoResult<F> iso_complex(const ProjComplex<F>& x0, const ProjComplex<F>& y0, std::uint64_t seed = 0,
                                std::uint64_t budget = kDefaultBudget) {
  ComplexIsoResult<F> res;
  ProjComplex<F> x = minimize(x0), y = minimize(y0);
  if (term_profile(x) != term_profile(y)) {
    res.method = "terms";
    return res;
  }
  if (x.is_zero()) {
    res.isomorphic = true;
    res.method = "zero";
    res.witness = zero_chain_map(x, y);
    return res;
  }
  const Algebra<F>& a = x.algebra();
  HomSpace<F> h = homotopy_hom(x, y, 0);
  auto maps = hom_basis_maps(x, y, h);
  // Blocks: one per (degree, vertex) pair present.
  std::vector<std::vector<Matrix<F>>> family(maps.size());
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const auto& xt = x.term(k);
    const auto& yt = y.term(k);
    for (int v = 0; v < a.vertex_count(); ++v) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t i = 0; i < yt.size(); ++i)
        if (yt[i] == v) rs.push_back(i);
      for (std::size_t i = 0; i < xt.size(); ++i)
        if (xt[i] == v) cs.push_back(i);
      if (cs.empty()) continue;
      for (std::size_t j = 0; j < maps.size(); ++j)
        family[j].push_back(top_part(a, maps[j].comp(k, x, y), yt, xt).select(rs, cs));
    }
  }
  std::mt19937_64 rng(seed);
  const std::size_t nblocks = family.empty() ? 0 : family[0].size();
  auto s = find_invertible(a.field(), family, nblocks, rng, budget);
  res.exact = s.exact;
  res.failure_bound = s.failure_bound;
  res.method = s.method;
  if (s.found()) {
    res.isomorphic = true;
    Vec<F> v(h.cochain_dim, a.field().zero());
    for (std::size_t j = 0; j < maps.size(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += (*s.coeffs)[j] * h.basis[j][i];
    res.witness = chain_map_from(x, y, 0, v);
  }
  return res;
}

}  // namespace silt
