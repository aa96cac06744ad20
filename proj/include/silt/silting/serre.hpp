#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "silt/complexes/hom.hpp"
#include "silt/modules/decompose.hpp"
#include "silt/modules/iso.hpp"
#include "silt/modules/resolution.hpp"

namespace silt {

// Homology of a module complex at (degree k, vertex v): a basis of cycles
// complementing the boundaries, and coordinates of cycles in that basis.
template <class F>
class HomologyBasis {
 public:
  HomologyBasis(const ModuleComplex<F>& c, int k, int v) {
    const F& f = c.alg->field();
    const auto n = static_cast<std::size_t>(c.term_dim(k, v));
    SpanBuilder<F> span(f, n);
    std::vector<Vec<F>> cols;
    Matrix<F> in = c.diff_at(k - 1, v);
    std::vector<Vec<F>> bounds;
    for (std::size_t j = 0; j < in.cols(); ++j) {
      auto col = in.column(j);
      if (span.add(col)) bounds.push_back(std::move(col));
    }
    for (auto& z : kernel_basis(c.diff_at(k, v)))
      if (span.add(z)) basis_.push_back(std::move(z));
    cols = basis_;
    cols.insert(cols.end(), bounds.begin(), bounds.end());
    if (!cols.empty()) solver_ = LinearSolver<F>(Matrix<F>::from_columns(f, n, cols));
  }

  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vec<F>>& basis() const { return basis_; }

  [[nodiscard]] Vec<F> coords(const Vec<F>& cycle) const {
    if (!solver_) return {};
    auto c = solver_->solve(cycle);
    if (!c) throw std::logic_error("vector is not a cycle");
    return Vec<F>(c->begin(), c->begin() + static_cast<long>(basis_.size()));
  }

 private:
  std::vector<Vec<F>> basis_;
  std::optional<LinearSolver<F>> solver_;
};

// Per-vertex matrices, degree by degree, of the chain map X -> Y given by a
// degree-0 cochain of the Hom complex from projective X to module complex Y.
template <class F>
std::vector<std::vector<Matrix<F>>> cochain_module_maps(const ProjComplex<F>& x, const ModuleComplex<F>& y, const Vec<F>& v) {
  std::vector<std::vector<Matrix<F>>> out;
  std::size_t pos = 0;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const auto& t = x.term(k);
    const Module<F> yk = y.term(k);
    std::vector<ModuleElement<F>> gens;
    for (int a : t) {
      const auto n = static_cast<std::size_t>(yk.dim(a));
      gens.push_back({a, Vec<F>(v.begin() + static_cast<long>(pos), v.begin() + static_cast<long>(pos + n))});
      pos += n;
    }
    out.push_back(cover_map(yk, gens));
  }
  return out;
}

enum class SerreVerdict { Confirmed, Refuted, Inconclusive };

inline const char* verdict_name(SerreVerdict v) {
  switch (v) {
    case SerreVerdict::Confirmed: return "confirmed";
    case SerreVerdict::Refuted: return "refuted";
    case SerreVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

template <class F>
struct SerreComparison {
  SerreVerdict verdict = SerreVerdict::Inconclusive;
  // Stage that decided the verdict: homology, fingerprint or witness.
  std::string stage;
  std::string detail;
  bool exact = true;
  double failure_bound = 0.0;
  std::string method;
  // Cochain of a quasi-isomorphism X[s] -> nakayama(Y).
  std::optional<Vec<F>> witness;
};

// Decides whether nakayama(Y) is isomorphic to X[s] in the derived category.
// Only an explicit quasi-isomorphism X[s] -> nakayama(Y) confirms.
template <class F>
SerreComparison<F> serre_compare(const ProjComplex<F>& y, const ProjComplex<F>& x, int s,
                                 const std::vector<ProjComplex<F>>& probes = {}, std::uint64_t seed = 0,
                                 std::uint64_t budget = kDefaultBudget) {
  SerreComparison<F> out;
  const Algebra<F>& a = y.algebra();
  const F& f = a.field();
  ModuleComplex<F> nu = nakayama(y);
  ProjComplex<F> xs = shift(x, s);
  ModuleComplex<F> mx = to_module_complex(xs);
  int lo = std::min(nu.lo, mx.lo), hi = std::max(nu.hi(), mx.hi());
  if (nu.terms.empty()) lo = mx.lo, hi = mx.hi();
  if (mx.terms.empty()) lo = nu.lo, hi = nu.hi();

  out.stage = "homology";
  for (int k = lo; k <= hi; ++k) {
    auto h1 = homology(nu, k), h2 = homology(mx, k);
    if (h1.dims() != h2.dims()) {
      out.verdict = SerreVerdict::Refuted;
      out.detail = "homology dimension vectors differ in degree " + std::to_string(k) + ": " + h1.dim_vector_str() +
                   " vs " + h2.dim_vector_str();
      return out;
    }
    if (h1.is_zero()) continue;
    auto r = is_isomorphic(h1, h2, seed, budget);
    if (!r.isomorphic) {
      out.verdict = r.exact ? SerreVerdict::Refuted : SerreVerdict::Inconclusive;
      out.exact = r.exact;
      out.failure_bound = r.failure_bound;
      out.detail = "homology in degree " + std::to_string(k) + " is not isomorphic";
      return out;
    }
  }

  out.stage = "fingerprint";
  for (std::size_t p = 0; p < probes.size(); ++p) {
    HomComplex<F> h1(probes[p], nu), h2(probes[p], mx);
    auto w1 = h1.window(), w2 = h2.window();
    const int tlo = std::min(w1.first, w2.first), thi = std::max(w1.second, w2.second);
    for (int t = tlo; t <= thi; ++t) {
      const auto d1 = h1.hom(t).dim(), d2 = h2.hom(t).dim();
      if (d1 != d2) {
        out.verdict = SerreVerdict::Refuted;
        out.detail = "probe " + std::to_string(p + 1) + " gives Hom dimensions " + std::to_string(d1) + " and " +
                     std::to_string(d2) + " in shift " + std::to_string(t);
        return out;
      }
    }
  }

  out.stage = "witness";
  HomComplex<F> hc(xs, nu);
  HomSpace<F> h = hc.hom(0);
  struct Block {
    int k, v;
    HomologyBasis<F> src, dst;
  };
  std::vector<Block> blocks;
  for (int k = lo; k <= hi; ++k)
    for (int v = 0; v < a.vertex_count(); ++v) {
      HomologyBasis<F> src(mx, k, v);
      if (src.dim() == 0) continue;
      blocks.push_back({k, v, std::move(src), HomologyBasis<F>(nu, k, v)});
    }
  if (blocks.empty()) {
    out.verdict = SerreVerdict::Confirmed;
    out.method = "zero";
    out.witness = Vec<F>(h.cochain_dim, f.zero());
    return out;
  }
  std::vector<std::vector<Matrix<F>>> family;
  for (const auto& vec : h.basis) {
    auto maps = cochain_module_maps(xs, nu, vec);
    std::vector<Matrix<F>> fam;
    for (const auto& b : blocks) {
      const auto& g = maps[static_cast<std::size_t>(b.k - xs.lo())][static_cast<std::size_t>(b.v)];
      std::vector<Vec<F>> cols;
      for (const auto& z : b.src.basis()) cols.push_back(b.dst.coords(g * z));
      fam.push_back(Matrix<F>::from_columns(f, b.dst.dim(), cols));
    }
    family.push_back(std::move(fam));
  }
  std::mt19937_64 rng(seed);
  auto found = find_invertible(f, family, blocks.size(), rng, budget);
  out.exact = found.exact;
  out.failure_bound = found.failure_bound;
  out.method = found.method;
  if (found.found()) {
    out.verdict = SerreVerdict::Confirmed;
    Vec<F> w(h.cochain_dim, f.zero());
    for (std::size_t j = 0; j < h.basis.size(); ++j)
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += (*found.coeffs)[j] * h.basis[j][i];
    out.witness = std::move(w);
  } else {
    out.verdict = found.exact ? SerreVerdict::Refuted : SerreVerdict::Inconclusive;
    out.detail = "no chain map induces isomorphisms on homology";
  }
  return out;
}

}  // namespace silt
