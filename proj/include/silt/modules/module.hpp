#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "silt/algebra/alg_matrix.hpp"
#include "silt/algebra/automorphism.hpp"

namespace silt {

struct InvalidModule : Error {
  using Error::Error;
};

// Right module as a representation: a vector space per vertex and, for every
// basis element b of e_s A e_t, the matrix of m -> m.b from M_s to M_t
// (column vectors). Actions therefore compose as act(bc) = act(c) act(b).
template <class F>
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr<F> alg, std::vector<int> dims, std::vector<Matrix<F>> action)
      : alg_(std::move(alg)), dims_(std::move(dims)), act_(std::move(action)) {
    if (static_cast<int>(dims_.size()) != alg_->vertex_count()) throw InvalidModule("dimension vector has the wrong length");
    if (static_cast<int>(act_.size()) != alg_->dim()) throw InvalidModule("one action matrix per basis element required");
    for (int d : dims_)
      if (d < 0) throw InvalidModule("negative dimension");
    for (int b = 0; b < alg_->dim(); ++b) {
      const auto& info = alg_->basis(b);
      const auto& m = act_[static_cast<std::size_t>(b)];
      if (m.rows() != static_cast<std::size_t>(dim(info.target)) || m.cols() != static_cast<std::size_t>(dim(info.source)))
        throw InvalidModule("action matrix of " + info.name + " has shape " + m.shape());
    }
  }

  static Module zero(AlgebraPtr<F> alg) {
    std::vector<int> dims(static_cast<std::size_t>(alg->vertex_count()), 0);
    std::vector<Matrix<F>> act;
    for (int b = 0; b < alg->dim(); ++b) act.emplace_back(alg->field(), 0, 0);
    return Module(alg, std::move(dims), std::move(act));
  }

  [[nodiscard]] const AlgebraPtr<F>& algebra_ptr() const { return alg_; }
  [[nodiscard]] const Algebra<F>& algebra() const { return *alg_; }
  [[nodiscard]] const F& field() const { return alg_->field(); }
  [[nodiscard]] int dim(int v) const { return dims_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
  [[nodiscard]] int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
  [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
  [[nodiscard]] const Matrix<F>& action(int b) const { return act_.at(static_cast<std::size_t>(b)); }

  // Action of an element of e_from A e_to, from M_from to M_to.
  [[nodiscard]] Matrix<F> action_of(const AlgElem<F>& a, int from, int to) const {
    Matrix<F> m(field(), static_cast<std::size_t>(dim(to)), static_cast<std::size_t>(dim(from)));
    for (const auto& [b, c] : a.terms) {
      const auto& info = alg_->basis(b);
      if (info.source != from || info.target != to) throw InvalidModule("element does not lie in e_from A e_to");
      m += c * act_[static_cast<std::size_t>(b)];
    }
    return m;
  }

  // Checks unit and associativity axioms on every basis pair.
  [[nodiscard]] bool is_valid() const {
    const Algebra<F>& a = *alg_;
    for (int v = 0; v < a.vertex_count(); ++v)
      if (!(act_[static_cast<std::size_t>(v)] == Matrix<F>::identity(field(), static_cast<std::size_t>(dim(v))))) return false;
    for (int b = 0; b < a.dim(); ++b)
      for (int c = 0; c < a.dim(); ++c) {
        if (a.basis(b).target != a.basis(c).source) continue;
        const auto& info_b = a.basis(b);
        const auto& info_c = a.basis(c);
        Matrix<F> lhs = act_[static_cast<std::size_t>(c)] * act_[static_cast<std::size_t>(b)];
        Matrix<F> rhs(field(), static_cast<std::size_t>(dim(info_c.target)), static_cast<std::size_t>(dim(info_b.source)));
        for (const auto& [k, x] : a.product(b, c)) rhs += x * act_[static_cast<std::size_t>(k)];
        if (!(lhs == rhs)) return false;
      }
    return true;
  }

  [[nodiscard]] std::string dim_vector_str() const {
    std::string s = "(";
    for (std::size_t v = 0; v < dims_.size(); ++v) s += (v ? "," : "") + std::to_string(dims_[v]);
    return s + ")";
  }

 private:
  AlgebraPtr<F> alg_;
  std::vector<int> dims_;
  std::vector<Matrix<F>> act_;
};

// Per-vertex matrices N_v x M_v.
template <class F>
struct ModuleMap {
  std::vector<Matrix<F>> comps;

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return false;
    return true;
  }
  friend bool operator==(const ModuleMap& a, const ModuleMap& b) { return a.comps == b.comps; }
};

template <class F>
ModuleMap<F> zero_map(const Module<F>& src, const Module<F>& dst) {
  ModuleMap<F> f;
  for (int v = 0; v < src.algebra().vertex_count(); ++v)
    f.comps.emplace_back(src.field(), static_cast<std::size_t>(dst.dim(v)), static_cast<std::size_t>(src.dim(v)));
  return f;
}

template <class F>
ModuleMap<F> identity_map(const Module<F>& m) {
  ModuleMap<F> f;
  for (int v = 0; v < m.algebra().vertex_count(); ++v)
    f.comps.push_back(Matrix<F>::identity(m.field(), static_cast<std::size_t>(m.dim(v))));
  return f;
}

template <class F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
  ModuleMap<F> h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

template <class F>
bool is_module_map(const Module<F>& src, const Module<F>& dst, const ModuleMap<F>& f) {
  const Algebra<F>& a = src.algebra();
  for (int g : a.generators()) {
    const auto& info = a.basis(g);
    if (!(dst.action(g) * f.comps[static_cast<std::size_t>(info.source)] ==
          f.comps[static_cast<std::size_t>(info.target)] * src.action(g)))
      return false;
  }
  return true;
}

// e_i A: the vertex-v space has basis e_i A e_v.
template <class F>
Module<F> projective(const AlgebraPtr<F>& alg, int i) {
  if (i < 0 || i >= alg->vertex_count()) throw IndexError("projective index out of range");
  const int n = alg->vertex_count();
  std::vector<int> dims(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dims[static_cast<std::size_t>(v)] = static_cast<int>(alg->between(i, v).size());
  std::vector<Matrix<F>> act;
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& info = alg->basis(b);
    Matrix<F> m(alg->field(), static_cast<std::size_t>(dims[static_cast<std::size_t>(info.target)]),
                static_cast<std::size_t>(dims[static_cast<std::size_t>(info.source)]));
    for (int u : alg->between(i, info.source))
      for (const auto& [w, c] : alg->product(u, b))
        m(static_cast<std::size_t>(alg->position(w)), static_cast<std::size_t>(alg->position(u))) = c;
    act.push_back(std::move(m));
  }
  return Module<F>(alg, std::move(dims), std::move(act));
}

// D(A e_i): the vertex-v space has the dual basis of e_v A e_i.
template <class F>
Module<F> injective(const AlgebraPtr<F>& alg, int i) {
  if (i < 0 || i >= alg->vertex_count()) throw IndexError("injective index out of range");
  const int n = alg->vertex_count();
  std::vector<int> dims(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dims[static_cast<std::size_t>(v)] = static_cast<int>(alg->between(v, i).size());
  std::vector<Matrix<F>> act;
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& info = alg->basis(b);
    Matrix<F> m(alg->field(), static_cast<std::size_t>(dims[static_cast<std::size_t>(info.target)]),
                static_cast<std::size_t>(dims[static_cast<std::size_t>(info.source)]));
    // (u* . b)(w) = u*(b w)
    for (int w : alg->between(info.target, i))
      for (const auto& [u, c] : alg->product(b, w))
        m(static_cast<std::size_t>(alg->position(w)), static_cast<std::size_t>(alg->position(u))) = c;
    act.push_back(std::move(m));
  }
  return Module<F>(alg, std::move(dims), std::move(act));
}

template <class F>
Module<F> simple(const AlgebraPtr<F>& alg, int i) {
  if (i < 0 || i >= alg->vertex_count()) throw IndexError("simple index out of range");
  std::vector<int> dims(static_cast<std::size_t>(alg->vertex_count()), 0);
  dims[static_cast<std::size_t>(i)] = 1;
  std::vector<Matrix<F>> act;
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& info = alg->basis(b);
    Matrix<F> m(alg->field(), static_cast<std::size_t>(dims[static_cast<std::size_t>(info.target)]),
                static_cast<std::size_t>(dims[static_cast<std::size_t>(info.source)]));
    if (b == i) m(0, 0) = alg->field().one();
    act.push_back(std::move(m));
  }
  return Module<F>(alg, std::move(dims), std::move(act));
}

// Representation from arrow matrices (path-algebra presentations only).
template <class F>
Module<F> module_from_arrows(const AlgebraPtr<F>& alg, std::vector<int> dims, const std::vector<Matrix<F>>& arrows) {
  const Quiver& q = alg->quiver();
  if (!alg->is_path_algebra()) throw InvalidModule("arrow representations need a path-algebra presentation");
  if (static_cast<int>(arrows.size()) != q.arrow_count()) throw InvalidModule("one matrix per arrow required");
  auto eval = [&](int start, const std::vector<int>& word) {
    Matrix<F> m = Matrix<F>::identity(alg->field(), static_cast<std::size_t>(dims.at(static_cast<std::size_t>(start))));
    for (int a : word) {
      const auto& ar = q.arrow(a);
      const auto& x = arrows[static_cast<std::size_t>(a)];
      if (x.rows() != static_cast<std::size_t>(dims[static_cast<std::size_t>(ar.target)]) ||
          x.cols() != static_cast<std::size_t>(dims[static_cast<std::size_t>(ar.source)]))
        throw InvalidModule("matrix for arrow '" + ar.label + "' has shape " + x.shape());
      m = x * m;
    }
    return m;
  };
  for (const auto& r : alg->relations()) {
    const int s = r.terms[0].second.start;
    const int t = r.terms[0].second.end(q);
    Matrix<F> sum(alg->field(), static_cast<std::size_t>(dims[static_cast<std::size_t>(t)]), static_cast<std::size_t>(dims[static_cast<std::size_t>(s)]));
    for (const auto& [c, p] : r.terms) sum += c * eval(p.start, p.arrows);
    if (!sum.is_zero()) throw InvalidModule("a relation at vertex " + std::to_string(s + 1) + " does not act as zero");
  }
  std::vector<Matrix<F>> act;
  for (int b = 0; b < alg->dim(); ++b) act.push_back(eval(alg->basis(b).source, alg->basis(b).word));
  return Module<F>(alg, std::move(dims), std::move(act));
}

template <class F>
Module<F> direct_sum(const Module<F>& m, const Module<F>& n) {
  require_same_algebra(m.algebra_ptr(), n.algebra_ptr());
  const Algebra<F>& a = m.algebra();
  std::vector<int> dims(static_cast<std::size_t>(a.vertex_count()));
  for (int v = 0; v < a.vertex_count(); ++v) dims[static_cast<std::size_t>(v)] = m.dim(v) + n.dim(v);
  std::vector<Matrix<F>> act;
  for (int b = 0; b < a.dim(); ++b) {
    const auto& info = a.basis(b);
    Matrix<F> x(a.field(), static_cast<std::size_t>(dims[static_cast<std::size_t>(info.target)]),
                static_cast<std::size_t>(dims[static_cast<std::size_t>(info.source)]));
    x.set_block(0, 0, m.action(b));
    x.set_block(static_cast<std::size_t>(m.dim(info.target)), static_cast<std::size_t>(m.dim(info.source)), n.action(b));
    act.push_back(std::move(x));
  }
  return Module<F>(m.algebra_ptr(), std::move(dims), std::move(act));
}

template <class F>
Module<F> direct_sum(const AlgebraPtr<F>& alg, const std::vector<Module<F>>& parts) {
  Module<F> acc = Module<F>::zero(alg);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

// Per-vertex subspaces, each given by a matrix whose columns form a basis.
template <class F>
using Subspaces = std::vector<Matrix<F>>;

template <class F>
Matrix<F> independent_columns(const Matrix<F>& m) {
  std::vector<Vec<F>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  auto keep = independent_subset(m.field(), m.rows(), cols);
  std::vector<Vec<F>> kept;
  for (auto i : keep) kept.push_back(cols[i]);
  return Matrix<F>::from_columns(m.field(), m.rows(), kept);
}

// W / U for submodules U within W within M, with W/U spanned at each vertex
// by the columns of W that extend a basis of U (chosen greedily in order).
// Also returns the chosen complement columns.
template <class F>
std::pair<Module<F>, Subspaces<F>> subquotient_with_basis(const Module<F>& m, const Subspaces<F>& u, const Subspaces<F>& w) {
  const Algebra<F>& a = m.algebra();
  const F& f = m.field();
  const int n = a.vertex_count();
  Subspaces<F> comp;
  std::vector<LinearSolver<F>> solvers;
  std::vector<int> dims;
  std::vector<std::size_t> urank;
  for (int v = 0; v < n; ++v) {
    const auto dv = static_cast<std::size_t>(m.dim(v));
    SpanBuilder<F> span(f, dv);
    std::vector<Vec<F>> ucols, ccols;
    for (std::size_t c = 0; c < u[static_cast<std::size_t>(v)].cols(); ++c) {
      auto col = u[static_cast<std::size_t>(v)].column(c);
      if (span.add(col)) ucols.push_back(std::move(col));
    }
    for (std::size_t c = 0; c < w[static_cast<std::size_t>(v)].cols(); ++c) {
      auto col = w[static_cast<std::size_t>(v)].column(c);
      if (span.add(col)) ccols.push_back(std::move(col));
    }
    std::vector<Vec<F>> both = ucols;
    both.insert(both.end(), ccols.begin(), ccols.end());
    solvers.emplace_back(Matrix<F>::from_columns(f, dv, both));
    comp.push_back(Matrix<F>::from_columns(f, dv, ccols));
    dims.push_back(static_cast<int>(ccols.size()));
    urank.push_back(ucols.size());
  }
  std::vector<Matrix<F>> act;
  for (int b = 0; b < a.dim(); ++b) {
    const auto& info = a.basis(b);
    const auto s = static_cast<std::size_t>(info.source), t = static_cast<std::size_t>(info.target);
    Matrix<F> x(f, static_cast<std::size_t>(dims[t]), static_cast<std::size_t>(dims[s]));
    if (dims[s] > 0 && dims[t] > 0) {
      Matrix<F> img = m.action(b) * comp[s];
      for (std::size_t c = 0; c < img.cols(); ++c) {
        auto coords = solvers[t].solve(img.column(c));
        if (!coords) throw InvalidModule("subquotient: subspaces are not submodules");
        for (std::size_t r = 0; r < static_cast<std::size_t>(dims[t]); ++r) x(r, c) = (*coords)[urank[t] + r];
      }
    }
    act.push_back(std::move(x));
  }
  return {Module<F>(m.algebra_ptr(), std::move(dims), std::move(act)), std::move(comp)};
}

template <class F>
Module<F> subquotient(const Module<F>& m, const Subspaces<F>& u, const Subspaces<F>& w) {
  return subquotient_with_basis(m, u, w).first;
}

template <class F>
Subspaces<F> whole_space(const Module<F>& m) {
  Subspaces<F> s;
  for (int v = 0; v < m.algebra().vertex_count(); ++v)
    s.push_back(Matrix<F>::identity(m.field(), static_cast<std::size_t>(m.dim(v))));
  return s;
}

template <class F>
Subspaces<F> zero_space(const Module<F>& m) {
  Subspaces<F> s;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) s.emplace_back(m.field(), static_cast<std::size_t>(m.dim(v)), 0);
  return s;
}

template <class F>
struct ModuleElement {
  int vertex = 0;
  Vec<F> coords;
};

// Submodule generated by the given elements.
template <class F>
Subspaces<F> generated_submodule(const Module<F>& m, const std::vector<ModuleElement<F>>& gens) {
  const Algebra<F>& a = m.algebra();
  const int n = a.vertex_count();
  std::vector<std::vector<Vec<F>>> cols(static_cast<std::size_t>(n));
  for (const auto& g : gens) {
    if (g.coords.size() != static_cast<std::size_t>(m.dim(g.vertex))) throw DimensionMismatch("generator has the wrong length");
    for (int v = 0; v < n; ++v)
      for (int b : a.between(g.vertex, v)) cols[static_cast<std::size_t>(v)].push_back(m.action(b) * g.coords);
  }
  Subspaces<F> out;
  for (int v = 0; v < n; ++v) {
    const auto dv = static_cast<std::size_t>(m.dim(v));
    auto keep = independent_subset(m.field(), dv, cols[static_cast<std::size_t>(v)]);
    std::vector<Vec<F>> kept;
    for (auto i : keep) kept.push_back(cols[static_cast<std::size_t>(v)][i]);
    out.push_back(Matrix<F>::from_columns(m.field(), dv, kept));
  }
  return out;
}

template <class F>
Module<F> quotient_module(const Module<F>& m, const std::vector<ModuleElement<F>>& gens) {
  return subquotient(m, generated_submodule(m, gens), whole_space(m));
}

// e_i A modulo the submodule generated by the given basis elements of e_i A.
template <class F>
Module<F> projective_quotient(const AlgebraPtr<F>& alg, int i, const std::vector<int>& basis_elements) {
  Module<F> p = projective(alg, i);
  std::vector<ModuleElement<F>> gens;
  for (int b : basis_elements) {
    const auto& info = alg->basis(b);
    if (info.source != i) throw InvalidModule("element does not lie in e_i A");
    Vec<F> e(static_cast<std::size_t>(p.dim(info.target)), alg->field().zero());
    e[static_cast<std::size_t>(alg->position(b))] = alg->field().one();
    gens.push_back({info.target, std::move(e)});
  }
  return quotient_module(p, gens);
}

// Basis of Hom_A(M, N) from the commuting squares N_g f_s = f_t M_g over the
// algebra generators g.
template <class F>
std::vector<ModuleMap<F>> hom_space(const Module<F>& m, const Module<F>& n) {
  require_same_algebra(m.algebra_ptr(), n.algebra_ptr());
  const Algebra<F>& a = m.algebra();
  const F& f = m.field();
  const int nv = a.vertex_count();
  std::vector<std::size_t> off(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v)
    off[static_cast<std::size_t>(v) + 1] = off[static_cast<std::size_t>(v)] + static_cast<std::size_t>(n.dim(v) * m.dim(v));
  const std::size_t vars = off.back();
  auto var = [&](int v, std::size_t i, std::size_t j) {
    return off[static_cast<std::size_t>(v)] + i * static_cast<std::size_t>(m.dim(v)) + j;
  };
  std::vector<Vec<F>> rows;
  for (int g : a.generators()) {
    const auto& info = a.basis(g);
    const int s = info.source, t = info.target;
    const auto& mg = m.action(g);
    const auto& ng = n.action(g);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n.dim(t)); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(m.dim(s)); ++j) {
        Vec<F> row(vars, f.zero());
        for (std::size_t k = 0; k < static_cast<std::size_t>(n.dim(s)); ++k)
          if (!is_zero(ng(i, k))) row[var(s, k, j)] += ng(i, k);
        for (std::size_t k = 0; k < static_cast<std::size_t>(m.dim(t)); ++k)
          if (!is_zero(mg(k, j))) row[var(t, i, k)] -= mg(k, j);
        if (!is_zero_vec<F>(row)) rows.push_back(std::move(row));
      }
  }
  std::vector<Vec<F>> ker;
  if (rows.empty()) {
    for (std::size_t c = 0; c < vars; ++c) {
      Vec<F> e(vars, f.zero());
      e[c] = f.one();
      ker.push_back(std::move(e));
    }
  } else {
    ker = kernel_basis(Matrix<F>::from_rows(f, vars, rows));
  }
  std::vector<ModuleMap<F>> out;
  for (const auto& k : ker) {
    ModuleMap<F> h;
    for (int v = 0; v < nv; ++v) {
      Matrix<F> c(f, static_cast<std::size_t>(n.dim(v)), static_cast<std::size_t>(m.dim(v)));
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = k[var(v, i, j)];
      h.comps.push_back(std::move(c));
    }
    out.push_back(std::move(h));
  }
  return out;
}

// Twist by sigma: b acts on the twisted module as sigma^{-1}(b) acts on M.
template <class F>
Module<F> twist_module(const Module<F>& m, const AlgebraAutomorphism<F>& sigma) {
  require_same_algebra(m.algebra_ptr(), sigma.algebra());
  if (!sigma.fixes_vertices()) throw InvalidModule("module twists need a vertex-fixing automorphism");
  const Algebra<F>& a = m.algebra();
  auto inv = sigma.inverse();
  std::vector<Matrix<F>> act;
  for (int b = 0; b < a.dim(); ++b) act.push_back(m.action_of(inv.image(b), a.basis(b).source, a.basis(b).target));
  return Module<F>(m.algebra_ptr(), m.dims(), std::move(act));
}

// Sum of projectives e_{v_0}A + e_{v_1}A + ... as a representation; the
// vertex-w space concatenates the bases e_{v_s} A e_w in summand order.
template <class F>
Module<F> projective_sum(const AlgebraPtr<F>& alg, const std::vector<int>& vertices) {
  std::vector<Module<F>> parts;
  for (int v : vertices) parts.push_back(projective(alg, v));
  return direct_sum(alg, parts);
}

// Offsets of each summand inside the vertex-w space of projective_sum.
template <class F>
std::vector<std::size_t> projective_offsets(const Algebra<F>& alg, const std::vector<int>& vertices, int w) {
  std::vector<std::size_t> off{0};
  for (int v : vertices) off.push_back(off.back() + alg.between(v, w).size());
  return off;
}

// Module map between projective sums given by an algebra matrix.
template <class F>
ModuleMap<F> module_map_of(const Algebra<F>& alg, const AlgMatrix<F>& d, const std::vector<int>& src, const std::vector<int>& dst) {
  if (d.rows() != dst.size() || d.cols() != src.size()) throw DimensionMismatch("algebra matrix does not match the summands");
  ModuleMap<F> out;
  for (int w = 0; w < alg.vertex_count(); ++w) {
    auto so = projective_offsets(alg, src, w);
    auto to = projective_offsets(alg, dst, w);
    Matrix<F> m(alg.field(), to.back(), so.back());
    for (std::size_t r = 0; r < src.size(); ++r)
      for (int u : alg.between(src[r], w))
        for (std::size_t s = 0; s < dst.size(); ++s) {
          const auto& p = d(s, r);
          if (p.is_zero()) continue;
          for (const auto& [pb, pc] : p.terms)
            for (const auto& [k, c] : alg.product(pb, u))
              m(to[s] + static_cast<std::size_t>(alg.position(k)), so[r] + static_cast<std::size_t>(alg.position(u))) += pc * c;
        }
    out.comps.push_back(std::move(m));
  }
  return out;
}

}  // namespace silt
