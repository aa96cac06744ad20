#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "silt/modules/module.hpp"
#include "silt/modules/resolution.hpp"

namespace silt {

struct InvalidComplex : Error {
  using Error::Error;
};

// Bounded complex of projectives. Term k (for lo <= k <= hi) is a direct sum
// of e_v A, one entry of terms[k - lo] per summand; diffs[k - lo] is the
// differential from term k to term k + 1. Empty terms at either end are
// trimmed, so the zero complex has no terms.
template <class F>
class ProjComplex {
 public:
  ProjComplex() = default;
  explicit ProjComplex(AlgebraPtr<F> alg) : alg_(std::move(alg)) {}
  ProjComplex(AlgebraPtr<F> alg, int lo, std::vector<std::vector<int>> terms, std::vector<AlgMatrix<F>> diffs)
      : alg_(std::move(alg)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    if (terms_.empty() ? !diffs_.empty() : diffs_.size() + 1 != terms_.size())
      throw InvalidComplex("need one differential between consecutive terms");
    for (const auto& t : terms_)
      for (int v : t)
        if (v < 0 || v >= alg_->vertex_count()) throw IndexError("summand vertex out of range");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
      if (!entries_well_placed(*alg_, diffs_[i], terms_[i + 1], terms_[i]))
        throw InvalidComplex("differential in degree " + std::to_string(lo_ + static_cast<int>(i)) +
                             " has misplaced entries or the wrong shape");
      if (i + 1 < diffs_.size() && !mul(*alg_, diffs_[i + 1], diffs_[i]).is_zero())
        throw InvalidComplex("d o d is nonzero at degree " + std::to_string(lo_ + static_cast<int>(i)));
    }
    trim();
  }

  [[nodiscard]] const AlgebraPtr<F>& algebra_ptr() const { return alg_; }
  [[nodiscard]] const Algebra<F>& algebra() const { return *alg_; }
  [[nodiscard]] int lo() const { return lo_; }
  [[nodiscard]] int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::vector<std::vector<int>>& terms() const { return terms_; }
  [[nodiscard]] const std::vector<AlgMatrix<F>>& diffs() const { return diffs_; }

  [[nodiscard]] const std::vector<int>& term(int k) const {
    static const std::vector<int> none;
    return (k < lo_ || k > hi()) ? none : terms_[static_cast<std::size_t>(k - lo_)];
  }
  // Differential from degree k to k + 1 (possibly with an empty side).
  [[nodiscard]] AlgMatrix<F> diff(int k) const {
    if (k >= lo_ && k < hi()) return diffs_[static_cast<std::size_t>(k - lo_)];
    return AlgMatrix<F>(term(k + 1).size(), term(k).size());
  }
  [[nodiscard]] std::size_t summand_count() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n += t.size();
    return n;
  }

  friend bool operator==(const ProjComplex& a, const ProjComplex& b) {
    return a.lo_ == b.lo_ && a.terms_ == b.terms_ && a.diffs_ == b.diffs_;
  }

 private:
  void trim() {
    std::size_t front = 0;
    while (front < terms_.size() && terms_[front].empty()) ++front;
    if (front == terms_.size()) {
      terms_.clear();
      diffs_.clear();
      lo_ = 0;
      return;
    }
    std::size_t back = terms_.size();
    while (terms_[back - 1].empty()) --back;
    terms_ = std::vector<std::vector<int>>(terms_.begin() + static_cast<long>(front), terms_.begin() + static_cast<long>(back));
    diffs_ = std::vector<AlgMatrix<F>>(diffs_.begin() + static_cast<long>(front), diffs_.begin() + static_cast<long>(back - 1));
    lo_ += static_cast<int>(front);
  }

  AlgebraPtr<F> alg_;
  int lo_ = 0;
  std::vector<std::vector<int>> terms_;
  std::vector<AlgMatrix<F>> diffs_;
};

// Components f^k : X^k -> Y^{k + shift}, indexed by the degrees of X.
template <class F>
struct ChainMap {
  int shift = 0;
  int lo = 0;
  std::vector<AlgMatrix<F>> comps;

  [[nodiscard]] AlgMatrix<F> comp(int k, const ProjComplex<F>& x, const ProjComplex<F>& y) const {
    if (k >= lo && k < lo + static_cast<int>(comps.size())) return comps[static_cast<std::size_t>(k - lo)];
    return AlgMatrix<F>(y.term(k + shift).size(), x.term(k).size());
  }
};

template <class F>
ChainMap<F> zero_chain_map(const ProjComplex<F>& x, const ProjComplex<F>& y, int shift = 0) {
  ChainMap<F> f{shift, x.lo(), {}};
  for (int k = x.lo(); k <= x.hi(); ++k) f.comps.emplace_back(y.term(k + shift).size(), x.term(k).size());
  return f;
}

template <class F>
ChainMap<F> identity_chain_map(const ProjComplex<F>& x) {
  ChainMap<F> f{0, x.lo(), {}};
  for (int k = x.lo(); k <= x.hi(); ++k) f.comps.push_back(identity_alg_matrix(x.algebra(), x.term(k)));
  return f;
}

// (-1)^shift d_Y f^k = f^{k+1} d_X for every k.
template <class F>
bool is_chain_map(const ProjComplex<F>& x, const ProjComplex<F>& y, const ChainMap<F>& f) {
  const Algebra<F>& a = x.algebra();
  if (f.lo != x.lo() && !x.is_zero()) return false;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    auto c = f.comp(k, x, y);
    if (c.rows() != y.term(k + f.shift).size() || c.cols() != x.term(k).size()) return false;
    if (!entries_well_placed(a, c, y.term(k + f.shift), x.term(k))) return false;
  }
  const typename F::Elem sign = (f.shift % 2 == 0) ? a.field().one() : -a.field().one();
  for (int k = x.lo() - 1; k <= x.hi(); ++k) {
    auto lhs = sign * mul(a, y.diff(k + f.shift), f.comp(k, x, y));
    auto rhs = mul(a, f.comp(k + 1, x, y), x.diff(k));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

template <class F>
ChainMap<F> compose(const ChainMap<F>& g, const ChainMap<F>& f, const ProjComplex<F>& x, const ProjComplex<F>& y,
                    const ProjComplex<F>& z) {
  ChainMap<F> h{f.shift + g.shift, x.lo(), {}};
  for (int k = x.lo(); k <= x.hi(); ++k) h.comps.push_back(mul(x.algebra(), g.comp(k + f.shift, y, z), f.comp(k, x, y)));
  return h;
}

template <class F>
ProjComplex<F> zero_complex(const AlgebraPtr<F>& alg) {
  return ProjComplex<F>(alg);
}

template <class F>
ProjComplex<F> stalk(const AlgebraPtr<F>& alg, const std::vector<int>& vertices, int degree) {
  return ProjComplex<F>(alg, degree, {vertices}, {});
}

// A_A as a stalk complex: e_1 A + ... + e_n A.
template <class F>
ProjComplex<F> regular_stalk(const AlgebraPtr<F>& alg, int degree = 0) {
  std::vector<int> all(static_cast<std::size_t>(alg->vertex_count()));
  for (int v = 0; v < alg->vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  return stalk(alg, all, degree);
}

// (X[s])^k = X^{k+s} with differential (-1)^s d.
template <class F>
ProjComplex<F> shift(const ProjComplex<F>& x, int s) {
  if (x.is_zero()) return x;
  std::vector<AlgMatrix<F>> d = x.diffs();
  if (s % 2 != 0)
    for (auto& m : d) m = -m;
  return ProjComplex<F>(x.algebra_ptr(), x.lo() - s, x.terms(), std::move(d));
}

template <class F>
ProjComplex<F> direct_sum(const ProjComplex<F>& x, const ProjComplex<F>& y) {
  require_same_algebra(x.algebra_ptr(), y.algebra_ptr());
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
  std::vector<std::vector<int>> terms;
  std::vector<AlgMatrix<F>> diffs;
  for (int k = lo; k <= hi; ++k) {
    auto t = x.term(k);
    t.insert(t.end(), y.term(k).begin(), y.term(k).end());
    terms.push_back(std::move(t));
    if (k < hi) {
      AlgMatrix<F> d(x.term(k + 1).size() + y.term(k + 1).size(), x.term(k).size() + y.term(k).size());
      d.set_block(0, 0, x.diff(k));
      d.set_block(x.term(k + 1).size(), x.term(k).size(), y.diff(k));
      diffs.push_back(std::move(d));
    }
  }
  return ProjComplex<F>(x.algebra_ptr(), lo, std::move(terms), std::move(diffs));
}

template <class F>
ProjComplex<F> direct_sum(const AlgebraPtr<F>& alg, const std::vector<ProjComplex<F>>& parts) {
  ProjComplex<F> acc(alg);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

// Term k is X^{k+1} + Y^k with differential [[-d_X, 0], [f, d_Y]].
template <class F>
ProjComplex<F> cone(const ProjComplex<F>& x, const ProjComplex<F>& y, const ChainMap<F>& f) {
  require_same_algebra(x.algebra_ptr(), y.algebra_ptr());
  if (f.shift != 0 || !is_chain_map(x, y, f)) throw InvalidComplex("cone needs a degree-0 chain map");
  if (x.is_zero()) return y;
  const int lo = y.is_zero() ? x.lo() - 1 : std::min(x.lo() - 1, y.lo());
  const int hi = y.is_zero() ? x.hi() - 1 : std::max(x.hi() - 1, y.hi());
  std::vector<std::vector<int>> terms;
  std::vector<AlgMatrix<F>> diffs;
  for (int k = lo; k <= hi; ++k) {
    auto t = x.term(k + 1);
    t.insert(t.end(), y.term(k).begin(), y.term(k).end());
    terms.push_back(std::move(t));
    if (k < hi) {
      const std::size_t xr = x.term(k + 2).size(), xc = x.term(k + 1).size();
      AlgMatrix<F> d(xr + y.term(k + 1).size(), xc + y.term(k).size());
      d.set_block(0, 0, -x.diff(k + 1));
      d.set_block(xr, 0, f.comp(k + 1, x, y));
      d.set_block(xr, xc, y.diff(k));
      diffs.push_back(std::move(d));
    }
  }
  return ProjComplex<F>(x.algebra_ptr(), lo, std::move(terms), std::move(diffs));
}

// Inverse of an element of e_v A e_v with nonzero top coefficient.
template <class F>
AlgElem<F> local_inverse(const Algebra<F>& a, const AlgElem<F>& p, int v) {
  const auto lambda = a.top_coeff(p, v);
  if (is_zero(lambda)) throw std::domain_error("element is not invertible in e_v A e_v");
  const auto inv = lambda.inverse();
  AlgElem<F> q = -(inv * (p - lambda * a.idempotent(v)));
  AlgElem<F> term = a.idempotent(v), sum;
  while (!term.is_zero()) {
    sum += term;
    term = a.mul(term, q);
  }
  return inv * sum;
}

// Gaussian cancellation of invertible differential entries, scanning degree,
// then row, then column.
template <class F>
ProjComplex<F> minimize(const ProjComplex<F>& x) {
  if (x.is_zero()) return x;
  const Algebra<F>& a = x.algebra();
  auto terms = x.terms();
  auto diffs = x.diffs();
  auto drop = [](const std::vector<int>& v, std::size_t i) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) keep.push_back(j);
    return keep;
  };
  auto all = [](std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = j;
    return v;
  };
  for (std::size_t i = 0; i < diffs.size();) {
    bool found = false;
    auto& d = diffs[i];
    for (std::size_t s = 0; s < d.rows() && !found; ++s)
      for (std::size_t t = 0; t < d.cols() && !found; ++t) {
        const int v = terms[i][t];
        if (terms[i + 1][s] != v || is_zero(a.top_coeff(d(s, t), v))) continue;
        found = true;
        const AlgElem<F> inv = local_inverse(a, d(s, t), v);
        auto rows = drop(terms[i + 1], s), cols = drop(terms[i], t);
        AlgMatrix<F> nd(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const auto& gamma = d(rows[r], t);
          AlgElem<F> g_inv = gamma.is_zero() ? AlgElem<F>{} : a.mul(gamma, inv);
          for (std::size_t c = 0; c < cols.size(); ++c) {
            nd(r, c) = d(rows[r], cols[c]);
            if (!g_inv.is_zero() && !d(s, cols[c]).is_zero()) nd(r, c) -= a.mul(g_inv, d(s, cols[c]));
          }
        }
        if (i > 0) diffs[i - 1] = diffs[i - 1].select(cols, all(terms[i - 1].size()));
        if (i + 1 < diffs.size()) diffs[i + 1] = diffs[i + 1].select(all(terms[i + 2].size()), rows);
        diffs[i] = std::move(nd);
        terms[i].erase(terms[i].begin() + static_cast<long>(t));
        terms[i + 1].erase(terms[i + 1].begin() + static_cast<long>(s));
      }
    if (!found) ++i;
  }
  return ProjComplex<F>(x.algebra_ptr(), x.lo(), std::move(terms), std::move(diffs));
}

template <class F>
bool is_minimal(const ProjComplex<F>& x) {
  const Algebra<F>& a = x.algebra();
  for (std::size_t i = 0; i < x.diffs().size(); ++i) {
    const auto& d = x.diffs()[i];
    for (std::size_t s = 0; s < d.rows(); ++s)
      for (std::size_t t = 0; t < d.cols(); ++t)
        for (const auto& [b, c] : d(s, t).terms)
          if (a.basis(b).length == 0) return false;
  }
  return true;
}

// Relabels e_i A as e_{sigma(i)} A and applies sigma to every entry.
template <class F>
ProjComplex<F> twist_complex(const ProjComplex<F>& x, const AlgebraAutomorphism<F>& sigma) {
  require_same_algebra(x.algebra_ptr(), sigma.algebra());
  auto terms = x.terms();
  for (auto& t : terms)
    for (auto& v : t) v = sigma.vertex_image(v);
  auto diffs = x.diffs();
  for (auto& d : diffs)
    for (std::size_t s = 0; s < d.rows(); ++s)
      for (std::size_t t = 0; t < d.cols(); ++t) d(s, t) = sigma.apply(d(s, t));
  return ProjComplex<F>(x.algebra_ptr(), x.lo(), std::move(terms), std::move(diffs));
}

template <class F>
ChainMap<F> twist_chain_map(const ChainMap<F>& f, const AlgebraAutomorphism<F>& sigma) {
  ChainMap<F> g = f;
  for (auto& c : g.comps)
    for (std::size_t s = 0; s < c.rows(); ++s)
      for (std::size_t t = 0; t < c.cols(); ++t) c(s, t) = sigma.apply(c(s, t));
  return g;
}

// Class in K_0: alternating count of each e_v A.
template <class F>
std::vector<long> k0_class(const ProjComplex<F>& x) {
  std::vector<long> out(static_cast<std::size_t>(x.algebra().vertex_count()), 0);
  for (int k = x.lo(); k <= x.hi(); ++k)
    for (int v : x.term(k)) out[static_cast<std::size_t>(v)] += (k % 2 == 0) ? 1 : -1;
  return out;
}

// Alternating sum of the dimension vectors of the terms.
template <class F>
std::vector<long> euler_dims(const ProjComplex<F>& x) {
  const Algebra<F>& a = x.algebra();
  std::vector<long> out(static_cast<std::size_t>(a.vertex_count()), 0);
  for (int k = x.lo(); k <= x.hi(); ++k)
    for (int v : x.term(k))
      for (int w = 0; w < a.vertex_count(); ++w)
        out[static_cast<std::size_t>(w)] += ((k % 2 == 0) ? 1 : -1) * static_cast<long>(a.between(v, w).size());
  return out;
}

template <class F>
ProjComplex<F> resolution_to_complex(const AlgebraPtr<F>& alg, const Resolution<F>& r) {
  if (r.terms.empty()) return ProjComplex<F>(alg);
  const int len = r.length();
  std::vector<std::vector<int>> terms;
  std::vector<AlgMatrix<F>> diffs;
  for (int i = 0; i <= len; ++i) terms.push_back(r.terms[static_cast<std::size_t>(len - i)]);
  for (int i = 0; i < len; ++i) diffs.push_back(r.diffs[static_cast<std::size_t>(len - i - 1)]);
  return ProjComplex<F>(alg, -len, std::move(terms), std::move(diffs));
}

// Bounded complex of modules; diffs[k - lo] maps term k to term k + 1.
template <class F>
struct ModuleComplex {
  AlgebraPtr<F> alg;
  int lo = 0;
  std::vector<Module<F>> terms;
  std::vector<ModuleMap<F>> diffs;

  [[nodiscard]] int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  [[nodiscard]] bool in_range(int k) const { return k >= lo && k <= hi(); }
  [[nodiscard]] Module<F> term(int k) const { return in_range(k) ? terms[static_cast<std::size_t>(k - lo)] : Module<F>::zero(alg); }
  [[nodiscard]] int term_dim(int k, int v) const { return in_range(k) ? terms[static_cast<std::size_t>(k - lo)].dim(v) : 0; }
  [[nodiscard]] Matrix<F> diff_at(int k, int v) const {
    if (k >= lo && k < hi()) return diffs[static_cast<std::size_t>(k - lo)].comps[static_cast<std::size_t>(v)];
    return Matrix<F>(alg->field(), static_cast<std::size_t>(term_dim(k + 1, v)), static_cast<std::size_t>(term_dim(k, v)));
  }

  [[nodiscard]] bool is_valid() const {
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      if (!is_module_map(terms[i], terms[i + 1], diffs[i])) return false;
      if (i + 1 < diffs.size() && !compose(diffs[i + 1], diffs[i]).is_zero()) return false;
    }
    return true;
  }
};

template <class F>
ModuleComplex<F> module_stalk(const Module<F>& m, int degree) {
  return ModuleComplex<F>{m.algebra_ptr(), degree, {m}, {}};
}

template <class F>
ModuleComplex<F> to_module_complex(const ProjComplex<F>& x) {
  ModuleComplex<F> out{x.algebra_ptr(), x.lo(), {}, {}};
  for (int k = x.lo(); k <= x.hi(); ++k) {
    out.terms.push_back(projective_sum(x.algebra_ptr(), x.term(k)));
    if (k < x.hi()) out.diffs.push_back(module_map_of(x.algebra(), x.diff(k), x.term(k), x.term(k + 1)));
  }
  return out;
}

// Entry p in e_b A e_a becomes the map D(A e_a) -> D(A e_b), phi -> phi(- p).
template <class F>
ModuleMap<F> nakayama_map(const Algebra<F>& a, const AlgMatrix<F>& d, const std::vector<int>& src, const std::vector<int>& dst) {
  ModuleMap<F> out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    std::vector<std::size_t> so{0}, to{0};
    for (int s : src) so.push_back(so.back() + a.between(v, s).size());
    for (int t : dst) to.push_back(to.back() + a.between(v, t).size());
    Matrix<F> m(a.field(), to.back(), so.back());
    for (std::size_t r = 0; r < src.size(); ++r)
      for (std::size_t s = 0; s < dst.size(); ++s) {
        const auto& p = d(s, r);
        if (p.is_zero()) continue;
        for (int w : a.between(v, dst[s])) {
          auto wp = a.mul(a.unit(w), p);
          for (const auto& [u, c] : wp.terms)
            m(to[s] + static_cast<std::size_t>(a.position(w)), so[r] + static_cast<std::size_t>(a.position(u))) += c;
        }
      }
    out.comps.push_back(std::move(m));
  }
  return out;
}

template <class F>
ModuleComplex<F> nakayama(const ProjComplex<F>& x) {
  const auto& alg = x.algebra_ptr();
  ModuleComplex<F> out{alg, x.lo(), {}, {}};
  for (int k = x.lo(); k <= x.hi(); ++k) {
    std::vector<Module<F>> parts;
    for (int v : x.term(k)) parts.push_back(injective(alg, v));
    out.terms.push_back(direct_sum(alg, parts));
    if (k < x.hi()) out.diffs.push_back(nakayama_map(x.algebra(), x.diff(k), x.term(k), x.term(k + 1)));
  }
  return out;
}

template <class F>
Module<F> homology(const ModuleComplex<F>& x, int j) {
  if (!x.in_range(j)) return Module<F>::zero(x.alg);
  const Module<F> m = x.term(j);
  Subspaces<F> ker, img;
  for (int v = 0; v < x.alg->vertex_count(); ++v) {
    const auto dv = static_cast<std::size_t>(m.dim(v));
    ker.push_back(Matrix<F>::from_columns(x.alg->field(), dv, kernel_basis(x.diff_at(j, v))));
    img.push_back(independent_columns(x.diff_at(j - 1, v)));
  }
  return subquotient(m, img, ker);
}

template <class F>
Module<F> homology(const ProjComplex<F>& x, int j) {
  return homology(to_module_complex(x), j);
}

}  // namespace silt
