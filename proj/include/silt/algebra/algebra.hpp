#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "silt/algebra/quiver.hpp"
#include "silt/linalg/matrix.hpp"

namespace silt {

template <class F>
using Sparse = std::vector<std::pair<int, typename F::Elem>>;

// Element of a finite-dimensional algebra: sorted (basis index, coefficient)
// pairs with nonzero coefficients.
template <class F>
struct AlgElem {
  using K = typename F::Elem;
  Sparse<F> terms;

  AlgElem() = default;
  explicit AlgElem(Sparse<F> t) : terms(std::move(t)) { normalize(); }

  [[nodiscard]] bool is_zero() const { return terms.empty(); }
  [[nodiscard]] K coeff(int b, const F& f) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), b, [](const auto& t, int v) { return t.first < v; });
    return (it != terms.end() && it->first == b) ? it->second : f.zero();
  }

  void normalize() {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Sparse<F> out;
    for (auto& t : terms) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(t);
    }
    std::erase_if(out, [](const auto& t) { return silt::is_zero(t.second); });
    terms = std::move(out);
  }

  friend AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    AlgElem r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
        r.terms.push_back(a.terms[i++]);
      } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
        r.terms.push_back(b.terms[j++]);
      } else {
        auto s = a.terms[i].second + b.terms[j].second;
        if (!silt::is_zero(s)) r.terms.emplace_back(a.terms[i].first, s);
        ++i;
        ++j;
      }
    }
    return r;
  }
  friend AlgElem operator-(const AlgElem& a) {
    AlgElem r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
  }
  friend AlgElem operator-(const AlgElem& a, const AlgElem& b) { return a + (-b); }
  friend AlgElem operator*(const K& s, const AlgElem& a) {
    if (silt::is_zero(s)) return {};
    AlgElem r = a;
    for (auto& t : r.terms) t.second = s * t.second;
    return r;
  }
  AlgElem& operator+=(const AlgElem& o) { return *this = *this + o; }
  AlgElem& operator-=(const AlgElem& o) { return *this = *this - o; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms == b.terms; }
};

struct BasisInfo {
  int source = 0;
  int target = 0;
  int length = 0;        // path length, or grading label for non-path elements
  std::vector<int> word; // arrow ids, empty for idempotents and non-path elements
  bool is_path = true;
  std::string name;
};

// Finite-dimensional basic algebra with a basis adapted to the vertex
// idempotents: basis elements 0..n-1 are e_1..e_n and every other basis
// element b lies in e_{source(b)} A e_{target(b)} and in the radical.
template <class F>
class Algebra {
 public:
  using K = typename F::Elem;
  using Elem = AlgElem<F>;

  Algebra(F field, Quiver quiver, std::vector<BasisInfo> basis, std::vector<Sparse<F>> table, std::string label,
          std::vector<Relation<F>> relations = {})
      : field_(std::move(field)),
        quiver_(std::move(quiver)),
        basis_(std::move(basis)),
        table_(std::move(table)),
        label_(std::move(label)),
        relations_(std::move(relations)) {
    const int n = quiver_.vertex_count();
    const int d = dim();
    if (static_cast<int>(table_.size()) != d * d) throw DimensionMismatch("structure table has the wrong size");
    between_.assign(static_cast<std::size_t>(n * n), {});
    position_.assign(static_cast<std::size_t>(d), 0);
    for (int b = 0; b < d; ++b) {
      auto& cell = between_[static_cast<std::size_t>(basis_[b].source * n + basis_[b].target)];
      position_[static_cast<std::size_t>(b)] = static_cast<int>(cell.size());
      cell.push_back(b);
    }
    for (int v = 0; v < n; ++v)
      if (basis_[static_cast<std::size_t>(v)].source != v || basis_[static_cast<std::size_t>(v)].target != v ||
          basis_[static_cast<std::size_t>(v)].length != 0)
        throw NonAdmissible("basis must start with the vertex idempotents");
    arrow_basis_.assign(static_cast<std::size_t>(quiver_.arrow_count()), -1);
    for (int b = 0; b < d; ++b)
      if (basis_[b].is_path && basis_[b].word.size() == 1) arrow_basis_[static_cast<std::size_t>(basis_[b].word[0])] = b;
    compute_generators();
    for (const auto& b : basis_) max_length_ = std::max(max_length_, b.length);
  }

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] int vertex_count() const { return quiver_.vertex_count(); }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const BasisInfo& basis(int b) const { return basis_.at(static_cast<std::size_t>(b)); }
  [[nodiscard]] const std::vector<BasisInfo>& basis() const { return basis_; }
  [[nodiscard]] int max_length() const { return max_length_; }
  [[nodiscard]] const std::vector<Relation<F>>& relations() const { return relations_; }

  // Basis of e_from A e_to.
  [[nodiscard]] const std::vector<int>& between(int from, int to) const {
    return between_[static_cast<std::size_t>(from * vertex_count() + to)];
  }
  [[nodiscard]] int position(int b) const { return position_[static_cast<std::size_t>(b)]; }
  [[nodiscard]] const Sparse<F>& product(int b, int c) const {
    return table_[static_cast<std::size_t>(b * dim() + c)];
  }
  [[nodiscard]] const std::vector<int>& generators() const { return generators_; }
  [[nodiscard]] int arrow_basis(int arrow) const { return arrow_basis_.at(static_cast<std::size_t>(arrow)); }
  [[nodiscard]] bool is_path_algebra() const {
    return std::all_of(basis_.begin(), basis_.end(), [](const BasisInfo& b) { return b.is_path; });
  }

  [[nodiscard]] Elem unit(int b) const { return Elem(Sparse<F>{{b, field_.one()}}); }
  [[nodiscard]] Elem idempotent(int v) const { return unit(v); }
  [[nodiscard]] Elem one() const {
    Sparse<F> t;
    for (int v = 0; v < vertex_count(); ++v) t.emplace_back(v, field_.one());
    return Elem(std::move(t));
  }

  [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    Sparse<F> acc;
    for (const auto& [i, x] : a.terms)
      for (const auto& [j, y] : b.terms) {
        const auto& p = product(i, j);
        if (p.empty()) continue;
        K xy = x * y;
        for (const auto& [k, z] : p) acc.emplace_back(k, xy * z);
      }
    return Elem(std::move(acc));
  }

  // Product of the arrows along a path, reduced to normal form.
  [[nodiscard]] Elem path_element(const Path& p) const {
    if (!is_path_algebra()) throw NonAdmissible("path evaluation needs a path-algebra presentation");
    static_cast<void>(p.end(quiver_));
    Elem cur = idempotent(p.start);
    for (int a : p.arrows) cur = mul(cur, unit(arrow_basis(a)));
    return cur;
  }

  // Coefficient of e_v, the "top" part of an element of e_v A e_v.
  [[nodiscard]] K top_coeff(const Elem& a, int v) const { return a.coeff(v, field_); }

  [[nodiscard]] std::string qualified_name(int b) const {
    const auto& info = basis(b);
    if (b < vertex_count()) return info.name;
    return std::to_string(info.source + 1) + ":" + info.name;
  }
  [[nodiscard]] std::string str(const Elem& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : a.terms) {
      if (!first) os << " + ";
      first = false;
      if (!(c == field_.one())) os << field_.format(c) << "*";
      os << basis(b).name;
    }
    return os.str();
  }

  // Exhaustive check of (bc)d = b(cd) on basis triples.
  [[nodiscard]] bool is_associative() const {
    for (int b = 0; b < dim(); ++b)
      for (int c = 0; c < dim(); ++c)
        for (int d = 0; d < dim(); ++d)
          if (mul(mul(unit(b), unit(c)), unit(d)) != mul(unit(b), mul(unit(c), unit(d)))) return false;
    return true;
  }

 private:
  void compute_generators() {
    const int d = dim();
    SpanBuilder<F> span(field_, static_cast<std::size_t>(d));
    for (int b = vertex_count(); b < d; ++b)
      for (int c = vertex_count(); c < d; ++c) {
        const auto& p = product(b, c);
        if (p.empty()) continue;
        Vec<F> v(static_cast<std::size_t>(d), field_.zero());
        for (const auto& [k, x] : p) v[static_cast<std::size_t>(k)] = x;
        span.add(v);
      }
    for (int b = vertex_count(); b < d; ++b) {
      Vec<F> v(static_cast<std::size_t>(d), field_.zero());
      v[static_cast<std::size_t>(b)] = field_.one();
      if (span.add(v)) generators_.push_back(b);
    }
  }

  F field_;
  Quiver quiver_;
  std::vector<BasisInfo> basis_;
  std::vector<Sparse<F>> table_;
  std::string label_;
  std::vector<Relation<F>> relations_;
  std::vector<std::vector<int>> between_;
  std::vector<int> position_;
  std::vector<int> generators_;
  std::vector<int> arrow_basis_;
  int max_length_ = 0;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

template <class F>
void require_same_algebra(const AlgebraPtr<F>& a, const AlgebraPtr<F>& b) {
  if (a.get() != b.get()) throw FieldMismatch("objects over different algebras");
}

// Builds kQ/I with a path basis, one path length at a time. Relations must be
// linear combinations of parallel paths of a common length >= 2.
template <class F>
AlgebraPtr<F> build_algebra(const F& field, const Quiver& q, const std::vector<Relation<F>>& relations,
                            int length_cap = -1, std::string label = {}) {
  using K = typename F::Elem;
  const int n = q.vertex_count();
  const int arrows = q.arrow_count();
  if (n <= 0) throw NonAdmissible("empty quiver");
  if (length_cap < 0) length_cap = std::max(2, 2 * n * std::max(1, q.max_out_degree()));

  struct RelInfo {
    int start, end, length;
  };
  std::vector<RelInfo> rinfo;
  for (const auto& r : relations) {
    if (r.terms.empty()) throw NonAdmissible("empty relation");
    RelInfo info{r.terms[0].second.start, r.terms[0].second.end(q), static_cast<int>(r.terms[0].second.length())};
    for (const auto& [c, p] : r.terms) {
      field.check(c);
      if (p.start != info.start || p.end(q) != info.end)
        throw NonAdmissible("relation mixes non-parallel paths");
      if (static_cast<int>(p.length()) != info.length)
        throw NonAdmissible("relation is not homogeneous in path length");
    }
    if (info.length < 2) throw NonAdmissible("relation of length < 2 is not admissible");
    rinfo.push_back(info);
  }

  std::vector<BasisInfo> basis;
  std::vector<std::vector<int>> layers;
  // next[b * arrows + a] = normal form of b * a
  std::vector<Sparse<F>> next;
  auto grow_next = [&] { next.resize(basis.size() * static_cast<std::size_t>(arrows)); };

  layers.emplace_back();
  for (int v = 0; v < n; ++v) {
    basis.push_back({v, v, 0, {}, true, "e" + std::to_string(v + 1)});
    layers[0].push_back(v);
  }
  layers.emplace_back();
  for (int a = 0; a < arrows; ++a) {
    const auto& ar = q.arrow(a);
    layers[1].push_back(static_cast<int>(basis.size()));
    basis.push_back({ar.source, ar.target, 1, {a}, true, ar.label});
  }
  grow_next();
  for (int a = 0; a < arrows; ++a) {
    const int v = q.arrow(a).source;
    next[static_cast<std::size_t>(v * arrows + a)] = {{layers[1][static_cast<std::size_t>(a)], field.one()}};
  }

  auto fold = [&](Sparse<F> cur, const std::vector<int>& word) {
    for (int a : word) {
      Sparse<F> acc;
      for (const auto& [b, c] : cur)
        for (const auto& [k, x] : next[static_cast<std::size_t>(b * arrows + a)]) acc.emplace_back(k, c * x);
      cur = AlgElem<F>(std::move(acc)).terms;
    }
    return cur;
  };

  for (int len = 2;; ++len) {
    const auto& prev = layers[static_cast<std::size_t>(len - 1)];
    if (prev.empty()) break;
    if (len - 1 >= length_cap)
      throw NotFiniteDimensional("paths of length " + std::to_string(len - 1) +
                                 " survive the relations; the algebra looks infinite-dimensional");
    std::vector<std::pair<int, int>> cands;
    std::map<std::pair<int, int>, std::size_t> cand_index;
    for (int b : prev)
      for (int a : q.arrows_from(basis[static_cast<std::size_t>(b)].target)) {
        cand_index[{b, a}] = cands.size();
        cands.emplace_back(b, a);
      }
    std::vector<Vec<F>> rows;
    for (std::size_t ri = 0; ri < relations.size(); ++ri) {
      const auto& info = rinfo[ri];
      if (info.length > len) continue;
      for (int u : layers[static_cast<std::size_t>(len - info.length)]) {
        if (basis[static_cast<std::size_t>(u)].target != info.start) continue;
        Vec<F> row(cands.size(), field.zero());
        for (const auto& [coef, p] : relations[ri].terms) {
          std::vector<int> head(p.arrows.begin(), p.arrows.end() - 1);
          auto w = fold({{u, field.one()}}, head);
          const int last = p.arrows.back();
          for (const auto& [b, c] : w) row[cand_index.at({b, last})] += coef * c;
        }
        if (!is_zero_vec<F>(row)) rows.push_back(std::move(row));
      }
    }
    // Pivot on the latest candidates so that earlier words stay in the basis.
    const std::size_t m = cands.size();
    std::vector<std::size_t> pivot_of(m, static_cast<std::size_t>(-1));
    Matrix<F> red;
    if (!rows.empty()) {
      Matrix<F> rel(field, rows.size(), m);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) rel(i, m - 1 - j) = rows[i][j];
      auto e = rref(std::move(rel));
      red = std::move(e.reduced);
      for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_of[m - 1 - e.pivots[i]] = i;
    }
    layers.emplace_back();
    auto& layer = layers.back();
    std::vector<int> new_index(m, -1);
    for (std::size_t c = 0; c < m; ++c) {
      if (pivot_of[c] != static_cast<std::size_t>(-1)) continue;
      const auto [b, a] = cands[c];
      BasisInfo info = basis[static_cast<std::size_t>(b)];
      info.target = q.arrow(a).target;
      info.length = len;
      info.word.push_back(a);
      info.name += q.arrow(a).label;
      new_index[c] = static_cast<int>(basis.size());
      layer.push_back(new_index[c]);
      basis.push_back(std::move(info));
    }
    grow_next();
    for (std::size_t c = 0; c < m; ++c) {
      const auto [b, a] = cands[c];
      Sparse<F> nf;
      if (new_index[c] >= 0) {
        nf = {{new_index[c], field.one()}};
      } else {
        const std::size_t row = pivot_of[c];
        for (std::size_t f = 0; f < m; ++f) {
          if (new_index[f] < 0) continue;
          const K& x = red(row, m - 1 - f);
          if (!is_zero(x)) nf.emplace_back(new_index[f], -x);
        }
        nf = AlgElem<F>(std::move(nf)).terms;
      }
      next[static_cast<std::size_t>(b * arrows + a)] = std::move(nf);
    }
  }

  const int d = static_cast<int>(basis.size());
  std::vector<Sparse<F>> table(static_cast<std::size_t>(d * d));
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) {
      const auto& bi = basis[static_cast<std::size_t>(b)];
      const auto& ci = basis[static_cast<std::size_t>(c)];
      if (bi.target != ci.source) continue;
      table[static_cast<std::size_t>(b * d + c)] = fold({{b, field.one()}}, ci.word);
    }
  if (label.empty()) label = "kQ/I";
  return std::make_shared<const Algebra<F>>(field, q, std::move(basis), std::move(table), std::move(label), relations);
}

}  // namespace silt
