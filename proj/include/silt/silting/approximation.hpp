#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "silt/complexes/decompose.hpp"

namespace silt {

enum class Direction { Left, Right };

inline const char* direction_name(Direction d) { return d == Direction::Left ? "left" : "right"; }

// Degree-0 homotopy classes X -> Y with representatives and coordinates.
template <class F>
struct HomBasis {
  ProjComplex<F> source, target;
  HomSpace<F> space;
  std::vector<ChainMap<F>> maps;
  HomCoordinates<F> coords;

  HomBasis(const ProjComplex<F>& x, const ProjComplex<F>& y)
      : source(x), target(y), space(homotopy_hom(x, y, 0)), maps(hom_basis_maps(x, y, space)),
        coords(x.algebra().field(), space) {}

  [[nodiscard]] std::size_t dim() const { return maps.size(); }

  // Coordinates of the class of a chain map X -> Y.
  [[nodiscard]] Vec<F> class_of(const ChainMap<F>& g) const {
    auto c = coords.of(cochain_of(source, target, g));
    if (!c) throw std::logic_error("chain map is not a cycle of the Hom complex");
    return *c;
  }
};

template <class F>
struct Approximation {
  Direction direction = Direction::Left;
  ProjComplex<F> source;
  // target = sum of D[index[i]] over i, in this order.
  std::vector<std::size_t> index;
  ProjComplex<F> target;
  // X -> target for left approximations, target -> X for right ones.
  ChainMap<F> map;
  // Minimized cone (left) or co-cone (right) of the map.
  ProjComplex<F> cone;
  bool minimal_certified = false;
};

namespace detail {

template <class F>
ChainMap<F> stack_left(const ProjComplex<F>& x, const ProjComplex<F>& t, const std::vector<const ChainMap<F>*>& parts,
                       const std::vector<const ProjComplex<F>*>& targets) {
  ChainMap<F> f{0, x.lo(), {}};
  for (int k = x.lo(); k <= x.hi(); ++k) {
    AlgMatrix<F> c(t.term(k).size(), x.term(k).size());
    std::size_t row = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto blk = parts[i]->comp(k, x, *targets[i]);
      c.set_block(row, 0, blk);
      row += blk.rows();
    }
    f.comps.push_back(std::move(c));
  }
  return f;
}

template <class F>
ChainMap<F> stack_right(const ProjComplex<F>& x, const ProjComplex<F>& t, const std::vector<const ChainMap<F>*>& parts,
                        const std::vector<const ProjComplex<F>*>& sources) {
  ChainMap<F> f{0, t.lo(), {}};
  for (int k = t.lo(); k <= t.hi(); ++k) {
    AlgMatrix<F> c(x.term(k).size(), t.term(k).size());
    std::size_t col = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto blk = parts[i]->comp(k, *sources[i], x);
      c.set_block(0, col, blk);
      col += blk.cols();
    }
    f.comps.push_back(std::move(c));
  }
  return f;
}

}  // namespace detail

// Left f: X -> T is minimal iff the left ideal {h in End T : h f ~ 0} is
// nilpotent (dually for right f: T -> X). For minimal T the ideal is
// nilpotent iff its images in the top matrices generate a nilpotent set.
template <class F>
bool certify_minimal(const Approximation<F>& ap) {
  const ProjComplex<F>& t = ap.target;
  if (t.is_zero()) return true;
  if (!is_minimal(t)) return false;
  const F& f = t.algebra().field();
  const bool left = ap.direction == Direction::Left;
  HomBasis<F> end(t, t);
  HomBasis<F> across = left ? HomBasis<F>(ap.source, t) : HomBasis<F>(t, ap.source);
  if (end.dim() == 0) return true;

  Matrix<F> m(f, across.dim(), end.dim());
  for (std::size_t j = 0; j < end.dim(); ++j) {
    const ChainMap<F>& h = end.maps[j];
    auto c = left ? across.class_of(compose(h, ap.map, ap.source, t, t))
                  : across.class_of(compose(ap.map, h, t, t, ap.source));
    for (std::size_t i = 0; i < across.dim(); ++i) m(i, j) = c[i];
  }
  std::vector<Matrix<F>> gens;
  for (const auto& c : kernel_basis(m)) gens.push_back(top_matrix(t, linear_combination(t, end.maps, c)));
  if (gens.empty()) return true;

  const std::size_t n = t.summand_count();
  std::vector<Matrix<F>> power = gens;
  for (std::size_t step = 0; step <= n; ++step) {
    SpanBuilder<F> span(f, n * n);
    std::vector<Matrix<F>> next;
    for (const auto& p : power)
      for (const auto& g : gens) {
        auto q = p * g;
        if (span.add(q.flatten())) next.push_back(std::move(q));
      }
    if (next.empty()) return true;
    power = std::move(next);
  }
  return false;
}

// Minimal left (X -> add D) or right (add D -> X) approximation. The
// universal approximation built from Hom bases is pruned one component at a
// time: a component is dropped while it factors through the remaining ones.
// The entries of D are assumed indecomposable, pairwise non-isomorphic and
// with endomorphism rings that are local with residue field the ground field.
template <class F>
Approximation<F> minimal_approximation(const ProjComplex<F>& x, const std::vector<ProjComplex<F>>& d, Direction dir) {
  const F& f = x.algebra().field();
  Approximation<F> out;
  out.direction = dir;
  out.source = x;
  const bool left = dir == Direction::Left;

  // Hom(X, D_j) (left) or Hom(D_j, X) (right).
  std::vector<HomBasis<F>> to_d;
  for (const auto& dj : d) to_d.push_back(left ? HomBasis<F>(x, dj) : HomBasis<F>(dj, x));
  struct Component {
    std::size_t j, b;
  };
  std::vector<Component> comps;
  for (std::size_t j = 0; j < d.size(); ++j)
    for (std::size_t b = 0; b < to_d[j].dim(); ++b) comps.push_back({j, b});

  // Classes of phi o h_i (left) or h_i o phi (right) for phi in Hom(D_{j(i)}, D_l)
  // (resp. Hom(D_l, D_{j(i)})), indexed by [i][l].
  std::map<std::pair<std::size_t, std::size_t>, HomBasis<F>> between;
  auto basis_between = [&](std::size_t p, std::size_t q) -> const HomBasis<F>& {
    auto it = between.find({p, q});
    if (it == between.end()) it = between.emplace(std::make_pair(p, q), HomBasis<F>(d[p], d[q])).first;
    return it->second;
  };
  std::vector<std::vector<std::vector<Vec<F>>>> through(comps.size(), std::vector<std::vector<Vec<F>>>(d.size()));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& [j, b] = comps[i];
    const ChainMap<F>& h = to_d[j].maps[b];
    for (std::size_t l = 0; l < d.size(); ++l) {
      if (to_d[l].dim() == 0) continue;
      if (left) {
        const auto& phis = basis_between(j, l);
        for (const auto& phi : phis.maps) through[i][l].push_back(to_d[l].class_of(compose(phi, h, x, d[j], d[l])));
      } else {
        const auto& phis = basis_between(l, j);
        for (const auto& phi : phis.maps) through[i][l].push_back(to_d[l].class_of(compose(h, phi, d[l], d[j], x)));
      }
    }
  }

  std::vector<bool> alive(comps.size(), true);
  for (std::size_t i = comps.size(); i-- > 0;) {
    const std::size_t j = comps[i].j;
    SpanBuilder<F> span(f, to_d[j].dim());
    for (std::size_t q = 0; q < comps.size(); ++q)
      if (q != i && alive[q])
        for (const auto& v : through[q][j]) span.add(v);
    Vec<F> self(to_d[j].dim(), f.zero());
    self[comps[i].b] = f.one();
    if (span.contains(self)) alive[i] = false;
  }

  std::vector<const ChainMap<F>*> parts;
  std::vector<const ProjComplex<F>*> others;
  std::vector<ProjComplex<F>> pieces;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!alive[i]) continue;
    out.index.push_back(comps[i].j);
    parts.push_back(&to_d[comps[i].j].maps[comps[i].b]);
    others.push_back(&d[comps[i].j]);
    pieces.push_back(d[comps[i].j]);
  }
  out.target = direct_sum(x.algebra_ptr(), pieces);
  if (left) {
    out.map = detail::stack_left(x, out.target, parts, others);
    out.cone = minimize(cone(x, out.target, out.map));
  } else {
    out.map = detail::stack_right(x, out.target, parts, others);
    out.cone = minimize(shift(cone(out.target, x, out.map), -1));
  }
  out.minimal_certified = certify_minimal(out);
  return out;
}

}  // namespace silt
