#pragma once

#include <string>
#include <vector>

#include "silt/algebra/trivial_extension.hpp"

namespace silt {

// Linear quiver 1 -> 2 -> ... -> n with a doubled arrow pair x, y at each step.
// Arrow ids: x_i = 2i, y_i = 2i + 1 (0-based step i).
inline Quiver doubled_linear_quiver(int n) {
  Quiver q(n);
  for (int i = 0; i + 1 < n; ++i) {
    q.add_arrow("x", i, i + 1);
    q.add_arrow("y", i, i + 1);
  }
  return q;
}

template <class F>
Relation<F> monomial_relation(const F& f, int start, std::vector<int> arrows) {
  return Relation<F>{{{f.one(), Path{start, std::move(arrows)}}}};
}

// The algebra A_n: doubled linear quiver modulo x^2 = y^2 = 0.
template <class F>
AlgebraPtr<F> make_doubled_algebra(const F& f, int n) {
  Quiver q = doubled_linear_quiver(n);
  std::vector<Relation<F>> rels;
  for (int i = 0; i + 2 < n; ++i) {
    rels.push_back(monomial_relation(f, i, {2 * i, 2 * (i + 1)}));
    rels.push_back(monomial_relation(f, i, {2 * i + 1, 2 * (i + 1) + 1}));
  }
  return build_algebra(f, q, rels, -1, "A_" + std::to_string(n));
}

// Presentation of T(A_n) for even n: extra arrows x, y from n back to 1,
// x^2 = y^2 = 0 everywhere and (xy)^{n/2} = (yx)^{n/2} at every vertex.
template <class F>
AlgebraPtr<F> make_trivial_extension_presentation(const F& f, int n) {
  if (n < 2 || n % 2 != 0) throw NonAdmissible("the cyclic presentation is implemented for even n only");
  Quiver q = doubled_linear_quiver(n);
  const int wx = q.add_arrow("x", n - 1, 0);
  const int wy = q.add_arrow("y", n - 1, 0);
  auto arrow_at = [&](int v, bool is_x) { return v == n - 1 ? (is_x ? wx : wy) : 2 * v + (is_x ? 0 : 1); };
  std::vector<Relation<F>> rels;
  for (int v = 0; v < n; ++v) {
    const int w = (v + 1) % n;
    rels.push_back(monomial_relation(f, v, {arrow_at(v, true), arrow_at(w, true)}));
    rels.push_back(monomial_relation(f, v, {arrow_at(v, false), arrow_at(w, false)}));
    Path px{v, {}}, py{v, {}};
    for (int k = 0; k < n; ++k) {
      const int at = (v + k) % n;
      px.arrows.push_back(arrow_at(at, k % 2 == 0));
      py.arrows.push_back(arrow_at(at, k % 2 != 0));
    }
    rels.push_back(Relation<F>{{{f.one(), px}, {-f.one(), py}}});
  }
  return build_algebra(f, q, rels, -1, "T(A_" + std::to_string(n) + ")");
}

// Images of the arrows of the cyclic presentation inside the structural
// trivial extension: the A-arrows map to themselves, the wrap-around x and y
// map to the duals of the alternating paths 1 -> n ending in y and in x.
template <class F>
std::vector<AlgElem<F>> trivial_extension_arrow_images(const AlgebraPtr<F>& a, const AlgebraPtr<F>& t, int n) {
  std::vector<AlgElem<F>> img;
  for (int i = 0; i + 1 < n; ++i) {
    img.push_back(t->unit(a->arrow_basis(2 * i)));
    img.push_back(t->unit(a->arrow_basis(2 * i + 1)));
  }
  auto alternating = [&](bool start_x) {
    Path p{0, {}};
    for (int i = 0; i + 1 < n; ++i) p.arrows.push_back(2 * i + (((i % 2 == 0) == start_x) ? 0 : 1));
    auto e = a->path_element(p);
    if (e.terms.size() != 1) throw NonAdmissible("alternating path is not a basis element");
    return t->unit(a->dim() + e.terms[0].first);
  };
  img.push_back(alternating(false));
  img.push_back(alternating(true));
  return img;
}

}  // namespace silt
