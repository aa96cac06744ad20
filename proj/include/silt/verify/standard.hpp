#pragma once

#include "silt/algebra/presets.hpp"
#include "silt/modules/module.hpp"

namespace silt {

// A_n with the arrow swap eps and the uniserial modules E = e_1A/e_1yA and
// alpha E = e_1A/e_1xA.
template <class F>
struct StandardObjects {
  AlgebraPtr<F> a;
  AlgebraAutomorphism<F> eps;
  Module<F> e, alpha_e;
};

template <class F>
StandardObjects<F> standard_objects(const F& f, int n) {
  auto a = make_doubled_algebra(f, n);
  auto eps = automorphism_from_arrows(a, swap_xy_arrows(a->quiver()), "eps");
  auto e = projective_quotient(a, 0, {a->arrow_basis(1)});
  auto ae = projective_quotient(a, 0, {a->arrow_basis(0)});
  return {a, eps, e, ae};
}

}  // namespace silt
