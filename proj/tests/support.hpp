#pragma once

#include "silt/complexes/decompose.hpp"
#include "silt/complexes/random.hpp"
#include "silt/modules/decompose.hpp"
#include "silt/verify/standard.hpp"

namespace silt::fixtures {

template <class F>
using Fixture = StandardObjects<F>;

template <class F>
Fixture<F> fixture(const F& f, int n) {
  return standard_objects(f, n);
}

}  // namespace silt::fixtures
