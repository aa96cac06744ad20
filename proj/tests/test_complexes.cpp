#include <gtest/gtest.h>

#include <random>

#include "silt/complexes/serialize.hpp"
#include "support.hpp"

using namespace silt;
using namespace silt::fixtures;

namespace {

const RationalField Q{};

template <class F>
std::size_t hom_dim(const ProjComplex<F>& x, const ProjComplex<F>& y, int t) {
  return homotopy_hom(x, y, t).dim();
}

template <class F>
std::size_t homology_dim(const ProjComplex<F>& x, int j) {
  return static_cast<std::size_t>(homology(x, j).total_dim());
}

}  // namespace

TEST(Complex, ValidationRejectsBadDifferentials) {
  auto a = make_doubled_algebra(Q, 3);
  AlgMatrix<RationalField> d(1, 1);
  d(0, 0) = a->unit(a->arrow_basis(0));
  // x : e_2A -> e_1A is left multiplication by x in e_1 A e_2.
  EXPECT_NO_THROW(ProjComplex<RationalField>(a, 0, {{1}, {0}}, {d}));
  EXPECT_THROW(ProjComplex<RationalField>(a, 0, {{0}, {1}}, {d}), InvalidComplex);
  EXPECT_THROW(ProjComplex<RationalField>(a, 0, {{1}, {0}}, {}), InvalidComplex);
  AlgMatrix<RationalField> dx(1, 1);
  dx(0, 0) = a->unit(a->arrow_basis(2));
  // x then x composes to zero; x then y does not.
  EXPECT_NO_THROW(ProjComplex<RationalField>(a, 0, {{2}, {1}, {0}}, {dx, d}));
  AlgMatrix<RationalField> dy(1, 1);
  dy(0, 0) = a->unit(a->arrow_basis(1));
  EXPECT_THROW(ProjComplex<RationalField>(a, 0, {{0}, {1}, {0}}, {dy, d}), InvalidComplex);
}

TEST(Complex, ShiftRoundTripAndHomology) {
  std::mt19937_64 rng(21);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 6; ++t) {
    auto x = random_complex(a, rng);
    for (int s : {-2, -1, 1, 3}) {
      EXPECT_EQ(shift(shift(x, s), -s), x);
      for (int j = x.lo() - 1; j <= x.hi() + 1; ++j)
        EXPECT_EQ(homology_dim(shift(x, s), j - s), homology_dim(x, j)) << s << " " << j;
    }
  }
}

TEST(Complex, ResolutionOfUniserial) {
  auto fx = fixture(Q, 4);
  auto pe = resolution_complex(fx.e);
  EXPECT_EQ(pe.lo(), -3);
  EXPECT_EQ(pe.hi(), 0);
  EXPECT_TRUE(is_minimal(pe));
  auto s = shift(pe, -2);
  EXPECT_EQ(s.lo(), -1);
  EXPECT_EQ(s.hi(), 2);
  EXPECT_TRUE(is_isomorphic(homology(pe, 0), fx.e).isomorphic);
  for (int j = -3; j < 0; ++j) EXPECT_EQ(homology_dim(pe, j), 0u);
}

TEST(Complex, ConeOfIdentityIsContractible) {
  std::mt19937_64 rng(4);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 5; ++t) {
    auto x = random_complex(a, rng);
    auto c = cone(x, x, identity_chain_map(x));
    EXPECT_TRUE(minimize(c).is_zero());
  }
}

TEST(Complex, ConeOfZeroMapIsSum) {
  std::mt19937_64 rng(8);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 4; ++t) {
    auto x = random_complex(a, rng);
    auto y = random_complex(a, rng);
    auto c = cone(x, y, zero_chain_map(x, y));
    auto r = iso_complex(c, direct_sum(y, shift(x, 1)));
    EXPECT_TRUE(r.isomorphic) << r.method;
  }
}

TEST(Complex, SphericalTwistOfLastProjective) {
  auto fx = fixture(Q, 4);
  auto pe = shift(resolution_complex(fx.e), -3);
  auto top = stalk(fx.a, {3}, 0);
  auto h = homotopy_hom(pe, top, 0);
  ASSERT_EQ(h.dim(), 1u);
  auto f = hom_basis_maps(pe, top, h)[0];
  ASSERT_TRUE(is_chain_map(pe, top, f));
  auto c = cone(pe, top, f);
  EXPECT_EQ(c.summand_count(), 5u);
  auto m = minimize(c);
  EXPECT_EQ(c.summand_count() - m.summand_count(), 2u);
  EXPECT_EQ(m.lo(), 0);
  EXPECT_EQ(m.terms(), (std::vector<std::vector<int>>{{2}, {1}, {0}}));
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& d = m.diffs()[i];
    const int y = fx.a->arrow_basis(2 * static_cast<int>(2 - i) - 1);
    // Entries are nonzero multiples of y.
    ASSERT_EQ(d(0, 0).terms.size(), 1u);
    EXPECT_EQ(d(0, 0).terms[0].first, y);
  }
}

TEST(Complex, MinimizeIsIdempotentAndPreservesHomology) {
  std::mt19937_64 rng(13);
  for (int n : {2, 3, 4}) {
    auto a = make_doubled_algebra(Q, n);
    for (int t = 0; t < 4; ++t) {
      auto x = random_complex(a, rng);
      auto m = minimize(x);
      EXPECT_TRUE(is_minimal(m));
      EXPECT_EQ(minimize(m), m);
      EXPECT_EQ(k0_class(m), k0_class(x));
      for (int j = x.lo(); j <= x.hi(); ++j) EXPECT_EQ(homology_dim(m, j), homology_dim(x, j));
    }
  }
}

TEST(Hom, SphericalObject) {
  auto fx = fixture(Q, 4);
  auto pe = resolution_complex(fx.e);
  auto pae = resolution_complex(fx.alpha_e);
  for (int j = -5; j <= 5; ++j) {
    EXPECT_EQ(hom_dim(pe, pe, j), (j == 0 || j == 3) ? 1u : 0u) << j;
    EXPECT_EQ(hom_dim(pe, pae, j), 0u) << j;
  }
}

TEST(Hom, RegularStalkComputesHomology) {
  std::mt19937_64 rng(17);
  auto a = make_doubled_algebra(Q, 3);
  auto reg = regular_stalk(a);
  for (int t = 0; t < 5; ++t) {
    auto x = random_complex(a, rng);
    for (int j = x.lo() - 1; j <= x.hi() + 1; ++j) EXPECT_EQ(hom_dim(reg, x, j), homology_dim(x, j));
  }
}

TEST(Hom, HomDimensionsListsWindow) {
  auto fx = fixture(Q, 4);
  auto pe = resolution_complex(fx.e);
  auto dims = hom_dimensions(pe, pe);
  ASSERT_EQ(dims.front().first, -3);
  ASSERT_EQ(dims.back().first, 3);
  std::size_t total = 0;
  for (auto [t, d] : dims) total += d;
  EXPECT_EQ(total, 2u);
}

TEST(Hom, BasisMapsAreChainMaps) {
  std::mt19937_64 rng(23);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 4; ++t) {
    auto x = random_complex(a, rng);
    auto y = random_complex(a, rng);
    for (int s = -2; s <= 2; ++s) {
      auto h = homotopy_hom(x, y, s);
      for (const auto& g : hom_basis_maps(x, y, h)) {
        EXPECT_TRUE(is_chain_map(x, y, g));
        EXPECT_EQ(chain_map_from(x, y, s, cochain_of(x, y, g)).comps, g.comps);
      }
      HomCoordinates<RationalField> hc(Q, h);
      for (std::size_t i = 0; i < h.dim(); ++i) {
        auto c = hc.of(h.basis[i]);
        ASSERT_TRUE(c.has_value());
        for (std::size_t j = 0; j < c->size(); ++j) EXPECT_EQ((*c)[j], i == j ? Rational(1) : Rational(0));
      }
    }
  }
}

TEST(Nakayama, UniserialImages) {
  auto f4 = fixture(Q, 4);
  auto nu4 = nakayama(resolution_complex(f4.e));
  EXPECT_TRUE(nu4.is_valid());
  for (int j = -3; j <= 0; ++j) {
    auto h = homology(nu4, j);
    if (j == -3) {
      EXPECT_TRUE(is_isomorphic(h, f4.e).isomorphic);
    } else {
      EXPECT_TRUE(h.is_zero()) << j;
    }
  }
  auto f3 = fixture(Q, 3);
  auto nu3 = nakayama(resolution_complex(f3.e));
  for (int j = -2; j <= 0; ++j) {
    auto h = homology(nu3, j);
    if (j == -2) {
      EXPECT_TRUE(is_isomorphic(h, f3.alpha_e).isomorphic);
    } else {
      EXPECT_TRUE(h.is_zero()) << j;
    }
  }
}

TEST(Nakayama, ProjectivesGoToInjectives) {
  auto a = make_doubled_algebra(Q, 4);
  for (int v = 0; v < 4; ++v) {
    auto nu = nakayama(stalk(a, {v}, 0));
    EXPECT_TRUE(is_isomorphic(homology(nu, 0), injective(a, v)).isomorphic);
  }
}

TEST(Nakayama, SerreDuality) {
  std::mt19937_64 rng(31);
  for (int n : {2, 4}) {
    auto a = make_doubled_algebra(Q, n);
    for (int t = 0; t < 4; ++t) {
      auto x = random_complex(a, rng);
      auto y = random_complex(a, rng);
      auto nu = nakayama(x);
      for (int j = -2; j <= 2; ++j) {
        const auto lhs = hom_dim(x, y, j);
        const auto rhs = homotopy_hom(y, nu, -j).dim();
        EXPECT_EQ(lhs, rhs) << "n=" << n << " t=" << t << " j=" << j;
      }
    }
  }
}

TEST(Twist, ComplexTwistCompatibility) {
  auto fx = fixture(Q, 4);
  EXPECT_TRUE(iso_complex(twist_complex(regular_stalk(fx.a), fx.eps), regular_stalk(fx.a)).isomorphic);
  auto pe = resolution_complex(fx.e);
  auto twisted = twist_complex(pe, fx.eps);
  EXPECT_TRUE(iso_complex(twisted, resolution_complex(fx.alpha_e)).isomorphic);
  std::mt19937_64 rng(37);
  for (int t = 0; t < 4; ++t) {
    auto x = random_complex(fx.a, rng);
    auto y = random_complex(fx.a, rng);
    auto tx = twist_complex(x, fx.eps), ty = twist_complex(y, fx.eps);
    for (int j = -2; j <= 2; ++j) EXPECT_EQ(hom_dim(x, y, j), hom_dim(tx, ty, j));
    auto f = random_chain_map(x, y, rng);
    EXPECT_TRUE(is_chain_map(tx, ty, twist_chain_map(f, fx.eps)));
  }
}

TEST(Properties, HomotopyInvarianceOfHom) {
  std::mt19937_64 rng(41);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 5; ++t) {
    auto x = random_complex(a, rng);
    auto y = random_complex(a, rng);
    auto mx = minimize(x), my = minimize(y);
    for (int j = -3; j <= 3; ++j) {
      EXPECT_EQ(hom_dim(x, y, j), hom_dim(mx, y, j));
      EXPECT_EQ(hom_dim(x, y, j), hom_dim(x, my, j));
    }
  }
}

TEST(Properties, K0AdditiveOnCones) {
  std::mt19937_64 rng(43);
  auto a = make_doubled_algebra(Q, 4);
  for (int t = 0; t < 6; ++t) {
    auto x = random_complex(a, rng);
    auto y = random_complex(a, rng);
    auto c = cone(x, y, random_chain_map(x, y, rng));
    auto kx = k0_class(x), ky = k0_class(y), kc = k0_class(c);
    for (std::size_t v = 0; v < kc.size(); ++v) EXPECT_EQ(kc[v], ky[v] - kx[v]);
  }
}

TEST(Decompose, RegularStalkSplitsIntoProjectives) {
  for (int n : {2, 3, 4}) {
    auto a = make_doubled_algebra(Q, n);
    auto d = decompose_complex(regular_stalk(a));
    ASSERT_EQ(d.summands.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(d.exact);
    for (int v = 0; v < n; ++v) EXPECT_EQ(d.summands[static_cast<std::size_t>(v)], stalk(a, {v}, 0));
  }
}

TEST(Decompose, SumOfShiftedCopies) {
  auto fx = fixture(Q, 4);
  auto pe = resolution_complex(fx.e);
  auto d = decompose_complex(direct_sum(pe, shift(pe, 1)));
  ASSERT_EQ(d.summands.size(), 2u);
  EXPECT_TRUE(iso_complex(d.summands[0], shift(pe, 1)).isomorphic);
  EXPECT_TRUE(iso_complex(d.summands[1], pe).isomorphic);
  EXPECT_EQ(decompose_complex(pe).summands.size(), 1u);
}

TEST(Decompose, RandomSumsRecombine) {
  std::mt19937_64 rng(47);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 4; ++t) {
    auto x = random_complex(a, rng);
    auto d = decompose_complex(x);
    auto back = direct_sum(a, d.summands);
    EXPECT_TRUE(iso_complex(back, x).isomorphic);
    for (const auto& s : d.summands) EXPECT_EQ(decompose_complex(s).summands.size(), 1u);
  }
}

TEST(Iso, ComplexIsomorphism) {
  std::mt19937_64 rng(53);
  auto fx = fixture(Q, 4);
  auto pe = resolution_complex(fx.e);
  auto pae = resolution_complex(fx.alpha_e);
  auto r = iso_complex(pe, pae);
  EXPECT_FALSE(r.isomorphic);
  EXPECT_TRUE(r.exact);
  EXPECT_FALSE(iso_complex(pe, shift(pe, 1)).isomorphic);
  for (int t = 0; t < 4; ++t) {
    auto x = random_complex(fx.a, rng);
    auto s = iso_complex(x, minimize(x));
    EXPECT_TRUE(s.isomorphic);
    ASSERT_TRUE(s.witness.has_value());
  }
}

TEST(Serialize, JsonRoundTrip) {
  std::mt19937_64 rng(59);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 5; ++t) {
    auto x = random_complex(a, rng);
    auto j = to_json(x);
    auto back = complex_from_json(a, j);
    EXPECT_EQ(back, x);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
  const PrimeField f7{7};
  auto b = make_doubled_algebra(f7, 3);
  std::mt19937_64 rng2(61);
  auto y = random_complex(b, rng2);
  EXPECT_EQ(complex_from_json(b, to_json(y)), y);
  EXPECT_THROW(complex_from_json(a, to_json(y)), SerializationError);
  EXPECT_THROW(complex_from_json(a, nlohmann::json::parse("{\"field\": \"Q\"}")), SerializationError);
}
