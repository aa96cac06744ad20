#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace silt;
using namespace silt::fixtures;

namespace {

const RationalField Q{};

// Oracle: Hom(M, N) as the kernel of Hom(P_0, N) -> Hom(P_1, N) for the
// first two terms of a projective presentation of M.
template <class F>
std::size_t hom_dim_via_presentation(const Module<F>& m, const Module<F>& n) {
  if (m.is_zero()) return 0;
  auto res = minimal_projective_resolution(m, 1 << 20);
  const auto& p0 = res.terms[0];
  std::vector<std::size_t> off{0};
  for (int v : p0) off.push_back(off.back() + static_cast<std::size_t>(n.dim(v)));
  if (res.diffs.empty()) return off.back();
  const auto& d = res.diffs[0];
  const auto& p1 = res.terms[1];
  std::vector<Vec<F>> rows;
  for (std::size_t j = 0; j < p1.size(); ++j) {
    const auto w = static_cast<std::size_t>(n.dim(p1[j]));
    Matrix<F> block(m.field(), w, off.back());
    for (std::size_t i = 0; i < p0.size(); ++i)
      block.set_block(0, off[i], n.action_of(d(i, j), p0[i], p1[j]));
    for (std::size_t r = 0; r < w; ++r) rows.push_back(block.row(r));
  }
  if (rows.empty()) return off.back();
  return kernel_basis(Matrix<F>::from_rows(m.field(), off.back(), rows)).size();
}

bool all_radical(const Algebra<RationalField>& a, const AlgMatrix<RationalField>& d) {
  for (std::size_t s = 0; s < d.rows(); ++s)
    for (std::size_t r = 0; r < d.cols(); ++r)
      for (const auto& [b, c] : d(s, r).terms)
        if (a.basis(b).length == 0) return false;
  return true;
}

}  // namespace

TEST(Modules, DistinguishedDimensionVectors) {
  auto fx = fixture(Q, 4);
  EXPECT_EQ(projective(fx.a, 0).dims(), (std::vector<int>{1, 2, 2, 2}));
  EXPECT_EQ(simple(fx.a, 2).dims(), (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(injective(fx.a, 0).total_dim(), 1);
  EXPECT_EQ(fx.e.dims(), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(fx.alpha_e.dims(), (std::vector<int>{1, 1, 1, 1}));
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(projective(fx.a, i).is_valid());
    EXPECT_TRUE(injective(fx.a, i).is_valid());
    EXPECT_TRUE(simple(fx.a, i).is_valid());
  }
  EXPECT_TRUE(fx.e.is_valid());
  EXPECT_THROW(projective(fx.a, 4), IndexError);
  EXPECT_THROW(simple(fx.a, -1), IndexError);
}

TEST(Modules, QuotientByTopIsZero) {
  auto fx = fixture(Q, 4);
  EXPECT_TRUE(projective_quotient(fx.a, 0, {0}).is_zero());
}

TEST(Modules, UniserialSocle) {
  auto fx = fixture(Q, 4);
  // Socle of E: vectors killed by every generator sit only at the last vertex.
  for (int v = 0; v < 4; ++v) {
    bool killed = true;
    for (int g : fx.a->generators())
      if (fx.a->basis(g).source == v && !fx.e.action(g).is_zero()) killed = false;
    EXPECT_EQ(killed, v == 3) << v;
  }
}

TEST(Modules, ArrowRepresentationsCheckRelations) {
  auto a = make_doubled_algebra(Q, 3);
  Matrix<RationalField> one = Matrix<RationalField>::identity(Q, 1);
  std::vector<Matrix<RationalField>> arrows{one, one, one, one};
  // x x acts as 1, violating x^2 = 0.
  EXPECT_THROW(module_from_arrows(a, {1, 1, 1}, arrows), InvalidModule);
  arrows[2] = Matrix<RationalField>(Q, 1, 1);
  arrows[1] = Matrix<RationalField>(Q, 1, 1);
  auto m = module_from_arrows(a, {1, 1, 1}, arrows);
  EXPECT_TRUE(m.is_valid());
  EXPECT_TRUE(is_isomorphic(m, projective_quotient(a, 0, {a->arrow_basis(1)})).isomorphic);
}

TEST(Hom, KnownDimensions) {
  auto fx = fixture(Q, 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(hom_space(projective(fx.a, i), fx.e).size(), 1u) << i;
  EXPECT_EQ(hom_space(fx.e, fx.alpha_e).size(), 0u);
  EXPECT_EQ(hom_space(fx.alpha_e, fx.e).size(), 0u);
  auto ee = direct_sum(fx.e, fx.e);
  EXPECT_EQ(hom_space(ee, ee).size(), 4u);
  for (const auto& h : hom_space(ee, ee)) EXPECT_TRUE(is_module_map(ee, ee, h));
}

TEST(Hom, ProjectiveHomIsVertexSpace) {
  auto a = make_doubled_algebra(Q, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_EQ(hom_space(projective(a, i), projective(a, j)).size(), a->between(j, i).size());
}

TEST(Hom, AgreesWithPresentationOracle) {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 4}) {
    auto a = make_doubled_algebra(Q, n);
    for (int t = 0; t < 12; ++t) {
      auto m = random_module(a, rng);
      auto k = random_module(a, rng);
      EXPECT_EQ(hom_space(m, k).size(), hom_dim_via_presentation(m, k)) << "n=" << n << " t=" << t;
    }
  }
}

TEST(Iso, KnownWitnesses) {
  auto fx = fixture(Q, 4);
  auto r = is_isomorphic(fx.e, fx.alpha_e);
  EXPECT_FALSE(r.isomorphic);
  EXPECT_TRUE(r.exact);
  auto a2 = make_doubled_algebra(Q, 2);
  EXPECT_TRUE(is_isomorphic(projective(a2, 1), simple(a2, 1)).isomorphic);
  EXPECT_FALSE(is_isomorphic(projective(a2, 0), simple(a2, 0)).isomorphic);
}

TEST(Iso, ReflexiveOnRandomModules) {
  std::mt19937_64 rng(5);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 10; ++t) {
    auto m = random_module(a, rng);
    auto r = is_isomorphic(m, m);
    EXPECT_TRUE(r.isomorphic);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(is_module_map(m, m, *r.witness));
  }
}

TEST(Iso, SumsNeedMatchingSummands) {
  auto fx = fixture(Q, 4);
  auto lhs = direct_sum(fx.e, fx.alpha_e);
  auto rhs = direct_sum(fx.alpha_e, fx.e);
  EXPECT_TRUE(is_isomorphic(lhs, rhs).isomorphic);
  auto r = is_isomorphic(direct_sum(fx.e, fx.e), lhs);
  EXPECT_FALSE(r.isomorphic);
  EXPECT_TRUE(r.exact);
}

TEST(Iso, FindInvertibleNeedsMixedCombination) {
  // Blocks s, t and s - t: no single member and not the plain sum works.
  auto one = [](int v) { return Matrix<RationalField>::from_rows(Q, 1, {{Rational(v)}}); };
  std::vector<std::vector<Matrix<RationalField>>> family{{one(1), one(0), one(1)}, {one(0), one(1), one(-1)}};
  std::mt19937_64 rng(1);
  auto s = find_invertible(Q, family, 3, rng);
  ASSERT_TRUE(s.found());
  EXPECT_NE(s.method, "sweep");
  // Span of E11 and E12 is everywhere singular.
  Matrix<RationalField> e11(Q, 2, 2), e12(Q, 2, 2);
  e11(0, 0) = Rational(1);
  e12(0, 1) = Rational(1);
  std::mt19937_64 rng2(1);
  auto none = find_invertible(Q, {{e11}, {e12}}, 1, rng2);
  EXPECT_FALSE(none.found());
  EXPECT_TRUE(none.exact);
  EXPECT_EQ(none.method, "grid");
}

TEST(Twist, Properties) {
  auto fx = fixture(Q, 4);
  EXPECT_TRUE(is_isomorphic(twist_module(fx.e, fx.eps), fx.alpha_e).isomorphic);
  for (int i = 0; i < 4; ++i) {
    auto p = projective(fx.a, i);
    EXPECT_TRUE(is_isomorphic(twist_module(p, fx.eps), p).isomorphic) << i;
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 8; ++t) {
    auto m = random_module(fx.a, rng);
    auto k = random_module(fx.a, rng);
    auto mt = twist_module(m, fx.eps);
    EXPECT_TRUE(mt.is_valid());
    EXPECT_TRUE(is_isomorphic(twist_module(mt, fx.eps), m).isomorphic);
    EXPECT_EQ(hom_space(m, k).size(), hom_space(mt, twist_module(k, fx.eps)).size());
  }
}

TEST(Resolution, UniserialModule) {
  auto fx = fixture(Q, 4);
  auto res = minimal_projective_resolution(fx.e, 10);
  ASSERT_EQ(res.length(), 3);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(res.terms[static_cast<std::size_t>(k)], (std::vector<int>{k}));
  for (int k = 0; k < 3; ++k) {
    const auto& d = res.diffs[static_cast<std::size_t>(k)];
    ASSERT_EQ(d.rows(), 1u);
    ASSERT_EQ(d.cols(), 1u);
    EXPECT_EQ(d(0, 0), fx.a->unit(fx.a->arrow_basis(2 * k + 1))) << fx.a->str(d(0, 0));
  }
}

TEST(Resolution, ProjectivesAndZero) {
  auto a = make_doubled_algebra(Q, 4);
  for (int i = 0; i < 4; ++i) {
    auto res = minimal_projective_resolution(projective(a, i), 0);
    EXPECT_EQ(res.length(), 0);
    EXPECT_EQ(res.terms[0], (std::vector<int>{i}));
  }
  EXPECT_EQ(minimal_projective_resolution(Module<RationalField>::zero(a), 0).length(), -1);
  EXPECT_THROW(minimal_projective_resolution(simple(a, 0), 1), ResolutionTooLong);
}

TEST(Resolution, GlobalDimension) {
  for (int n = 2; n <= 5; ++n) {
    auto a = make_doubled_algebra(Q, n);
    EXPECT_EQ(global_dimension(a, 2 * n), n - 1) << n;
  }
  auto t = make_trivial_extension_presentation(Q, 2);
  EXPECT_FALSE(global_dimension(t, 6).has_value());
}

TEST(Resolution, MinimalAndExact) {
  std::mt19937_64 rng(17);
  auto a = make_doubled_algebra(Q, 4);
  for (int t = 0; t < 10; ++t) {
    auto m = random_module(a, rng);
    auto res = minimal_projective_resolution(m, 8);
    for (const auto& d : res.diffs) EXPECT_TRUE(all_radical(*a, d));
    for (std::size_t k = 0; k + 1 < res.diffs.size(); ++k) EXPECT_TRUE(mul(*a, res.diffs[k], res.diffs[k + 1]).is_zero());
    for (std::size_t k = 0; k < res.diffs.size(); ++k)
      EXPECT_TRUE(entries_well_placed(*a, res.diffs[k], res.terms[k], res.terms[k + 1]));
    // Euler characteristic of dimension vectors recovers M.
    std::vector<int> chi(4, 0);
    for (std::size_t k = 0; k < res.terms.size(); ++k)
      for (int v : res.terms[k])
        for (int w = 0; w < 4; ++w)
          chi[static_cast<std::size_t>(w)] += (k % 2 == 0 ? 1 : -1) * static_cast<int>(a->between(v, w).size());
    EXPECT_EQ(chi, m.dims());
  }
}

TEST(Decompose, Examples) {
  auto fx = fixture(Q, 4);
  auto ee = decompose(direct_sum(fx.e, fx.e));
  ASSERT_EQ(ee.summands.size(), 2u);
  for (const auto& s : ee.summands) EXPECT_TRUE(is_isomorphic(s, fx.e).isomorphic);
  EXPECT_EQ(decompose(projective(fx.a, 0)).summands.size(), 1u);
  auto mixed = decompose(direct_sum(fx.e, fx.alpha_e));
  ASSERT_EQ(mixed.summands.size(), 2u);
  EXPECT_FALSE(is_isomorphic(mixed.summands[0], mixed.summands[1]).isomorphic);
  EXPECT_TRUE(decompose(Module<RationalField>::zero(fx.a)).summands.empty());
  EXPECT_TRUE(ee.exact);
}

TEST(Decompose, KrullSchmidtStable) {
  std::mt19937_64 rng(23);
  auto a = make_doubled_algebra(Q, 3);
  for (int t = 0; t < 6; ++t) {
    auto m = random_module(a, rng);
    auto k = random_module(a, rng);
    auto parts = decompose(m).summands;
    for (auto& s : decompose(k).summands) parts.push_back(s);
    auto joint = decompose(direct_sum(m, k)).summands;
    ASSERT_EQ(joint.size(), parts.size());
    std::vector<bool> used(parts.size(), false);
    for (const auto& s : joint) {
      EXPECT_TRUE(s.is_valid());
      bool matched = false;
      for (std::size_t i = 0; i < parts.size() && !matched; ++i)
        if (!used[i] && is_isomorphic(s, parts[i]).isomorphic) used[i] = matched = true;
      EXPECT_TRUE(matched);
    }
  }
}

TEST(Decompose, SummandsAreIndecomposable) {
  std::mt19937_64 rng(29);
  auto a = make_doubled_algebra(Q, 4);
  for (int t = 0; t < 6; ++t) {
    auto m = direct_sum(random_module(a, rng), random_module(a, rng));
    int total = 0;
    for (const auto& s : decompose(m).summands) {
      EXPECT_EQ(decompose(s).summands.size(), 1u);
      total += s.total_dim();
    }
    EXPECT_EQ(total, m.total_dim());
  }
}

TEST(PrimeField, WitnessesOverF101) {
  auto fx = fixture(PrimeField(101), 4);
  EXPECT_FALSE(is_isomorphic(fx.e, fx.alpha_e).isomorphic);
  EXPECT_TRUE(is_isomorphic(twist_module(fx.e, fx.eps), fx.alpha_e).isomorphic);
  EXPECT_EQ(global_dimension(fx.a, 8), 3);
  EXPECT_EQ(decompose(direct_sum(fx.e, fx.alpha_e)).summands.size(), 2u);
}
