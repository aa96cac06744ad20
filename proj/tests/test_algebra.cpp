#include <gtest/gtest.h>

#include "silt/algebra/presets.hpp"

using namespace silt;

namespace {

const RationalField Q{};

// Oracle: alternating x/y words in the doubled linear quiver. Starting at
// vertex i there are two alternating words of each length 1..n-i.
int alternating_word_count(int n, int start) { return 1 + 2 * (n - 1 - start); }

}  // namespace

TEST(BuildAlgebra, DoubledLinearDimensions) {
  for (int n = 2; n <= 6; ++n) {
    auto a = make_doubled_algebra(Q, n);
    EXPECT_EQ(a->dim(), n * n) << "n=" << n;
    for (int i = 0; i < n; ++i) {
      int total = 0;
      for (int v = 0; v < n; ++v) total += static_cast<int>(a->between(i, v).size());
      EXPECT_EQ(total, alternating_word_count(n, i));
      EXPECT_EQ(total, 1 + 2 * (n - (i + 1)));
    }
  }
}

TEST(BuildAlgebra, A4BasisOfFirstProjective) {
  auto a = make_doubled_algebra(Q, 4);
  std::vector<std::string> names;
  for (int v = 0; v < 4; ++v)
    for (int b : a->between(0, v)) names.push_back(a->basis(b).name);
  std::sort(names.begin(), names.end());
  std::vector<std::string> want{"e1", "x", "xy", "xyx", "y", "yx", "yxy"};
  EXPECT_EQ(names, want);
  std::vector<int> dims;
  for (int v = 0; v < 4; ++v) dims.push_back(static_cast<int>(a->between(0, v).size()));
  EXPECT_EQ(dims, (std::vector<int>{1, 2, 2, 2}));
}

TEST(BuildAlgebra, KroneckerAndInfinite) {
  auto k = make_doubled_algebra(Q, 2);
  EXPECT_EQ(k->dim(), 4);
  Quiver loop(1);
  loop.add_arrow("t", 0, 0);
  EXPECT_THROW(build_algebra(Q, loop, {}, 10), NotFiniteDimensional);
}

TEST(BuildAlgebra, RejectsNonAdmissible) {
  Quiver q(2);
  q.add_arrow("x", 0, 1);
  q.add_arrow("y", 0, 1);
  std::vector<Relation<RationalField>> short_rel{{{{Q.one(), Path{0, {0}}}}}};
  EXPECT_THROW(build_algebra(Q, q, short_rel), NonAdmissible);
  Quiver q3 = doubled_linear_quiver(3);
  std::vector<Relation<RationalField>> nonparallel{{{{Q.one(), Path{0, {0, 2}}}, {Q.one(), Path{1, {2}}}}}};
  EXPECT_THROW(build_algebra(Q, q3, nonparallel), NonAdmissible);
}

TEST(Multiply, A4Products) {
  auto a = make_doubled_algebra(Q, 4);
  const int x = a->arrow_basis(0), y = a->arrow_basis(1);
  EXPECT_EQ(a->mul(a->idempotent(0), a->unit(x)), a->unit(x));
  auto x2 = a->mul(a->unit(x), a->unit(a->arrow_basis(2)));
  EXPECT_TRUE(x2.is_zero());
  auto xy = a->mul(a->unit(x), a->unit(a->arrow_basis(3)));
  ASSERT_EQ(xy.terms.size(), 1u);
  EXPECT_EQ(a->basis(xy.terms[0].first).name, "xy");
  EXPECT_TRUE(a->mul(a->unit(y), a->unit(x)).is_zero());  // not composable
}

TEST(Multiply, Associative) {
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(make_doubled_algebra(Q, n)->is_associative());
  EXPECT_TRUE(trivial_extension(make_doubled_algebra(Q, 3))->is_associative());
}

TEST(Multiply, IdempotentsSumToOne) {
  auto a = make_doubled_algebra(Q, 4);
  for (int b = 0; b < a->dim(); ++b) {
    EXPECT_EQ(a->mul(a->one(), a->unit(b)), a->unit(b));
    EXPECT_EQ(a->mul(a->unit(b), a->one()), a->unit(b));
  }
}

TEST(Automorphism, EpsilonIsAnInvolution) {
  for (int n = 2; n <= 5; ++n) {
    auto a = make_doubled_algebra(Q, n);
    auto eps = automorphism_from_arrows(a, swap_xy_arrows(a->quiver()), "eps");
    EXPECT_TRUE(eps.compose(eps).is_identity());
    EXPECT_FALSE(n > 1 && eps.is_identity());
    for (int v = 0; v < n; ++v) EXPECT_EQ(eps.apply(a->idempotent(v)), a->idempotent(v));
  }
  auto a = make_doubled_algebra(Q, 4);
  std::vector<int> id(static_cast<std::size_t>(a->quiver().arrow_count()));
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(automorphism_from_arrows(a, id, "id").is_identity());
}

TEST(Automorphism, RelationNotPreservedDetected) {
  // x^2 = 0 only (no y^2 relation): swapping x and y breaks it.
  Quiver q = doubled_linear_quiver(3);
  std::vector<Relation<RationalField>> rels{monomial_relation(Q, 0, {0, 2})};
  auto a = build_algebra(Q, q, rels);
  EXPECT_THROW(automorphism_from_arrows(a, swap_xy_arrows(q), "eps"), RelationNotPreserved);
}

TEST(TrivialExtension, Dimensions) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(trivial_extension(make_doubled_algebra(Q, n))->dim(), 2 * n * n);
}

TEST(TrivialExtension, SymmetricForm) {
  for (int n = 2; n <= 4; ++n) {
    auto a = make_doubled_algebra(Q, n);
    auto t = trivial_extension(a);
    auto g = trivial_extension_gram(t, a->dim());
    EXPECT_EQ(g, g.transpose());
    EXPECT_TRUE(is_invertible(g));
  }
}

TEST(TrivialExtension, PresentationAgreesWithStructure) {
  for (int n : {2, 4, 6}) {
    auto a = make_doubled_algebra(Q, n);
    auto t = trivial_extension(a);
    auto p = make_trivial_extension_presentation(Q, n);
    ASSERT_EQ(p->dim(), t->dim());
    auto m = algebra_map_from_arrows(p, t, trivial_extension_arrow_images(a, t, n));
    ASSERT_TRUE(m.has_value()) << "n=" << n;
    EXPECT_TRUE(is_invertible(*m));
    // socle of every e_i T e_i reaches length n
    for (int v = 0; v < n; ++v) {
      bool top = false;
      for (int b : p->between(v, v)) top = top || p->basis(b).length == n;
      EXPECT_TRUE(top);
    }
  }
}

TEST(TrivialExtension, EpsilonOnPresentationAndExtension) {
  auto p = make_trivial_extension_presentation(Q, 4);
  auto eps = automorphism_from_arrows(p, swap_xy_arrows(p->quiver()), "eps");
  EXPECT_TRUE(eps.compose(eps).is_identity());
  auto a = make_doubled_algebra(Q, 4);
  auto t = trivial_extension(a);
  auto ea = automorphism_from_arrows(a, swap_xy_arrows(a->quiver()), "eps");
  auto et = extend_to_trivial_extension(ea, t);
  EXPECT_TRUE(et.compose(et).is_identity());
}

TEST(Algebra, OverPrimeField) {
  PrimeField f(101);
  auto a = make_doubled_algebra(f, 4);
  EXPECT_EQ(a->dim(), 16);
  EXPECT_EQ(trivial_extension(a)->dim(), 32);
}
