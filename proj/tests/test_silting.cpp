#include <gtest/gtest.h>

#include <random>

#include "silt/algebra/trivial_extension.hpp"
#include "silt/silting/explore.hpp"
#include "silt/silting/serre.hpp"
#include "silt/silting/spherical.hpp"
#include "support.hpp"

using namespace silt;
using namespace silt::fixtures;

namespace {

const RationalField Q{};

using PC = ProjComplex<RationalField>;

PC proj(const AlgebraPtr<RationalField>& a, int v, int degree = 0) { return stalk(a, {v}, degree); }

bool iso(const PC& x, const PC& y) { return iso_complex(x, y).isomorphic; }

struct Twists {
  Fixture<RationalField> fx;
  SphericalCertificate<RationalField> e, ae;
};

Twists twists4() {
  auto fx = fixture(Q, 4);
  auto e = check_spherical(fx.e, 3);
  auto ae = check_spherical(fx.alpha_e, 3);
  return {fx, e, ae};
}

}  // namespace

TEST(Approximation, KroneckerLeft) {
  // Arrows run from vertex 1 to vertex 2, so Hom(e_2A, e_1A) = e_1 A e_2 is 2-dimensional.
  auto a = make_doubled_algebra(Q, 2);
  auto ap = minimal_approximation(proj(a, 1), {proj(a, 0)}, Direction::Left);
  EXPECT_EQ(ap.index.size(), 2u);
  EXPECT_EQ(ap.cone.lo(), -1);
  EXPECT_EQ(ap.cone.terms(), (std::vector<std::vector<int>>{{1}, {0, 0}}));
  EXPECT_TRUE(is_chain_map(ap.source, ap.target, ap.map));
}

TEST(Approximation, TrivialCases) {
  auto a = make_doubled_algebra(Q, 3);
  auto x = proj(a, 1);
  auto same = minimal_approximation(x, {x}, Direction::Left);
  EXPECT_EQ(same.index.size(), 1u);
  EXPECT_TRUE(same.cone.is_zero());
  auto none = minimal_approximation(x, {}, Direction::Left);
  EXPECT_EQ(none.cone, shift(x, 1));
  auto right = minimal_approximation(x, {}, Direction::Right);
  EXPECT_EQ(right.cone, shift(x, -1));
}

TEST(Approximation, RedundantCopiesArePruned) {
  // Hom(e_3A, e_1A) has the two paths xy and yx; both factor through e_2A.
  auto a = make_doubled_algebra(Q, 3);
  auto ap = minimal_approximation(proj(a, 2), {proj(a, 0), proj(a, 1)}, Direction::Left);
  for (auto j : ap.index) EXPECT_EQ(j, 1u);
  EXPECT_EQ(ap.index.size(), 2u);
}

TEST(Approximation, MinimalityCertificate) {
  auto a = make_doubled_algebra(Q, 3);
  auto x = proj(a, 2);
  std::vector<PC> d{proj(a, 0), proj(a, 1)};
  auto ap = minimal_approximation(x, d, Direction::Left);
  EXPECT_TRUE(ap.minimal_certified);
  EXPECT_TRUE(minimal_approximation(proj(a, 0), {proj(a, 1), proj(a, 2)}, Direction::Right).minimal_certified);

  // A spare summand carried by the zero map is never minimal.
  auto padded = ap;
  padded.target = direct_sum(ap.target, d[1]);
  auto zero = zero_chain_map(x, d[1]);
  padded.map = detail::stack_left(x, padded.target, {&ap.map, &zero}, {&ap.target, &d[1]});
  ASSERT_TRUE(is_chain_map(x, padded.target, padded.map));
  EXPECT_FALSE(certify_minimal(padded));
}

TEST(Approximation, CertifiedAlongMutations) {
  auto a = make_doubled_algebra(Q, 4);
  std::vector<PC> summands;
  for (int v = 0; v < 4; ++v) summands.push_back(proj(a, v));
  for (int v = 0; v < 4; ++v) {
    std::vector<PC> rest;
    for (int w = 0; w < 4; ++w)
      if (w != v) rest.push_back(summands[w]);
    for (auto dir : {Direction::Left, Direction::Right})
      EXPECT_TRUE(minimal_approximation(summands[v], rest, dir).minimal_certified) << v << direction_name(dir);
  }
}

TEST(Mutation, TrivialSelections) {
  auto a = make_doubled_algebra(Q, 4);
  auto m = regular_object(a);
  auto same = mutate(m, {0, 1, 2, 3}, Direction::Left);
  EXPECT_TRUE(same_object(same, m, 0));
  auto up = mutate(m, {}, Direction::Left);
  EXPECT_TRUE(iso(up.total(), shift(m.total(), 1)));
  auto down = mutate(m, {}, Direction::Right);
  EXPECT_TRUE(iso(down.total(), shift(m.total(), -1)));
  EXPECT_THROW(mutate(m, {4}, Direction::Left), InvalidSelection);
}

TEST(Mutation, KroneckerIrreducible) {
  auto a = make_doubled_algebra(Q, 2);
  auto m = regular_object(a);
  // Replace e_2A keeping e_1A.
  auto mu = mutate(m, {0}, Direction::Left);
  ASSERT_EQ(mu.summands.size(), 2u);
  EXPECT_EQ(mu.summands[1].terms(), (std::vector<std::vector<int>>{{1}, {0, 0}}));
  EXPECT_TRUE(is_presilting(mu.total()));
  // Replace e_1A keeping e_2A: no maps e_1A -> e_2A, so e_1A moves to degree -1.
  auto mu1 = mutate(m, {1}, Direction::Left);
  EXPECT_TRUE(same_object(mu1, SiltingObject<RationalField>{a, {proj(a, 1), proj(a, 0, -1)}}, 0));
}

TEST(Mutation, RoundTrip) {
  for (int n : {2, 4}) {
    auto a = make_doubled_algebra(Q, n);
    auto m = regular_object(a);
    for (int drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> keep;
      for (int i = 0; i < n; ++i)
        if (i != drop) keep.push_back(static_cast<std::size_t>(i));
      std::vector<std::size_t> first(keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i) first[i] = i;
      auto up = mutate(m, keep, Direction::Left);
      EXPECT_TRUE(is_presilting(up.total()));
      EXPECT_TRUE(same_object(mutate(up, first, Direction::Right), m, 0)) << n << " " << drop;
      auto down = mutate(m, keep, Direction::Right);
      EXPECT_TRUE(same_object(mutate(down, first, Direction::Left), m, 0)) << n << " " << drop;
    }
  }
}

TEST(Silting, Presilting) {
  auto t = twists4();
  EXPECT_TRUE(is_presilting(regular_stalk(t.fx.a)));
  EXPECT_FALSE(is_presilting(t.e.resolution));
  EXPECT_TRUE(is_presilting(spherical_twist(t.e, regular_stalk(t.fx.a))));
}

TEST(Silting, GenerationCertificate) {
  auto t = twists4();
  auto reg = is_silting(regular_stalk(t.fx.a));
  EXPECT_TRUE(reg.certified);
  auto phi = is_silting(spherical_twist(t.e, regular_stalk(t.fx.a)));
  EXPECT_TRUE(phi.certified) << phi.failed_check;
  auto a2 = make_doubled_algebra(Q, 2);
  auto part = is_silting(proj(a2, 0));
  EXPECT_FALSE(part.certified);
  EXPECT_EQ(part.failed_check, "K0");
  EXPECT_FALSE(is_silting(t.e.resolution).certified);
}

TEST(Silting, LatticeSpan) {
  EXPECT_TRUE(spans_lattice({{1, 0}, {0, 1}}, 2));
  EXPECT_TRUE(spans_lattice({{2, 1}, {1, 1}}, 2));
  EXPECT_FALSE(spans_lattice({{2, 0}, {0, 1}}, 2));
  EXPECT_FALSE(spans_lattice({{1, 1}}, 2));
  EXPECT_TRUE(spans_lattice({{2, 0}, {3, 0}, {0, -1}}, 2));
}

TEST(Spherical, Certificates) {
  auto t = twists4();
  EXPECT_TRUE(t.e.valid());
  EXPECT_TRUE(t.ae.valid());
  auto wrong = check_spherical(t.fx.e, 2);
  EXPECT_FALSE(wrong.ext_ok);
  EXPECT_TRUE(wrong.serre_ok == false || wrong.ext_ok == false);
  auto f3 = fixture(Q, 3);
  auto c3 = check_spherical(f3.e, 2);
  EXPECT_FALSE(c3.valid());
  EXPECT_FALSE(c3.ext_ok);
  ASSERT_EQ(c3.serre_homology.size(), 1u);
  EXPECT_EQ(c3.serre_homology[0].first, -2);
  EXPECT_TRUE(is_isomorphic(c3.serre_homology[0].second, f3.alpha_e).isomorphic);
  EXPECT_THROW(spherical_twist(c3, regular_stalk(f3.a)), InvalidCertificate);
}

TEST(Spherical, TwistOfLastProjective) {
  auto t = twists4();
  auto x = spherical_twist(t.e, proj(t.fx.a, 3));
  EXPECT_EQ(x.lo(), 0);
  EXPECT_EQ(x.terms(), (std::vector<std::vector<int>>{{2}, {1}, {0}}));
}

TEST(Spherical, TwistShiftsTheObject) {
  auto t = twists4();
  const auto& pe = t.e.resolution;
  EXPECT_TRUE(iso(spherical_twist(t.e, pe), shift(pe, -2)));
  EXPECT_TRUE(iso(inverse_spherical_twist(t.e, pe), shift(pe, 2)));
}

TEST(Spherical, InverseRoundTrip) {
  auto t = twists4();
  for (int i = 0; i < 4; ++i) {
    auto p = proj(t.fx.a, i);
    EXPECT_TRUE(iso(inverse_spherical_twist(t.e, spherical_twist(t.e, p)), p)) << i;
    EXPECT_TRUE(iso(spherical_twist(t.e, inverse_spherical_twist(t.e, p)), p)) << i;
  }
}

TEST(Spherical, HomWindowAfterTwists) {
  auto t = twists4();
  const auto& pe = t.e.resolution;
  for (int m = 0; m <= 2; ++m)
    for (int i = 0; i < 4; ++i) {
      auto x = twist_power(t.e, proj(t.fx.a, i), m);
      for (int j = -12; j <= 4; ++j) {
        const std::size_t want = j == m * (1 - 3) - 3 ? 1 : 0;
        EXPECT_EQ(homotopy_hom(shift(pe, j), x, 0).dim(), want) << "m=" << m << " i=" << i << " j=" << j;
      }
    }
}

TEST(Spherical, HomologyOfTwists) {
  auto t = twists4();
  for (int m = 0; m <= 2; ++m)
    for (int i = 0; i < 4; ++i) {
      auto x = twist_power(t.e, proj(t.fx.a, i), m);
      for (int j = x.lo(); j <= x.hi(); ++j) {
        auto h = homology(x, j);
        if (j == 0) {
          EXPECT_TRUE(is_isomorphic(h, projective(t.fx.a, i)).isomorphic);
        } else if (j % 2 == 0 && j >= 2 && j <= 2 * m) {
          EXPECT_TRUE(is_isomorphic(h, t.fx.e).isomorphic) << m << " " << i << " " << j;
        } else {
          EXPECT_TRUE(h.is_zero()) << m << " " << i << " " << j;
        }
      }
    }
}

TEST(Invariance, RegularAndTwisted) {
  auto t = twists4();
  auto reg = regular_stalk(t.fx.a);
  EXPECT_TRUE(alpha_invariant(reg, t.fx.eps).isomorphic);
  auto phi = spherical_twist(t.e, reg);
  auto r = alpha_invariant(phi, t.fx.eps);
  EXPECT_FALSE(r.isomorphic);
  auto both = spherical_twist(t.ae, phi);
  EXPECT_TRUE(alpha_invariant(both, t.fx.eps).isomorphic);
  EXPECT_TRUE(summands_invariant(silting_object(both), t.fx.eps));
}

TEST(Serre, Comparisons) {
  auto t = twists4();
  auto reg = regular_stalk(t.fx.a);
  std::vector<PC> probes{t.e.resolution};
  for (int i = 0; i < 4; ++i) probes.push_back(proj(t.fx.a, i));
  auto tau = spherical_twist(t.ae, spherical_twist(t.e, reg));
  auto c = serre_compare(tau, reg, 1, probes);
  EXPECT_EQ(c.verdict, SerreVerdict::Confirmed) << c.stage << " " << c.detail;
  EXPECT_TRUE(c.witness.has_value());
  auto s = serre_compare(t.e.resolution, t.e.resolution, 3, probes);
  EXPECT_EQ(s.verdict, SerreVerdict::Confirmed) << s.stage << " " << s.detail;
  auto no = serre_compare(reg, reg, 0, probes);
  EXPECT_EQ(no.verdict, SerreVerdict::Refuted);
  EXPECT_EQ(no.stage, "homology");
}

TEST(TrivialExtension, Induction) {
  auto t = twists4();
  auto te = trivial_extension(t.fx.a);
  auto eps_t = extend_to_trivial_extension(t.fx.eps, te);
  auto reg = regular_stalk(t.fx.a);
  EXPECT_EQ(induce_trivial_extension(reg, te), regular_stalk(te));
  auto f1 = induce_trivial_extension(spherical_twist(t.e, reg), te);
  EXPECT_TRUE(is_presilting(f1));
  EXPECT_EQ(homotopy_hom(f1, f1, 0).dim(), 32u);
  EXPECT_FALSE(alpha_invariant(f1, eps_t).isomorphic);
}

TEST(Explore, KroneckerDepthOne) {
  auto a = make_doubled_algebra(Q, 2);
  auto g = explore(regular_object(a), 1, {});
  EXPECT_EQ(g.nodes.size(), 5u);
  EXPECT_EQ(g.edges.size(), 4u);
  EXPECT_TRUE(g.complete);
  auto j = to_json(g);
  EXPECT_EQ(j["nodes"].size(), 5u);
  EXPECT_NE(to_dot(g).find("digraph"), std::string::npos);
}

TEST(Explore, InvariancePropagates) {
  auto fx = fixture(Q, 4);
  auto g = explore(regular_object(fx.a), 1, {fx.eps});
  EXPECT_EQ(g.nodes.size(), 9u);
  for (const auto& n : g.nodes) {
    EXPECT_TRUE(n.invariant[0]) << describe(n.object);
    EXPECT_TRUE(is_presilting(n.object.total()));
  }
}
