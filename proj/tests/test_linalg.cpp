#include <gtest/gtest.h>

#include <random>

#include "silt/linalg/polynomial.hpp"

using namespace silt;

namespace {

const RationalField Q{};

Matrix<RationalField> q_matrix(std::vector<std::vector<std::int64_t>> rows) {
  Matrix<RationalField> m(Q, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

template <class F>
Matrix<F> random_matrix(const F& f, std::mt19937_64& rng, std::size_t r, std::size_t c, int bound, double density) {
  Matrix<F> m(f, r, c);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m(i, j) = f.random(rng, bound);
  return m;
}

// Low-rank matrix as a product of two random factors.
template <class F>
Matrix<F> random_low_rank(const F& f, std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(f, rng, r, k, 3, 0.8) * random_matrix(f, rng, k, c, 3, 0.8);
}

}  // namespace

TEST(Rational, NormalizesAndStaysExact) {
  Rational a(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ((a + Rational(3, 2)).str(), "0");
  Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big / Rational(INT64_MAX), Rational(INT64_MAX));
  EXPECT_TRUE((big / Rational(INT64_MAX)).is_small());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Rational x(static_cast<std::int64_t>(rng() >> 1), static_cast<std::int64_t>((rng() >> 20) + 1));
    Rational y(static_cast<std::int64_t>(rng() >> 3) - (1LL << 59), static_cast<std::int64_t>((rng() >> 40) + 1));
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ((x * y) / y, x);
    EXPECT_GT(x.denominator(), 0);
  }
  EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(PrimeFieldArith, ReducedAndMismatchDetected) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(-1).value(), 6u);
  EXPECT_EQ((f.from_int(3) * f.from_int(5)).value(), 1u);
  EXPECT_EQ((f.from_int(3) / f.from_int(5) * f.from_int(5)), f.from_int(3));
  EXPECT_THROW(PrimeField(8), FieldMismatch);
  PrimeField g(11);
  EXPECT_THROW((void)(f.one() + g.one()), FieldMismatch);
  Matrix<PrimeField> m(f, 2, 2);
  m(0, 0) = g.one();
  EXPECT_THROW(rank(m), FieldMismatch);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix<RationalField>::identity(Q, 2)), 2u);
  EXPECT_EQ(rank(Matrix<RationalField>(Q, 3, 5)), 0u);
  EXPECT_EQ(rank(q_matrix({{1, 2}, {2, 4}})), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix<RationalField>::identity(Q, 3)).empty());
  auto k = kernel_basis(Matrix<RationalField>(Q, 2, 3));
  ASSERT_EQ(k.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k[i][j], Rational(i == j ? 1 : 0));
  auto k2 = kernel_basis(q_matrix({{1, 1}}));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], (Vec<RationalField>{Rational(-1), Rational(1)}));
}

TEST(Solve, Examples) {
  Vec<RationalField> b{Rational(3), Rational(-2, 5)};
  EXPECT_EQ(*solve(Matrix<RationalField>::identity(Q, 2), b), b);
  auto m = q_matrix({{1, 1}});
  auto x = solve(m, Vec<RationalField>{Rational(0)});
  ASSERT_TRUE(x);
  EXPECT_EQ(m * *x, Vec<RationalField>{Rational(0)});
  EXPECT_FALSE(solve(Matrix<RationalField>(Q, 2, 2), b));
  EXPECT_THROW(solve(m, b), DimensionMismatch);
}

TEST(Invertible, Examples) {
  EXPECT_TRUE(is_invertible(Matrix<RationalField>::identity(Q, 4)));
  EXPECT_FALSE(is_invertible(q_matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
  EXPECT_TRUE(is_invertible(q_matrix({{0, 1}, {1, 0}})));
  EXPECT_THROW(is_invertible(q_matrix({{1, 0, 0}})), DimensionMismatch);
}

template <class F>
void rank_kernel_properties(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    auto m = trial % 2 ? random_matrix(f, rng, r, c, 4, 0.5) : random_low_rank(f, rng, r, c, std::min(r, c) / 2 + 1);
    const auto rk = rank(m);
    EXPECT_EQ(rk, rank(m.transpose()));
    auto ker = kernel_basis(m);
    EXPECT_EQ(rk + ker.size(), c);
    for (const auto& v : ker) EXPECT_TRUE(is_zero_vec<F>(m * v));
    if (!ker.empty()) {
      EXPECT_EQ(rank(Matrix<F>::from_columns(f, c, ker)), ker.size());
    }
    Vec<F> x0(c);
    for (auto& e : x0) e = f.random(rng, 5);
    auto b = m * x0;
    auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    for (const auto& v : ker) {
      Vec<F> y = *x;
      auto s = f.random(rng, 5);
      for (std::size_t i = 0; i < c; ++i) y[i] += s * v[i];
      EXPECT_EQ(m * y, b);
    }
    LinearSolver<F> cached(m);
    auto x2 = cached.solve(b);
    ASSERT_TRUE(x2.has_value());
    EXPECT_EQ(m * *x2, b);
  }
}

TEST(LinalgProperties, OverRationals) { rank_kernel_properties(Q, 11); }
TEST(LinalgProperties, OverPrimeField) { rank_kernel_properties(PrimeField(101), 12); }

TEST(LinalgProperties, InverseAndDeterminant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(Q, rng, 5, 5, 6, 0.7);
    if (!is_invertible(m)) {
      EXPECT_TRUE(determinant(m).is_zero());
      continue;
    }
    EXPECT_FALSE(determinant(m).is_zero());
    EXPECT_EQ(m * inverse(m), (Matrix<RationalField>::identity(Q, 5)));
    EXPECT_EQ(determinant(m) * determinant(inverse(m)), Rational(1));
  }
}

TEST(Span, IncrementalMatchesRank) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_low_rank(Q, rng, 7, 6, 3);
    SpanBuilder<RationalField> span(Q, 6);
    for (std::size_t i = 0; i < 7; ++i) span.add(m.row(i));
    EXPECT_EQ(span.rank(), rank(m));
    for (std::size_t i = 0; i < 7; ++i) EXPECT_TRUE(span.contains(m.row(i)));
  }
}

TEST(Polynomials, RootsAndGcd) {
  std::mt19937_64 rng(1);
  // (t - 1/2)(t + 3) t^2
  Poly<RationalField> p(Q, {Rational(0), Rational(0), Rational(-3, 2), Rational(5, 2), Rational(1)});
  auto r = roots(p, rng);
  std::sort(r.begin(), r.end());
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], Rational(-3));
  EXPECT_EQ(r[1], Rational(0));
  EXPECT_EQ(r[2], Rational(1, 2));
  auto [g, u, v] = poly_ext_gcd(p, Poly<RationalField>(Q, {Rational(3), Rational(1)}));
  EXPECT_EQ(g.degree(), 1);
  EXPECT_EQ(u * p + v * Poly<RationalField>(Q, {Rational(3), Rational(1)}), g);
  PrimeField big(1000003);
  Poly<PrimeField> fp(big, {big.from_int(6), big.from_int(-5), big.one()});  // (t-2)(t-3)
  auto fr = roots(fp, rng);
  ASSERT_EQ(fr.size(), 2u);
  EXPECT_EQ(fr[0].value(), 2u);
  EXPECT_EQ(fr[1].value(), 3u);
}
