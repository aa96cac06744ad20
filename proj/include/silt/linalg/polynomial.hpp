#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "silt/linalg/matrix.hpp"

namespace silt {

// Univariate polynomial, coefficients from low to high degree, no trailing zeros.
template <class F>
class Poly {
 public:
  using K = typename F::Elem;

  Poly() = default;
  Poly(F field, std::vector<K> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }
  static Poly constant(const F& f, K v) { return Poly(f, {std::move(v)}); }
  static Poly x(const F& f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly monomial(const F& f, std::size_t deg) {
    std::vector<K> c(deg + 1, f.zero());
    c[deg] = f.one();
    return Poly(f, std::move(c));
  }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<K>& coeffs() const { return c_; }
  [[nodiscard]] K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  [[nodiscard]] K lead() const { return c_.back(); }
  [[nodiscard]] const F& field() const { return field_; }

  [[nodiscard]] K eval(const K& t) const {
    K acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  [[nodiscard]] Poly monic() const {
    if (is_zero()) return *this;
    K inv = lead().inverse();
    std::vector<K> c(c_);
    for (auto& x : c) x = x * inv;
    return Poly(field_, std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<typename F::Elem> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(a.field_, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<typename F::Elem> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(a.field_, std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_, {});
    std::vector<typename F::Elem> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(a.field_, std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Quotient and remainder of a by a nonzero b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const F& f = a.field_;
    std::vector<typename F::Elem> r(a.c_);
    if (r.size() < b.c_.size()) return {Poly(f, {}), a};
    std::vector<typename F::Elem> q(r.size() - b.c_.size() + 1, f.zero());
    auto inv = b.lead().inverse();
    for (std::size_t i = q.size(); i-- > 0;) {
      auto coef = r[i + b.c_.size() - 1] * inv;
      q[i] = coef;
      if (silt::is_zero(coef)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] -= coef * b.c_[j];
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && silt::is_zero(c_.back())) c_.pop_back();
  }

  F field_{};
  std::vector<K> c_;
};

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, u, v) with u a + v b = g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(f, f.one()), s1(f, {});
  Poly<F> t0(f, {}), t1 = Poly<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = r0.lead().inverse();
  auto scale = Poly<F>::constant(f, inv);
  return {r0 * scale, s0 * scale, t0 * scale};
}

template <class F>
Poly<F> poly_powmod(Poly<F> base, mpz_class e, const Poly<F>& mod) {
  const F& f = base.field();
  Poly<F> result = Poly<F>::constant(f, f.one());
  base = divmod(base, mod).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = divmod(result * base, mod).second;
    base = divmod(base * base, mod).second;
    e >>= 1;
  }
  return result;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n, bool& complete) {
  complete = true;
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class d = 2;
  const mpz_class limit = 2000000;
  while (d * d <= n) {
    if (d > limit) {
      complete = false;
      break;
    }
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k) factors.emplace_back(d, k);
    d += (d == 2 ? 1 : 2);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [p, k] : factors) {
    std::size_t cur = divs.size();
    mpz_class pw = 1;
    for (unsigned i = 0; i < k; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < cur; ++j) divs.push_back(divs[j] * pw);
    }
    if (divs.size() > 20000) {
      complete = false;
      break;
    }
  }
  return divs;
}

}  // namespace detail

// Distinct rational roots. Candidates come from the rational root theorem.
inline std::vector<Rational> roots(const Poly<RationalField>& p, std::mt19937_64&) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  auto coeffs = p.coeffs();
  std::size_t low = 0;
  while (is_zero(coeffs[low])) ++low;
  if (low > 0) out.emplace_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
  if (coeffs.size() <= 1) return out;
  mpz_class lcm = 1;
  for (auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (auto& c : coeffs) {
    mpq_class q = c.to_mpq() * lcm;
    ints.push_back(q.get_num());
  }
  bool ok0 = true, ok1 = true;
  auto ps = detail::positive_divisors(ints.front(), ok0);
  auto qs = detail::positive_divisors(ints.back(), ok1);
  Poly<RationalField> reduced(RationalField{}, coeffs);
  std::set<std::pair<mpz_class, mpz_class>> seen;
  for (auto& a : ps)
    for (auto& b : qs) {
      mpq_class cand(a, b);
      cand.canonicalize();
      for (int s : {1, -1}) {
        mpq_class v = s * cand;
        if (!seen.emplace(v.get_num(), v.get_den()).second) continue;
        Rational r(v);
        if (reduced.eval(r).is_zero()) out.push_back(r);
      }
    }
  return out;
}

// Distinct roots in F_p: split gcd(f, x^p - x) with random translates.
inline std::vector<ModP> roots(const Poly<PrimeField>& p, std::mt19937_64& rng) {
  std::vector<ModP> out;
  if (p.degree() <= 0) return out;
  const PrimeField& f = p.field();
  if (f.p < 4096) {
    for (std::uint32_t v = 0; v < f.p; ++v)
      if (is_zero(p.eval(ModP(v, f.p)))) out.emplace_back(v, f.p);
    return out;
  }
  auto X = Poly<PrimeField>::x(f);
  auto xp = poly_powmod(X, mpz_class(f.p), p.monic());
  auto g = poly_gcd(p, xp - X);
  std::vector<Poly<PrimeField>> work{g};
  while (!work.empty()) {
    auto h = work.back();
    work.pop_back();
    if (h.degree() <= 0) continue;
    if (h.degree() == 1) {
      out.push_back(-h.monic().coeff(0));
      continue;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto shift = Poly<PrimeField>(f, {f.random(rng, 0), f.one()});
      auto w = poly_powmod(shift, mpz_class((f.p - 1) / 2), h) - Poly<PrimeField>::constant(f, f.one());
      auto d = poly_gcd(h, w);
      if (d.degree() > 0 && d.degree() < h.degree()) {
        work.push_back(d);
        work.push_back(divmod(h, d).first);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ModP& a, const ModP& b) { return a.value() < b.value(); });
  return out;
}

// Evaluates a polynomial at a square matrix.
template <class F>
Matrix<F> eval_at(const Poly<F>& p, const Matrix<F>& a) {
  const std::size_t n = a.rows();
  Matrix<F> acc(a.field(), n, n);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t j = 0; j < n; ++j) acc(j, j) += p.coeffs()[i];
  }
  return acc;
}

}  // namespace silt
