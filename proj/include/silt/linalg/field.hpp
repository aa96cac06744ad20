#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "silt/linalg/rational.hpp"

namespace silt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// Element of Z/p. p == 0 marks a default-constructed zero that adopts the
// modulus of whatever it is combined with.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t p) : p_(p) {
    if (p == 0) throw FieldMismatch("modulus must be positive");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  [[nodiscard]] std::uint32_t value() const { return v_; }
  [[nodiscard]] std::uint32_t modulus() const { return p_; }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] std::string str() const { return std::to_string(v_); }

  [[nodiscard]] ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return ModP(x0, p_);
  }

  ModP operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }
  friend ModP operator+(const ModP& a, const ModP& b) {
    std::uint32_t p = common(a, b);
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return make(static_cast<std::uint32_t>(s >= p ? s - p : s), p);
  }
  friend ModP operator-(const ModP& a, const ModP& b) {
    std::uint32_t p = common(a, b);
    return make(a.v_ >= b.v_ ? a.v_ - b.v_ : static_cast<std::uint32_t>(std::uint64_t{a.v_} + p - b.v_), p);
  }
  friend ModP operator*(const ModP& a, const ModP& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return {};
    return make(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % p), p);
  }
  friend ModP operator/(const ModP& a, const ModP& b) {
    common(a, b);
    return a * b.inverse();
  }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }
  friend bool operator==(const ModP& a, const ModP& b) {
    common(a, b);
    return a.v_ == b.v_;
  }

 private:
  static ModP make(std::uint32_t v, std::uint32_t p) {
    ModP r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static std::uint32_t common(const ModP& a, const ModP& b) {
    if (a.p_ == b.p_) return a.p_;
    if (a.p_ == 0 && a.v_ == 0) return b.p_;
    if (b.p_ == 0 && b.v_ == 0) return a.p_;
    throw FieldMismatch("elements of F_" + std::to_string(a.p_) + " and F_" + std::to_string(b.p_) + " mixed");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const ModP& x) { return x.is_zero(); }

struct RationalField {
  using Elem = Rational;

  [[nodiscard]] Elem zero() const { return {}; }
  [[nodiscard]] Elem one() const { return Rational(1); }
  [[nodiscard]] Elem from_int(std::int64_t v) const { return Rational(v); }
  [[nodiscard]] Elem parse(std::string_view s) const { return Rational::parse(s); }
  [[nodiscard]] std::string format(const Elem& x) const { return x.str(); }
  [[nodiscard]] std::uint64_t characteristic() const { return 0; }
  [[nodiscard]] std::string name() const { return "Q"; }
  void check(const Elem&) const {}
  // Uniform integer in [-bound, bound].
  [[nodiscard]] Elem random(std::mt19937_64& rng, std::int64_t bound) const {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    return Rational(d(rng));
  }
  // Size of the sampling set used by random(); enters failure bounds.
  [[nodiscard]] double sample_size(std::int64_t bound) const { return 2.0 * static_cast<double>(bound) + 1.0; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimeField {
  using Elem = ModP;
  std::uint32_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t modulus) : p(modulus) {
    if (!is_prime(modulus)) throw FieldMismatch("F_" + std::to_string(modulus) + ": modulus is not prime");
  }

  [[nodiscard]] Elem zero() const { return p == 0 ? ModP() : ModP(0, p); }
  [[nodiscard]] Elem one() const { return ModP(1, p); }
  [[nodiscard]] Elem from_int(std::int64_t v) const { return ModP(v, p); }
  [[nodiscard]] Elem parse(std::string_view s) const {
    std::string str(s);
    auto slash = str.find('/');
    if (slash != std::string::npos) return parse(str.substr(0, slash)) / parse(str.substr(slash + 1));
    mpz_class z;
    if (z.set_str(str, 10) != 0) throw std::invalid_argument("bad F_p literal '" + str + "'");
    mpz_class r = z % p;
    if (r < 0) r += p;
    return ModP(r.get_si(), p);
  }
  [[nodiscard]] std::string format(const Elem& x) const { return x.str(); }
  [[nodiscard]] std::uint64_t characteristic() const { return p; }
  [[nodiscard]] std::string name() const { return "Fp:" + std::to_string(p); }
  void check(const Elem& x) const {
    if (x.modulus() != p && !(x.modulus() == 0 && x.is_zero()))
      throw FieldMismatch("entry from F_" + std::to_string(x.modulus()) + " in a matrix over F_" + std::to_string(p));
  }
  [[nodiscard]] Elem random(std::mt19937_64& rng, std::int64_t) const {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    return ModP(d(rng), p);
  }
  [[nodiscard]] double sample_size(std::int64_t) const { return static_cast<double>(p); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Elem& a, std::int64_t i) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(i) } -> std::same_as<typename F::Elem>;
  { a + a } -> std::same_as<typename F::Elem>;
  { a * a } -> std::same_as<typename F::Elem>;
  { a / a } -> std::same_as<typename F::Elem>;
  { -a } -> std::same_as<typename F::Elem>;
  { is_zero(a) } -> std::same_as<bool>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

}  // namespace silt
