#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace silt {

// Exact rational. Values whose reduced numerator and denominator fit in
// int64 stay inline; anything larger is held as a shared GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n == INT64_MIN ? 0 : n) {  // NOLINT(google-explicit-constructor)
    if (n == INT64_MIN) *this = from_mpq(mpq_class(mpz_class(static_cast<long>(n))));
  }
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    q.canonicalize();
    *this = from_mpq(q);
  }
  explicit Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    *this = from_mpq(c);
  }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return from_mpq(q);
  }

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }
  [[nodiscard]] mpz_class numerator() const { return to_mpq().get_num(); }
  [[nodiscard]] mpz_class denominator() const { return to_mpq().get_den(); }

  [[nodiscard]] std::string str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (!big_) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return from_mpq(-*big_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) return small(s, 1);
      }
      __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      return reduce128(n, d);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_sub_overflow(a.num_, b.num_, &s) && s != INT64_MIN) return small(s, 1);
      }
      __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      return reduce128(n, d);
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      std::int64_t g1 = std::gcd(a.num_, b.den_);
      std::int64_t g2 = std::gcd(b.num_, a.den_);
      std::int64_t n, d;
      if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
          !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d) && n != INT64_MIN)
        return small(n, d);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.inverse();
  }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (!big_) {
      Rational r;
      r.num_ = num_ < 0 ? -den_ : den_;
      r.den_ = num_ < 0 ? -num_ : num_;
      return r;
    }
    return from_mpq(1 / *big_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational small(std::int64_t n, std::int64_t d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  static Rational from_mpq(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) return small(n.get_si(), d.get_si());
    Rational r;
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const mpq_class>(q);
    return r;
  }

  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational reduce128(__int128 n, __int128 d) {
    if (n == 0) return Rational();
    bool neg = (n < 0) != (d < 0);
    unsigned __int128 un = n < 0 ? static_cast<unsigned __int128>(-n) : static_cast<unsigned __int128>(n);
    unsigned __int128 ud = d < 0 ? static_cast<unsigned __int128>(-d) : static_cast<unsigned __int128>(d);
    unsigned __int128 g = gcd128(un, ud);
    un /= g;
    ud /= g;
    constexpr unsigned __int128 lim = static_cast<unsigned __int128>(INT64_MAX);
    if (un <= lim && ud <= lim) {
      auto sn = static_cast<std::int64_t>(un);
      return small(neg ? -sn : sn, static_cast<std::int64_t>(ud));
    }
    auto to_mpz = [](unsigned __int128 v) {
      mpz_class hi(static_cast<unsigned long>(v >> 64));
      mpz_class lo(static_cast<unsigned long>(v & 0xFFFFFFFFFFFFFFFFULL));
      return mpz_class((hi << 64) + lo);
    };
    mpq_class q(to_mpz(un), to_mpz(ud));
    if (neg) q = -q;
    return from_mpq(q);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace silt
