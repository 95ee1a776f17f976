#pragma once

// Exact rationals over 64-bit integers, always in lowest terms with a
// positive denominator, so equality is structural. Intermediate products are
// computed in 128 bits; a result that does not fit in 64 bits throws
// std::overflow_error.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mvdual {

namespace detail {
__extension__ using wide_int = __int128;
}  // namespace detail

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::wide_int>(a.num_) * b.den_ + static_cast<detail::wide_int>(b.num_) * a.den_,
                     static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::wide_int>(a.num_) * b.den_ - static_cast<detail::wide_int>(b.num_) * a.den_,
                     static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::wide_int>(a.num_) * b.num_, static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(static_cast<detail::wide_int>(a.num_) * b.den_, static_cast<detail::wide_int>(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational{-num_, den_}; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const detail::wide_int lhs = static_cast<detail::wide_int>(a.num_) * b.den_;
    const detail::wide_int rhs = static_cast<detail::wide_int>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static Rational from_wide(detail::wide_int num, detail::wide_int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    detail::wide_int a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      const detail::wide_int t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr detail::wide_int lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mvdual
