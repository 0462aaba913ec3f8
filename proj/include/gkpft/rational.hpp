#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkpft {

/// Exact rational over 64-bit integers, always normalized: gcd(|num|, den) = 1
/// and den > 0. Arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    assign(num, den);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
  }

 private:
  using Wide = __int128;

  static Wide wide(std::int64_t v) { return static_cast<Wide>(v); }

  static Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(Wide num, Wide den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Wide g = wide_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr Wide kMax = static_cast<Wide>(INT64_MAX);
    constexpr Wide kMin = static_cast<Wide>(INT64_MIN);
    if (num > kMax || num < kMin || den > kMax) {
      throw std::overflow_error("Rational: 64-bit overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = from_wide(wide(num), wide(den));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gkpft
