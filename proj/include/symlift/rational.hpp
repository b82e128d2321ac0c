#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace symlift {

// Exact rational arithmetic on 64-bit numerator/denominator. Values stay
// normalized: gcd(num, den) == 1 and den > 0. Overflow throws instead of
// wrapping, so results are exact or loudly absent.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  Rational operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }

  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  long long floor_int() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  Rational frac() const { return *this - Rational(floor_int()); }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "n" or "n/d".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text));
      return Rational(std::stoll(text.substr(0, slash)),
                      std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    Rational r;
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    r.num_ = checked(n);
    r.den_ = checked(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  static long long checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

}  // namespace symlift
