#pragma once

// Exact rational arithmetic on 64-bit integers with overflow detection.
// All lengths, offsets and Jacobian coordinates in this library are
// Rationals; there is no floating point anywhere in the core.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tbn {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  // Value reduced into [0,1).
  Rational mod1() const { return *this - Rational(floor()); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Canonical serialization, always "num/den".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or a bare integer string.  Anything else (in particular
  // decimal notation) is rejected: exactness is an end-to-end guarantee.
  static Rational parse(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    size_t slash = s.find('/');
    auto parse_int = [&](std::string_view t) -> long long {
      if (t.empty()) fail();
      size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) fail();
      for (size_t k = i; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') fail();
      try {
        return std::stoll(std::string(t));
      } catch (...) {
        fail();
      }
      return 0;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    long long n = parse_int(s.substr(0, slash));
    long long d = parse_int(s.substr(slash + 1));
    return Rational(n, d);
  }

  static long long gcdll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  }
  static long long lcmll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    __int128 l = (__int128)(a / gcdll(a, b)) * b;
    return narrow(l < 0 ? -l : l);
  }

 private:
  static long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational overflow");
    return (long long)v;
  }
  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = gcdll(num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;  // > 0, coprime with num_
};

}  // namespace tbn
