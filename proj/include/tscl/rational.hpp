#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "tscl/errors.hpp"

namespace tscl {

using Int = boost::multiprecision::cpp_int;

inline bool is_power_of_two(const Int& x) { return x > 0 && (x & (x - 1)) == 0; }

/*
 * Exact fraction over arbitrary-precision integers, stored in lowest terms
 * with a positive denominator. Equality and ordering are therefore
 * structural; 1/2 and 2/4 normalize to the same value. Breakpoint
 * denominators and Stern-Brocot denominators grow without bound, which is
 * why the integer type is unbounded.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT: implicit by design
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Rational abs(const Rational& a) { return a.numerator() < 0 ? -a : a; }

// Greatest integer <= a (true floor, not truncation).
inline Int floor_int(const Rational& a) {
  Int q = a.numerator() / a.denominator();
  if (a.numerator() < 0 && q * a.denominator() != a.numerator()) --q;
  return q;
}

inline Int ceil_int(const Rational& a) { return -floor_int(-a); }

// Fractional part, always in [0, 1).
inline Rational frac(const Rational& a) { return a - Rational(floor_int(a)); }

inline Rational mediant(const Rational& a, const Rational& b) {
  return Rational(a.numerator() + b.numerator(), a.denominator() + b.denominator());
}

inline bool is_dyadic(const Rational& a) { return is_power_of_two(a.denominator()); }

// True exactly for 2^k, k any integer (so 1/4 qualifies).
inline bool is_power_of_two(const Rational& a) {
  return a.numerator() > 0 && is_power_of_two(a.numerator()) &&
         is_power_of_two(a.denominator());
}

inline std::string to_string(const Rational& a) {
  std::string s = a.numerator().str();
  if (!a.is_integer()) s += "/" + a.denominator().str();
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& a) {
  return os << to_string(a);
}

// Accepts "p/q" or "p", sign on the numerator only.
inline Rational parse_rational(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) throw ParseError("empty rational");
  std::size_t e = text.find_last_not_of(" \t") + 1;
  std::string_view s = text.substr(b, e - b);

  auto bad = [&] { throw ParseError("invalid rational '" + std::string(text) + "'"); };
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '-') {
    neg = true;
    ++i;
  }
  std::size_t d0 = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (d0 == i) bad();
  Int num(std::string(s.substr(d0, i - d0)));
  Int den = 1;
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    std::size_t q0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (q0 == i || i != s.size()) bad();
    den = Int(std::string(s.substr(q0, i - q0)));
    if (den == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
  }
  if (neg) num = -num;
  return Rational(std::move(num), std::move(den));
}

}  // namespace tscl
