#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ap3 {

// Exact rational scalar backed by GMP. Values are always kept in canonical
// form: lowest terms, positive denominator. Every operation (+, -, *, /,
// halving, doubling, comparisons) is exact; there is no rounding anywhere.
//
// Conversion to double exists only for diagnostics and the one sanctioned
// floating-point routine (growth-exponent regression).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}                 // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(static_cast<long>(n)) {}           // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v);

  // Parses "p/q" or "p" (decimal, optional sign). Throws std::invalid_argument
  // on malformed text or zero denominator.
  static Rational parse(const std::string& text);

  // Canonical serialization: "p/q", or "p" when the denominator is 1.
  // parse(str()) round-trips bit-exactly.
  std::string str() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_)), canonical_tag{}); }
  Rational half() const { return Rational(mpq_class(v_ / 2), canonical_tag{}); }
  Rational twice() const { return Rational(mpq_class(v_ * 2), canonical_tag{}); }

  // Largest integer <= value.
  mpz_class floor() const;
  // Fractional part value - floor(value), always in [0, 1).
  Rational mod1() const;

  double to_double() const { return v_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), canonical_tag{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), canonical_tag{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), canonical_tag{});
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_), canonical_tag{});
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  // GMP arithmetic on canonical operands yields canonical results; this tag
  // skips the redundant re-canonicalization on those paths.
  struct canonical_tag {};
  Rational(mpq_class v, canonical_tag) : v_(std::move(v)) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ap3
