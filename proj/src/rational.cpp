#include "ap3/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ap3 {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw std::invalid_argument("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  // mpq set_str accepts "p" and "p/q"; reject anything it cannot parse.
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + text + "' (expected \"p\" or \"p/q\")");
  }
  if (sgn(v.get_den()) == 0) {
    throw std::invalid_argument("malformed rational '" + text + "' (zero denominator)");
  }
  v.canonicalize();
  return Rational(std::move(v), canonical_tag{});
}

std::string Rational::str() const { return v_.get_str(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_), Rational::canonical_tag{});
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational Rational::mod1() const {
  mpq_class frac = v_ - mpq_class(floor());
  return Rational(std::move(frac), canonical_tag{});
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ap3
