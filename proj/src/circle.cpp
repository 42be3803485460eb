#include "ap3/circle.hpp"

#include <stdexcept>

namespace ap3 {

Rational circle_arc(const Rational& s, const Rational& t) {
  const Rational diff = (s - t).mod1();  // in [0,1)
  const Rational comp = Rational(1) - diff;
  return diff <= comp ? diff : comp;
}

Rational arc_midpoint(const Rational& a, const Rational& b) {
  const Rational span = (b - a).mod1();  // counterclockwise length of C_{a,b}
  if (span.is_zero()) throw std::invalid_argument("arc midpoint needs two distinct points");
  return (a + span.half()).mod1();
}

Rational rotate(const Rational& t, const Rational& by) { return (t + by).mod1(); }

Rational reflect(const Rational& t, const Rational& axis) { return (axis.twice() - t).mod1(); }

Rational antipode(const Rational& t) { return (t + Rational(1, 2)).mod1(); }

Rational half_step(int n) {
  if (n <= 0) throw std::invalid_argument("half step needs n >= 1");
  return Rational(1, 2LL * n);
}

Point equator_embed(const Rational& turn) { return equator_point(turn); }

}  // namespace ap3
