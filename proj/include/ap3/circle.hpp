#pragma once

#include "ap3/rational.hpp"
#include "ap3/space.hpp"

namespace ap3 {

// Circle helpers. All angles are turns (fractions of a revolution), reduced
// into [0,1) on output. The circle metric in these units is
// arc(s,t) = min(|s-t|, 1-|s-t|), with values in [0, 1/2].

Rational circle_arc(const Rational& s, const Rational& t);

// Midpoint of the open counterclockwise arc from a to b. Orientation matters:
// arc_midpoint(a,b) and arc_midpoint(b,a) are the two distinct candidates.
// Throws std::invalid_argument when a = b (mod 1).
Rational arc_midpoint(const Rational& a, const Rational& b);

Rational rotate(const Rational& t, const Rational& by);           // (t + by) mod 1
Rational reflect(const Rational& t, const Rational& axis);        // (2*axis - t) mod 1
Rational antipode(const Rational& t);                             // (t + 1/2) mod 1

// Rotation step of the half-grid: 1/(2n) of a turn.
Rational half_step(int n);

// Places a circle position onto the equator of the equator-poles space.
// Injective, and distances of embedded points equal circle distances.
Point equator_embed(const Rational& turn);

}  // namespace ap3
