#pragma once

#include "ap3/rational.hpp"
#include "ap3/space.hpp"

namespace ap3 {

// Exact distance between two points of the space. Symmetric, zero iff the
// points are equal.
//
// Euclidean returns the SQUARED distance (the only way to stay rational);
// every other kind returns the true metric value. The squared form breaks
// the triangle inequality, so Euclidean results must only ever be compared
// through the squared 3-AP relation below.
Rational distance(const Space& space, const Point& p, const Point& q);

// Multiplier f such that (a,b,c) is a 3-AP iff
//   distance(a,b) == distance(b,c)  and  distance(a,c) == f * distance(a,b).
// f = 2 everywhere except Euclidean, where distances are squared and the
// half-distance relation becomes a quarter relation (f = 4).
int ap3_whole_to_leg_factor(SpaceKind kind);

// The 3-term arithmetic progression predicate, evaluated exactly.
// Constant triples (a,a,a) qualify.
bool is_ap3(const Space& space, const Point& a, const Point& b, const Point& c);

// Exact collinearity test for Euclidean point sets (all points on one affine
// line). Used by the rigidity check: a Euclidean n-set can reach the line
// maximum only if it is collinear.
bool collinear(const PointSet& A);

}  // namespace ap3
