#pragma once

#include "ap3/rational.hpp"
#include "ap3/space.hpp"

namespace ap3 {

// Generators for the extremal witness sets. Each generator validates its
// parameters and throws std::invalid_argument naming the violated condition.
// Outputs are canonical representatives (offset 0, anchor index 0 by default);
// the families are closed under rotation, so parameters select other members.

// Integer points 0..n-1 on the line.
PointSet line_ap(int n);

// n points evenly spread around the circle: turns offset + k/n. Needs n >= 2.
PointSet evenly_spread(int n, const Rational& offset = Rational(0));

// The four perturbed circle families. All need n > 0 divisible by 4.
// f_minus1: an evenly spread n-set minus the point at drop_index.
PointSet f_minus1(int n, int drop_index);
// f_minus2: minus two points at most a quarter turn apart whose two arc
// midpoints stay in the set (their index gap must be even and within n/4).
PointSet f_minus2(int n, int i, int j);
// f_plus1: plus the point half a grid step behind anchor_index, so the
// half-step rotation carries it back into the evenly spread set.
PointSet f_plus1(int n, int anchor_index);
// f_plus2: plus two such half-step points whose mutual arc midpoints already
// lie in the evenly spread set (their anchor gap must be odd).
PointSet f_plus2(int n, int anchor_i, int anchor_j);

// Ball of radius d0 around the root of the r-regular tree. r >= 2, d0 >= 0.
PointSet tree_ball(int degree, int d0);

// Ball of L1 radius d0 around the origin of the dim-dimensional lattice.
PointSet lattice_ball(int dim, int d0);

// nl left and nr right points of the complete bipartite space.
PointSet bipartite_split(int nl, int nr);

// Origin plus n-1 unit-radius points at distinct turns in the radial plane.
// Needs n >= 1.
PointSet radial_star(int n);

// Both poles plus the extremal equator configuration for n total points:
// the equator part is the size n-2 circle witness matching n mod 4
// (an evenly spread set, or a one-point perturbation of one). Needs n >= 3.
PointSet equator_config(int n);

}  // namespace ap3
