#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ap3/rational.hpp"

namespace ap3 {

// A closed-form predicted count. ExactMaximum values come with a matching
// generator in the constructions module; LowerBoundWitness values are the
// exact count of a specific witness; UpperBound values cap every set.
enum class PredictionKind { ExactMaximum, LowerBoundWitness, UpperBound };

const char* prediction_kind_name(PredictionKind kind);

struct Prediction {
  std::uint64_t value = 0;
  PredictionKind kind = PredictionKind::UpperBound;
  std::string source;  // short tag naming the formula
};

// Maximum over n-point subsets of the line: ceil(n^2/2).
Prediction mu_line(std::uint64_t n);

// Maximum over n-point subsets of the circle: n^2/2 plus a residue depending
// on n mod 4. n = 2 is the lone special case (only constant triples fit).
Prediction mu_circle(std::uint64_t n);

// Maximum over n-point subsets of the equator-plus-poles sphere subset,
// n >= 2: n^2/2 plus a residue depending on n mod 4.
Prediction mu_equator(std::uint64_t n);

// Cap for spaces where each point pair has at most one middle point:
// n^2 - 2n + 2. Attained by the radial star.
Prediction unique_midpoint_cap(std::uint64_t n);

// Circle caps: n*floor(n/2) + n for every n, and the sharper n^2/2 + 2
// when n mod 4 = 2 (the latter requires n mod 4 = 2).
Prediction circle_cap_general(std::uint64_t n);
Prediction circle_cap_mod2(std::uint64_t n);

// Cap valid in every metric space: 2*floor((n/2)*floor((n-1)/2)*ceil((n-1)/2)) + n.
Prediction general_cap(std::uint64_t n);

// Exact count for a complete bipartite split with part sizes nl, nr:
// (n-2)*nl*nr + n. Balanced parts attain the metric-space maximum order.
Prediction bipartite_exact(std::uint64_t nl, std::uint64_t nr);

// Number of vertices of the radius-d0 ball in the r-regular tree.
std::uint64_t tree_ball_size(int degree, int d0);

// Exact 3-AP count of that ball. For r >= 3 this is the quadratic
// (1/2 + (r-2)^2/(2r^2)) |A|^2 + (2(r-2)/r^2) |A| + 2/r^2, which always
// evaluates to an integer; r = 2 degenerates to the line value on 2*d0+1
// points.
Prediction tree_ball_exact(int degree, int d0);

// Middle-point weight of a ball vertex with d1 levels of headroom below it:
// ((r-1)^(2*d1+1) - 1)/(r-2) for r >= 3, and 2*d1+1 on the path (r = 2).
std::uint64_t tree_weight(int degree, int d1);

// Leading quadratic coefficient of the tree-ball count: 1/2 + (r-2)^2/(2r^2).
Rational tree_limsup_coefficient(int degree);

// Least-squares slope of log(count) against log(size). The single sanctioned
// floating-point computation in the library; everything else is exact.
// Needs at least 2 strictly increasing sizes.
double growth_exponent(const std::vector<std::uint64_t>& sizes,
                       const std::vector<std::uint64_t>& counts);

}  // namespace ap3
