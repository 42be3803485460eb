#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ap3/space.hpp"

namespace ap3 {

// Result of counting ordered 3-APs in a point set. Triples are ordered and
// constant triples count, so total >= |A| always. weights[b] is the number of
// 3-APs whose middle element is the b-th point of the set; the weight map is
// keyed by point index to avoid hashing points. Identities that always hold
// (and that the test suites verify): total = sum of weights, every weight is
// odd, total - |A| is even.
struct Ap3Report {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> weights;
};

// Reference counter: the naive scan over all |A|^3 ordered triples, testing
// the 3-AP relation on exact distances. Kept permanently as the oracle every
// faster path is checked against.
Ap3Report count_ap3(const PointSet& A);

// Fast counter with identical output. For each middle point b it buckets the
// set by exact distance from b and scans each bucket for pairs at the doubled
// distance; for Euclidean it counts ordered pairs whose exact midpoint lies
// in the set instead. threads = 0 resolves AP3LAB_THREADS / hardware.
Ap3Report count_ap3_grouped(const PointSet& A, int threads = 0);

// Grouped counter for large sets, naive scan otherwise.
Ap3Report count_ap3_auto(const PointSet& A);

// Circle diagnostics. pairs holds every unordered pair {a,b} that splits the
// rest of the set almost evenly between the two open arcs (the two counts
// differ by at most 1). pairs0 is the subset of antipodal pairs whose common
// reflection leaves the set invariant and whose two arc midpoints both lie in
// the set. Pairs are reported as (i,j) index pairs with i < j, sorted.
struct CirclePairs {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs0;
};

// Requires a circle point set with at least 2 points.
CirclePairs circle_pairs(const PointSet& A);

// Counts 3-APs of an equator-poles set through the equator/pole split:
// the circle count of the equator part, plus the pole-mediated progressions
// (one per pole per antipodal equator pair), plus the pole-to-pole
// progressions through every equator point when both poles are present,
// plus the constant triples of the poles. Independent route used to
// cross-check the direct counters.
std::uint64_t equator_count_split(const PointSet& A);

}  // namespace ap3
