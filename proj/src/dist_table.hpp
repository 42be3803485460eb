#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ap3/metric.hpp"
#include "ap3/rational.hpp"
#include "ap3/space.hpp"

namespace ap3::detail {

// Pairwise exact distances of a point set, row-major, plus the
// whole-to-leg factor of the space (4 for squared Euclidean, else 2).
struct DistanceTable {
  std::size_t n = 0;
  int factor = 2;
  std::vector<Rational> d;

  const Rational& at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
};

inline DistanceTable build_distance_table(const PointSet& A) {
  DistanceTable t;
  t.n = A.size();
  t.factor = ap3_whole_to_leg_factor(A.space().kind);
  t.d.assign(t.n * t.n, Rational(0));
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = i + 1; j < t.n; ++j) {
      Rational dij = distance(A.space(), A[i], A[j]);
      t.d[j * t.n + i] = dij;
      t.d[i * t.n + j] = std::move(dij);
    }
  }
  return t;
}

// Distances compressed to dense ids so inner loops run on plain integers.
// scaled[k] is the id of factor * value(k) when that product is itself a
// realized distance, else -1.
struct InternedTable {
  std::size_t n = 0;
  std::vector<std::int32_t> id;      // n*n, row-major
  std::vector<std::int32_t> scaled;  // per distance id

  std::int32_t at(std::size_t i, std::size_t j) const { return id[i * n + j]; }

  // Ordered 3-AP count within the subset given by point indices.
  std::uint64_t count_subset(const std::vector<std::size_t>& subset) const {
    std::uint64_t total = 0;
    const std::size_t k = subset.size();
    for (std::size_t bi = 0; bi < k; ++bi) {
      const std::size_t b = subset[bi];
      for (std::size_t ai = 0; ai < k; ++ai) {
        const std::size_t a = subset[ai];
        const std::int32_t leg = at(a, b);
        const std::int32_t whole = scaled[leg];
        if (whole < 0) continue;
        for (std::size_t ci = 0; ci < k; ++ci) {
          const std::size_t c = subset[ci];
          if (at(b, c) == leg && at(a, c) == whole) ++total;
        }
      }
    }
    return total;
  }
};

inline InternedTable intern_table(const DistanceTable& t) {
  std::vector<Rational> values(t.d);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const auto id_of = [&values](const Rational& v) -> std::int32_t {
    const auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v) return -1;
    return static_cast<std::int32_t>(it - values.begin());
  };

  InternedTable out;
  out.n = t.n;
  out.id.resize(t.d.size());
  for (std::size_t k = 0; k < t.d.size(); ++k) out.id[k] = id_of(t.d[k]);
  out.scaled.resize(values.size());
  const Rational factor(t.factor);
  for (std::size_t k = 0; k < values.size(); ++k) out.scaled[k] = id_of(factor * values[k]);
  return out;
}

}  // namespace ap3::detail
