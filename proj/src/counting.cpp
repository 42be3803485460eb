#include "ap3/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ap3/circle.hpp"
#include "ap3/metric.hpp"
#include "ap3/threading.hpp"
#include "dist_table.hpp"

namespace ap3 {

Ap3Report count_ap3(const PointSet& A) {
  const auto t = detail::build_distance_table(A);
  const std::size_t n = t.n;
  const Rational factor(t.factor);

  Ap3Report rep;
  rep.weights.assign(n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    std::uint64_t w = 0;
    for (std::size_t a = 0; a < n; ++a) {
      const Rational& leg = t.at(a, b);
      const Rational whole = factor * leg;
      for (std::size_t c = 0; c < n; ++c) {
        if (t.at(b, c) == leg && t.at(a, c) == whole) ++w;
      }
    }
    rep.weights[b] = w;
    rep.total += w;
  }
  return rep;
}

namespace {

// Midpoint route for Euclidean sets: (a,b,c) is a 3-AP exactly when b is the
// componentwise midpoint of a and c, so scan ordered pairs and look the
// midpoint up. The pair (a,a) contributes the constant triple at a.
Ap3Report count_euclidean_midpoints(const PointSet& A, int threads) {
  const std::size_t n = A.size();
  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(A[i], i);

  Ap3Report rep;
  rep.weights.assign(n, 0);
  const int workers = std::min<int>(resolve_thread_count(threads), std::max<std::size_t>(n, 1));
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(n, 0));
  fan_out(workers, [&](int w) {
    auto& weights = partial[w];
    for (std::size_t i = w; i < n; i += workers) {
      const auto& a = std::get<EuclideanPoint>(A[i]).coords;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& c = std::get<EuclideanPoint>(A[j]).coords;
        std::vector<Rational> mid(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) mid[k] = (a[k] + c[k]).half();
        const auto it = index.find(Point(EuclideanPoint{std::move(mid)}));
        if (it != index.end()) ++weights[it->second];
      }
    }
  });
  for (const auto& weights : partial) {
    for (std::size_t b = 0; b < n; ++b) rep.weights[b] += weights[b];
  }
  for (std::uint64_t w : rep.weights) rep.total += w;
  return rep;
}

}  // namespace

Ap3Report count_ap3_grouped(const PointSet& A, int threads) {
  if (A.space().kind == SpaceKind::Euclidean) return count_euclidean_midpoints(A, threads);

  const auto table = detail::build_distance_table(A);
  const auto ids = detail::intern_table(table);
  const std::size_t n = ids.n;

  Ap3Report rep;
  rep.weights.assign(n, 0);
  const int workers = std::min<int>(resolve_thread_count(threads), std::max<std::size_t>(n, 1));
  fan_out(workers, [&](int w) {
    std::vector<std::pair<std::int32_t, std::size_t>> by_dist(n);
    for (std::size_t b = w; b < n; b += workers) {
      for (std::size_t j = 0; j < n; ++j) by_dist[j] = {ids.at(b, j), j};
      std::sort(by_dist.begin(), by_dist.end());
      std::uint64_t weight = 0;
      std::size_t lo = 0;
      while (lo < n) {
        std::size_t hi = lo;
        while (hi < n && by_dist[hi].first == by_dist[lo].first) ++hi;
        // Bucket of points at one exact distance from b; a 3-AP through b
        // needs an ordered pair inside it at the doubled distance. The
        // zero-distance bucket is just {b} and yields the constant triple.
        const std::int32_t target = ids.scaled[by_dist[lo].first];
        if (target >= 0) {
          for (std::size_t x = lo; x < hi; ++x) {
            for (std::size_t z = lo; z < hi; ++z) {
              if (ids.at(by_dist[x].second, by_dist[z].second) == target) ++weight;
            }
          }
        }
        lo = hi;
      }
      rep.weights[b] = weight;  // disjoint per worker
    }
  });
  for (std::uint64_t w : rep.weights) rep.total += w;
  return rep;
}

Ap3Report count_ap3_auto(const PointSet& A) {
  return A.size() > 64 ? count_ap3_grouped(A) : count_ap3(A);
}

CirclePairs circle_pairs(const PointSet& A) {
  if (A.space().kind != SpaceKind::Circle) {
    throw std::invalid_argument("circle pair diagnostics need a circle point set");
  }
  const std::size_t n = A.size();
  if (n < 2) throw std::invalid_argument("circle pair diagnostics need at least 2 points");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::get<CirclePoint>(A[i]).turn < std::get<CirclePoint>(A[j]).turn;
  });

  CirclePairs out;
  // In counterclockwise order, positions u < v split the remaining points
  // into gap-1 and n-gap-1 (gap = v-u); the near-even condition is
  // |2*gap - n| <= 1.
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const long long gap = static_cast<long long>(v - u);
      const long long imbalance = 2 * gap - static_cast<long long>(n);
      if (imbalance < -1 || imbalance > 1) continue;
      out.pairs.emplace_back(std::min(order[u], order[v]), std::max(order[u], order[v]));
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());

  std::set<Rational> turns;
  for (std::size_t i = 0; i < n; ++i) turns.insert(std::get<CirclePoint>(A[i]).turn);
  const auto member = [&turns](const Rational& t) { return turns.count(t) > 0; };

  for (const auto& [i, j] : out.pairs) {
    const Rational& a = std::get<CirclePoint>(A[i]).turn;
    const Rational& b = std::get<CirclePoint>(A[j]).turn;
    if (antipode(a) != b) continue;
    bool invariant = true;
    for (const Rational& t : turns) {
      if (!member(reflect(t, a))) {
        invariant = false;
        break;
      }
    }
    if (!invariant) continue;
    if (!member(arc_midpoint(a, b)) || !member(arc_midpoint(b, a))) continue;
    out.pairs0.emplace_back(i, j);
  }
  return out;
}

std::uint64_t equator_count_split(const PointSet& A) {
  if (A.space().kind != SpaceKind::EquatorPoles) {
    throw std::invalid_argument("equator split count needs an equator-poles point set");
  }
  std::vector<Point> equator;
  std::size_t poles = 0;
  for (const Point& p : A.points()) {
    const auto& ep = std::get<EquatorPolesPoint>(p);
    if (ep.is_pole()) {
      ++poles;
    } else {
      equator.push_back(circle_point(ep.turn()));
    }
  }
  const PointSet circle_part(Space::circle(), equator);
  const std::uint64_t base = count_ap3_auto(circle_part).total;

  std::set<Rational> turns;
  for (const Point& p : circle_part.points()) turns.insert(std::get<CirclePoint>(p).turn);
  std::uint64_t antipodal = 0;
  for (const Rational& t : turns) {
    if (turns.count(antipode(t)) > 0) ++antipodal;
  }

  if (poles == 2) return base + 2 * antipodal + 2 * turns.size() + 2;
  return base + poles * antipodal + poles;
}

}  // namespace ap3
