// Exact scalars, per-kind distances and the 3-AP predicate.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ap3/metric.hpp"
#include "ap3/rational.hpp"
#include "ap3/sampling.hpp"
#include "ap3/space.hpp"

using namespace ap3;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(a.half().twice() == a);
  CHECK((a + b - b) == a);
  CHECK(Rational(-5, 2).abs() == Rational(5, 2));
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("rational floor and mod1") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).mod1() == Rational(1, 2));
  CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
  CHECK(Rational(3).mod1() == Rational(0));
}

TEST_CASE("distance examples per kind") {
  // circle wrap-around arc
  CHECK(distance(Space::circle(), circle_point(Rational(0)), circle_point(Rational(3, 4))) ==
        Rational(1, 4));
  // lattice L1
  CHECK(distance(Space::lattice(2), lattice_point({0, 0}), lattice_point({2, 2})) == Rational(4));
  // radial plane: different rays go through the origin
  CHECK(distance(Space::radial_plane(), radial_point(Rational(1), Rational(0)),
                 radial_point(Rational(1), Rational(1, 3))) == Rational(2));
  // radial plane: same ray is the line distance
  CHECK(distance(Space::radial_plane(), radial_point(Rational(3), Rational(1, 5)),
                 radial_point(Rational(1), Rational(1, 5))) == Rational(2));
  // radial plane: the origin is on every ray
  CHECK(distance(Space::radial_plane(), radial_point(Rational(0), Rational(0)),
                 radial_point(Rational(5, 2), Rational(3, 7))) == Rational(5, 2));
  // line
  CHECK(distance(Space::line(), line_point(Rational(-2)), line_point(Rational(3))) == Rational(5));
  // euclidean distances are SQUARED
  CHECK(distance(Space::euclidean(2), euclidean_point({Rational(0), Rational(0)}),
                 euclidean_point({Rational(3), Rational(4)})) == Rational(25));
  // equator-poles: pole-pole, pole-equator, equator-equator
  CHECK(distance(Space::equator_poles(), pole_point(Pole::North), pole_point(Pole::South)) ==
        Rational(1, 2));
  CHECK(distance(Space::equator_poles(), pole_point(Pole::North), equator_point(Rational(1, 3))) ==
        Rational(1, 4));
  CHECK(distance(Space::equator_poles(), equator_point(Rational(0)),
                 equator_point(Rational(7, 8))) == Rational(1, 8));
  // regular tree: path metric from root paths
  CHECK(distance(Space::regular_tree(3), tree_point({0, 1}), tree_point({0, 0, 1})) == Rational(3));
  CHECK(distance(Space::regular_tree(3), tree_point({}), tree_point({2, 1, 0})) == Rational(3));
  // complete bipartite
  CHECK(distance(Space::complete_bipartite(), bipartite_point(Side::L, 0),
                 bipartite_point(Side::L, 5)) == Rational(2));
  CHECK(distance(Space::complete_bipartite(), bipartite_point(Side::L, 0),
                 bipartite_point(Side::R, 0)) == Rational(1));
}

TEST_CASE("kind mismatch is rejected") {
  CHECK_THROWS_AS(distance(Space::line(), circle_point(Rational(0)), circle_point(Rational(1, 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(distance(Space::euclidean(2), euclidean_point({Rational(0)}),
                           euclidean_point({Rational(0), Rational(1)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_point(Space::regular_tree(3), tree_point({0, 2})),
                  std::invalid_argument);  // inner fanout is degree-1
  CHECK_THROWS_AS(validate_point(Space::regular_tree(3), tree_point({3})), std::invalid_argument);
}

TEST_CASE("is_ap3 examples") {
  const Space line = Space::line();
  CHECK(is_ap3(line, line_point(Rational(0)), line_point(Rational(1)), line_point(Rational(2))));
  CHECK_FALSE(
      is_ap3(line, line_point(Rational(0)), line_point(Rational(1)), line_point(Rational(3))));
  // constant triples qualify
  CHECK(is_ap3(line, line_point(Rational(5)), line_point(Rational(5)), line_point(Rational(5))));

  const Space circle = Space::circle();
  CHECK(is_ap3(circle, circle_point(Rational(0)), circle_point(Rational(1, 4)),
               circle_point(Rational(1, 2))));

  const Space lattice = Space::lattice(2);
  CHECK(is_ap3(lattice, lattice_point({0, 0}), lattice_point({1, 1}), lattice_point({2, 2})));
  CHECK_FALSE(is_ap3(lattice, lattice_point({0, 0}), lattice_point({1, 1}), lattice_point({2, 0})));
}

TEST_CASE("distance symmetry and identity of indiscernibles on random sets") {
  std::mt19937_64 rng(20260809);
  const SpaceKind kinds[] = {SpaceKind::Line,        SpaceKind::Euclidean,
                             SpaceKind::Circle,      SpaceKind::EquatorPoles,
                             SpaceKind::RegularTree, SpaceKind::Lattice,
                             SpaceKind::FiniteGraph, SpaceKind::RadialPlane,
                             SpaceKind::CompleteBipartite};
  for (SpaceKind kind : kinds) {
    CAPTURE(space_kind_name(kind));
    for (int round = 0; round < 4; ++round) {
      const PointSet A = sample_pointset(kind, 7, rng);
      for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = 0; j < A.size(); ++j) {
          const Rational dij = distance(A.space(), A[i], A[j]);
          CHECK(dij == distance(A.space(), A[j], A[i]));
          CHECK(dij.sign() >= 0);
          CHECK(dij.is_zero() == (i == j));
        }
      }
    }
  }
}

TEST_CASE("triangle inequality holds for every true-metric kind") {
  // Euclidean reports squared distances, so it sits outside this sweep.
  std::mt19937_64 rng(321);
  const SpaceKind kinds[] = {SpaceKind::Line,        SpaceKind::Circle,
                             SpaceKind::EquatorPoles, SpaceKind::RegularTree,
                             SpaceKind::Lattice,      SpaceKind::FiniteGraph,
                             SpaceKind::RadialPlane,  SpaceKind::CompleteBipartite};
  for (SpaceKind kind : kinds) {
    CAPTURE(space_kind_name(kind));
    for (int round = 0; round < 3; ++round) {
      const PointSet A = sample_pointset(kind, 6, rng);
      for (std::size_t a = 0; a < A.size(); ++a) {
        for (std::size_t b = 0; b < A.size(); ++b) {
          for (std::size_t c = 0; c < A.size(); ++c) {
            CHECK(distance(A.space(), A[a], A[c]) <=
                  distance(A.space(), A[a], A[b]) + distance(A.space(), A[b], A[c]));
          }
        }
      }
    }
  }
}

TEST_CASE("is_ap3 reversal symmetry on random triples") {
  std::mt19937_64 rng(7);
  const SpaceKind kinds[] = {SpaceKind::Line,    SpaceKind::Circle,  SpaceKind::Lattice,
                             SpaceKind::RegularTree, SpaceKind::RadialPlane,
                             SpaceKind::Euclidean,   SpaceKind::CompleteBipartite};
  for (SpaceKind kind : kinds) {
    const PointSet A = sample_pointset(kind, 8, rng);
    for (std::size_t a = 0; a < A.size(); ++a) {
      for (std::size_t b = 0; b < A.size(); ++b) {
        for (std::size_t c = 0; c < A.size(); ++c) {
          CHECK(is_ap3(A.space(), A[a], A[b], A[c]) == is_ap3(A.space(), A[c], A[b], A[a]));
        }
      }
    }
  }
}

namespace {

Point midpoint_of(const Point& a, const Point& c) {
  const auto& pa = std::get<EuclideanPoint>(a).coords;
  const auto& pc = std::get<EuclideanPoint>(c).coords;
  std::vector<Rational> mid(pa.size());
  for (std::size_t k = 0; k < pa.size(); ++k) mid[k] = (pa[k] + pc[k]).half();
  return euclidean_point(std::move(mid));
}

bool doubles_to(const Point& a, const Point& b, const Point& c) {
  const auto& pa = std::get<EuclideanPoint>(a).coords;
  const auto& pb = std::get<EuclideanPoint>(b).coords;
  const auto& pc = std::get<EuclideanPoint>(c).coords;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    if (pb[k].twice() != pa[k] + pc[k]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("euclidean is_ap3 is the exact midpoint relation") {
  std::mt19937_64 rng(99);
  for (int dim = 1; dim <= 3; ++dim) {
    const Space space = Space::euclidean(dim);
    for (int round = 0; round < 6; ++round) {
      const PointSet A = sample_euclidean(dim, 6, rng);
      // random triples: both sides agree (usually both false)
      for (std::size_t a = 0; a < A.size(); ++a) {
        for (std::size_t b = 0; b < A.size(); ++b) {
          for (std::size_t c = 0; c < A.size(); ++c) {
            CHECK(is_ap3(space, A[a], A[b], A[c]) == doubles_to(A[a], A[b], A[c]));
          }
        }
      }
      // constructed midpoints: both sides true
      const Point mid = midpoint_of(A[0], A[1]);
      CHECK(is_ap3(space, A[0], mid, A[1]));
      CHECK(doubles_to(A[0], mid, A[1]));
      // equal legs without collinearity must fail
      if (dim == 2) {
        const Point apex = euclidean_point({Rational(1), Rational(5)});
        const Point left = euclidean_point({Rational(0), Rational(0)});
        const Point right = euclidean_point({Rational(2), Rational(0)});
        CHECK_FALSE(is_ap3(space, left, apex, right));
      }
    }
  }
}

TEST_CASE("lattice is_ap3 matches the sign/length characterization exhaustively") {
  const Space space = Space::lattice(2);
  std::vector<Point> box;
  for (long long x = -3; x <= 3; ++x) {
    for (long long y = -3; y <= 3; ++y) box.push_back(lattice_point({x, y}));
  }
  auto l1 = [](const Point& p, const Point& q) {
    const auto& a = std::get<LatticePoint>(p).coords;
    const auto& b = std::get<LatticePoint>(q).coords;
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
  };
  auto between = [](const Point& pa, const Point& pb, const Point& pc) {
    const auto& a = std::get<LatticePoint>(pa).coords;
    const auto& b = std::get<LatticePoint>(pb).coords;
    const auto& c = std::get<LatticePoint>(pc).coords;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((b[i] - a[i]) * (b[i] - c[i]) > 0) return false;
    }
    return true;
  };
  std::size_t ap_count = 0;
  for (const Point& a : box) {
    for (const Point& b : box) {
      for (const Point& c : box) {
        const bool expected = between(a, b, c) && l1(a, b) == l1(b, c);
        const bool got = is_ap3(space, a, b, c);
        if (got) ++ap_count;
        REQUIRE(got == expected);
      }
    }
  }
  CHECK(ap_count > box.size());  // plenty of nonconstant progressions in the box
}

TEST_CASE("circle is_ap3 is invariant under rotation and reflection") {
  std::mt19937_64 rng(1234);
  const Space circle = Space::circle();
  auto turn = [&rng]() {
    const long long q = 1 + static_cast<long long>(rng() % 40);
    return Rational(static_cast<long long>(rng() % q), q);
  };
  for (int round = 0; round < 200; ++round) {
    Rational a = turn(), b = turn(), c = turn(), offset = turn();
    // bias half the rounds towards genuine progressions
    if (round % 2 == 0) {
      const Rational step = turn();
      b = (a + step).mod1();
      c = (a + step.twice()).mod1();
    }
    const bool base = is_ap3(circle, circle_point(a), circle_point(b), circle_point(c));
    const bool rotated = is_ap3(circle, circle_point((a + offset).mod1()),
                                circle_point((b + offset).mod1()),
                                circle_point((c + offset).mod1()));
    const bool mirrored =
        is_ap3(circle, circle_point((-a).mod1()), circle_point((-b).mod1()),
               circle_point((-c).mod1()));
    CHECK(base == rotated);
    CHECK(base == mirrored);
  }
}

TEST_CASE("collinearity is decided exactly") {
  // points on the line y = (2/3)x + 1/7
  std::vector<Point> on_line;
  for (int k = 0; k < 5; ++k) {
    const Rational x(k, 2);
    on_line.push_back(euclidean_point({x, Rational(2, 3) * x + Rational(1, 7)}));
  }
  CHECK(collinear(PointSet(Space::euclidean(2), on_line)));

  auto bent = on_line;
  bent[4] = euclidean_point({Rational(2), Rational(2, 3) * Rational(2) + Rational(1, 7) +
                                              Rational(1, 1000000)});
  CHECK_FALSE(collinear(PointSet(Space::euclidean(2), bent)));

  CHECK(collinear(PointSet(Space::euclidean(3),
                           {euclidean_point({Rational(1), Rational(2), Rational(3)})})));
  CHECK_THROWS_AS(collinear(PointSet(Space::circle(), {circle_point(Rational(0))})),
                  std::invalid_argument);
}

TEST_CASE("point sets reject duplicates and wrong kinds") {
  CHECK_THROWS_AS(PointSet(Space::circle(), {circle_point(Rational(0)),
                                             circle_point(Rational(1))}),  // 1 mod 1 == 0
                  std::invalid_argument);
  CHECK_THROWS_AS(PointSet(Space::circle(), {line_point(Rational(0))}), std::invalid_argument);
  const PointSet empty(Space::line(), {});
  CHECK(empty.size() == 0);
}
