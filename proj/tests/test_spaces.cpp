// Finite-graph metric and the circle helper geometry.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ap3/circle.hpp"
#include "ap3/graph.hpp"
#include "ap3/metric.hpp"
#include "ap3/space.hpp"

using namespace ap3;

TEST_CASE("BFS all-pairs shortest paths") {
  SUBCASE("path P3") {
    const auto d = graph_apsp({{0, 1}, {1, 2}}, 3);
    CHECK(d.at(0, 2) == 2);
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(1, 1) == 0);
  }
  SUBCASE("complete bipartite K22") {
    const auto d = graph_apsp({{0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4);
    CHECK(d.at(0, 1) == 2);  // within a side
    CHECK(d.at(2, 3) == 2);
    CHECK(d.at(0, 2) == 1);  // across
  }
  SUBCASE("4-cycle") {
    const auto d = graph_apsp({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4);
    CHECK(d.at(0, 2) == 2);
    CHECK(d.at(1, 3) == 2);
  }
  SUBCASE("symmetry, zero diagonal, triangle inequality") {
    const auto d = graph_apsp({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}}, 5);
    for (int i = 0; i < 5; ++i) {
      CHECK(d.at(i, i) == 0);
      for (int j = 0; j < 5; ++j) {
        CHECK(d.at(i, j) == d.at(j, i));
        for (int k = 0; k < 5; ++k) CHECK(d.at(i, j) <= d.at(i, k) + d.at(k, j));
      }
    }
  }
  SUBCASE("rejects disconnected graphs, self-loops and bad ids") {
    CHECK_THROWS_AS(graph_apsp({{0, 1}}, 3), std::runtime_error);
    CHECK_THROWS_AS(graph_apsp({{0, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(graph_apsp({{0, 5}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Space::finite_graph(4, {{0, 1}, {2, 3}}), std::runtime_error);
  }
}

TEST_CASE("arc midpoint follows the counterclockwise orientation") {
  CHECK(arc_midpoint(Rational(0), Rational(1, 2)) == Rational(1, 4));
  CHECK(arc_midpoint(Rational(1, 2), Rational(0)) == Rational(3, 4));
  CHECK(arc_midpoint(Rational(3, 4), Rational(1, 4)) == Rational(0));
  CHECK_THROWS_AS(arc_midpoint(Rational(1, 3), Rational(1, 3)), std::invalid_argument);

  // The midpoint lies strictly inside the arc and is arc-equidistant from
  // both ends along it.
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const long long q = 2 + static_cast<long long>(rng() % 30);
    const Rational a(static_cast<long long>(rng() % q), q);
    const Rational b(static_cast<long long>(rng() % q), q);
    if (a == b) continue;
    const Rational m = arc_midpoint(a, b);
    const Rational span = (b - a).mod1();
    CHECK((m - a).mod1() == span.half());
    CHECK((b - m).mod1() == span.half());
  }
}

TEST_CASE("rotate, reflect, antipode") {
  CHECK(rotate(Rational(0), Rational(1, 8)) == Rational(1, 8));  // the n=4 half-grid step
  CHECK(half_step(4) == Rational(1, 8));
  CHECK(reflect(Rational(1, 4), Rational(0)) == Rational(3, 4));
  CHECK(antipode(Rational(1, 8)) == Rational(5, 8));
  CHECK(rotate(Rational(7, 8), Rational(1, 4)) == Rational(1, 8));
  CHECK(reflect(reflect(Rational(3, 7), Rational(1, 5)), Rational(1, 5)) == Rational(3, 7));
  CHECK(antipode(antipode(Rational(2, 9))) == Rational(2, 9));
}

TEST_CASE("the two arc midpoints of any pair are antipodal and reflection-fixed") {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 200; ++round) {
    const long long q = 2 + static_cast<long long>(rng() % 40);
    const Rational a(static_cast<long long>(rng() % q), q);
    const Rational b(static_cast<long long>(rng() % q), q);
    if (a == b) continue;
    const Rational m1 = arc_midpoint(a, b);
    const Rational m2 = arc_midpoint(b, a);
    CHECK(antipode(m1) == m2);
    // both midpoints sit on the diameter through m1, so the reflection
    // across that axis fixes them
    CHECK(reflect(m1, m1) == m1);
    CHECK(reflect(m2, m1) == m2);
  }
}

TEST_CASE("for antipodal pairs the endpoint reflection swaps the two arcs") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    const long long q = 2 * (1 + static_cast<long long>(rng() % 20));
    const Rational a(static_cast<long long>(rng() % q), q);
    const Rational b = antipode(a);
    // sample points of the open arc from b to a and reflect through b
    for (int s = 1; s < 8; ++s) {
      const Rational inside = (b + Rational(s, 16)).mod1();  // arc length 1/2
      const Rational image = reflect(inside, b);
      // image must lie strictly inside the arc from a to b
      const Rational pos = (image - a).mod1();
      CHECK(pos.sign() > 0);
      CHECK(pos < Rational(1, 2));
      // and reflecting back returns the original point
      CHECK(reflect(image, b) == inside);
    }
  }
}

TEST_CASE("equator embedding is an isometry onto the equator") {
  CHECK(equator_embed(Rational(0)) == equator_point(Rational(0)));
  CHECK(equator_embed(Rational(1, 4)) == equator_point(Rational(1, 4)));
  CHECK(equator_embed(Rational(1, 2)) == equator_point(Rational(1, 2)));

  std::mt19937_64 rng(11);
  const Space sphere = Space::equator_poles();
  const Space circle = Space::circle();
  for (int round = 0; round < 200; ++round) {
    const long long q = 1 + static_cast<long long>(rng() % 48);
    const Rational s(static_cast<long long>(rng() % q), q);
    const Rational t(static_cast<long long>(rng() % q), q);
    CHECK(distance(sphere, equator_embed(s), equator_embed(t)) ==
          distance(circle, circle_point(s), circle_point(t)));
  }
}
