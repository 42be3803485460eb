// Point-set file format: round-trips, canonical scalars, error reporting.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ap3/constructions.hpp"
#include "ap3/counting.hpp"
#include "ap3/io.hpp"
#include "ap3/sampling.hpp"

using namespace ap3;

namespace {

void check_roundtrip(const PointSet& A) {
  const std::string text = write_pointset(A);
  const PointSet back = read_pointset(text);
  REQUIRE(back.size() == A.size());
  CHECK(back.space().kind == A.space().kind);
  for (std::size_t i = 0; i < A.size(); ++i) CHECK(back[i] == A[i]);
  // serialization is canonical, so a second trip is byte-identical
  CHECK(write_pointset(back) == text);
  CHECK(count_ap3(back).total == count_ap3(A).total);
}

}  // namespace

TEST_CASE("round-trip for every space kind") {
  std::mt19937_64 rng(2468);
  check_roundtrip(line_ap(4));
  check_roundtrip(sample_euclidean(3, 5, rng));
  check_roundtrip(evenly_spread(6, Rational(1, 7)));
  check_roundtrip(equator_config(7));
  check_roundtrip(tree_ball(3, 2));
  check_roundtrip(lattice_ball(2, 2));
  check_roundtrip(sample_connected_graph(6, rng));
  check_roundtrip(radial_star(5));
  check_roundtrip(bipartite_split(2, 3));
  check_roundtrip(PointSet(Space::line(), {}));
}

TEST_CASE("round-trip across random sets of all kinds") {
  std::mt19937_64 rng(13579);
  const SpaceKind kinds[] = {SpaceKind::Line,        SpaceKind::Euclidean,
                             SpaceKind::Circle,      SpaceKind::EquatorPoles,
                             SpaceKind::RegularTree, SpaceKind::Lattice,
                             SpaceKind::FiniteGraph, SpaceKind::RadialPlane,
                             SpaceKind::CompleteBipartite};
  for (SpaceKind kind : kinds) {
    CAPTURE(space_kind_name(kind));
    for (int round = 0; round < 3; ++round) {
      check_roundtrip(sample_pointset(kind, 1 + rng() % 9, rng));
    }
  }
}

TEST_CASE("round-trip preserves counts across the whole verify-suite grid") {
  std::vector<PointSet> sets;
  for (int n = 2; n <= 16; ++n) sets.push_back(evenly_spread(n));
  for (int n = 4; n <= 16; n += 4) {
    sets.push_back(f_minus1(n, 0));
    sets.push_back(f_plus1(n, 0));
    sets.push_back(f_plus2(n, 0, 1));
    if (n >= 8) sets.push_back(f_minus2(n, 0, 2));
  }
  for (int r = 2; r <= 5; ++r) {
    for (int d0 = 0; d0 <= 2; ++d0) sets.push_back(tree_ball(r, d0));
  }
  for (int n = 3; n <= 16; ++n) sets.push_back(equator_config(n));
  for (int n = 2; n <= 16; ++n) {
    sets.push_back(bipartite_split(n / 2, n - n / 2));
    sets.push_back(radial_star(n));
    sets.push_back(line_ap(n));
  }
  for (const PointSet& A : sets) {
    const PointSet back = read_pointset(write_pointset(A));
    CHECK(count_ap3(back).total == count_ap3(A).total);
  }
}

TEST_CASE("scalars serialize canonically") {
  const std::string text = write_pointset(
      PointSet(Space::line(), {line_point(Rational(1, 2)), line_point(Rational(-3)),
                               line_point(Rational(10, 4))}));
  CHECK(text.find("\"1/2\"") != std::string::npos);
  CHECK(text.find("\"-3\"") != std::string::npos);
  CHECK(text.find("\"5/2\"") != std::string::npos);  // 10/4 reduced

  // non-canonical input text parses to the same set
  const PointSet from_raw = read_pointset(
      R"({"space":{"kind":"line"},"points":["2/4","-3","10/4"]})");
  CHECK(std::get<LinePoint>(from_raw[0]).x == Rational(1, 2));
}

TEST_CASE("pole and bipartite spellings") {
  const std::string text = write_pointset(equator_config(6));
  CHECK(text.find("\"N\"") != std::string::npos);
  CHECK(text.find("\"S\"") != std::string::npos);
  const std::string bip = write_pointset(bipartite_split(1, 1));
  CHECK(bip.find("\"L\"") != std::string::npos);
  CHECK(bip.find("\"R\"") != std::string::npos);
}

TEST_CASE("malformed JSON reports the byte offset") {
  CHECK_THROWS_WITH_AS(read_pointset("{ \"space\": "), doctest::Contains("byte"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(read_pointset("not json at all"), doctest::Contains("byte"),
                       std::runtime_error);
}

TEST_CASE("structurally bad documents are rejected") {
  CHECK_THROWS_AS(read_pointset(R"({"points":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(read_pointset(R"({"space":{"kind":"moebius"},"points":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_pointset(R"({"space":{"kind":"euclidean"},"points":[]})"),
                  std::invalid_argument);  // missing dim
  CHECK_THROWS_AS(read_pointset(R"({"space":{"kind":"equator-poles"},"points":["Q"]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_pointset(R"({"space":{"kind":"circle"},"points":["0","0"]})"),
                  std::invalid_argument);  // duplicate point
  CHECK_THROWS_AS(
      read_pointset(R"({"space":{"kind":"regular-tree","degree":3},"points":[[0,2]]})"),
      std::invalid_argument);  // child index out of range
  CHECK_THROWS_AS(
      read_pointset(R"({"space":{"kind":"finite-graph","vertices":3,"edges":[[0,1]]},"points":[0]})"),
      std::runtime_error);  // disconnected graph
  CHECK_THROWS_AS(
      read_pointset(R"({"space":{"kind":"complete-bipartite"},"points":[["M",0]]})"),
      std::invalid_argument);
}

TEST_CASE("radial origin is canonicalized on input") {
  const PointSet A = read_pointset(
      R"({"space":{"kind":"radial-plane"},"points":[["0","0"],["1","2/3"]]})");
  CHECK(std::get<RadialPoint>(A[0]).turn == Rational(0));
  // a zero radius forces turn 0, whatever the input says
  const PointSet B = read_pointset(
      R"({"space":{"kind":"radial-plane"},"points":[["0","1/3"]]})");
  CHECK(std::get<RadialPoint>(B[0]).turn == Rational(0));
  // so the origin spelled two ways is a duplicate
  CHECK_THROWS_AS(
      read_pointset(R"({"space":{"kind":"radial-plane"},"points":[["0","0"],["0","1/3"]]})"),
      std::invalid_argument);
}
