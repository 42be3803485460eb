#include "ap3/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ap3 {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json scalar_to_json(const Rational& r) { return r.str(); }

Rational scalar_from_json(const json& v, const char* what) {
  if (!v.is_string()) {
    throw std::invalid_argument(std::string(what) + " must be a \"p/q\" string");
  }
  return Rational::parse(v.get<std::string>());
}

long long int_from_json(const json& v, const char* what) {
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return v.get<long long>();
}

ordered_json point_to_json(const Space& space, const Point& p) {
  switch (space.kind) {
    case SpaceKind::Line:
      return scalar_to_json(std::get<LinePoint>(p).x);
    case SpaceKind::Euclidean: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : std::get<EuclideanPoint>(p).coords) arr.push_back(scalar_to_json(c));
      return arr;
    }
    case SpaceKind::Circle:
      return scalar_to_json(std::get<CirclePoint>(p).turn);
    case SpaceKind::EquatorPoles: {
      const auto& ep = std::get<EquatorPolesPoint>(p);
      if (ep.is_pole()) return ep.pole() == Pole::North ? "N" : "S";
      return scalar_to_json(ep.turn());
    }
    case SpaceKind::RegularTree: {
      ordered_json arr = ordered_json::array();
      for (int c : std::get<TreePoint>(p).path) arr.push_back(c);
      return arr;
    }
    case SpaceKind::Lattice: {
      ordered_json arr = ordered_json::array();
      for (long long c : std::get<LatticePoint>(p).coords) arr.push_back(c);
      return arr;
    }
    case SpaceKind::FiniteGraph:
      return std::get<GraphPoint>(p).vertex;
    case SpaceKind::RadialPlane: {
      const auto& rp = std::get<RadialPoint>(p);
      return ordered_json::array({scalar_to_json(rp.radius), scalar_to_json(rp.turn)});
    }
    case SpaceKind::CompleteBipartite: {
      const auto& bp = std::get<BipartitePoint>(p);
      return ordered_json::array({bp.side == Side::L ? "L" : "R", bp.index});
    }
  }
  throw std::invalid_argument("unknown space kind");
}

Point point_from_json(const Space& space, const json& v) {
  switch (space.kind) {
    case SpaceKind::Line:
      return line_point(scalar_from_json(v, "line point"));
    case SpaceKind::Euclidean: {
      if (!v.is_array()) throw std::invalid_argument("euclidean point must be an array");
      std::vector<Rational> coords;
      for (const auto& c : v) coords.push_back(scalar_from_json(c, "euclidean coordinate"));
      return euclidean_point(std::move(coords));
    }
    case SpaceKind::Circle:
      return circle_point(scalar_from_json(v, "circle point"));
    case SpaceKind::EquatorPoles: {
      if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "N") return pole_point(Pole::North);
        if (s == "S") return pole_point(Pole::South);
        return equator_point(Rational::parse(s));
      }
      throw std::invalid_argument("equator-poles point must be \"N\", \"S\" or a turn string");
    }
    case SpaceKind::RegularTree: {
      if (!v.is_array()) throw std::invalid_argument("tree point must be an array of child indices");
      std::vector<int> path;
      for (const auto& c : v) path.push_back(static_cast<int>(int_from_json(c, "tree child index")));
      return tree_point(std::move(path));
    }
    case SpaceKind::Lattice: {
      if (!v.is_array()) throw std::invalid_argument("lattice point must be an integer array");
      std::vector<long long> coords;
      for (const auto& c : v) coords.push_back(int_from_json(c, "lattice coordinate"));
      return lattice_point(std::move(coords));
    }
    case SpaceKind::FiniteGraph:
      return graph_point(static_cast<int>(int_from_json(v, "graph vertex id")));
    case SpaceKind::RadialPlane: {
      if (!v.is_array() || v.size() != 2) {
        throw std::invalid_argument("radial point must be a [radius, turn] pair");
      }
      return radial_point(scalar_from_json(v[0], "radial radius"),
                          scalar_from_json(v[1], "radial turn"));
    }
    case SpaceKind::CompleteBipartite: {
      if (!v.is_array() || v.size() != 2 || !v[0].is_string()) {
        throw std::invalid_argument("bipartite point must be [\"L\"|\"R\", index]");
      }
      const std::string side = v[0].get<std::string>();
      if (side != "L" && side != "R") {
        throw std::invalid_argument("bipartite side must be \"L\" or \"R\"");
      }
      return bipartite_point(side == "L" ? Side::L : Side::R,
                             int_from_json(v[1], "bipartite index"));
    }
  }
  throw std::invalid_argument("unknown space kind");
}

}  // namespace

ordered_json space_to_json(const Space& space) {
  ordered_json doc;
  doc["kind"] = space_kind_name(space.kind);
  switch (space.kind) {
    case SpaceKind::Euclidean:
    case SpaceKind::Lattice:
      doc["dim"] = space.dim;
      break;
    case SpaceKind::RegularTree:
      doc["degree"] = space.degree;
      break;
    case SpaceKind::FiniteGraph: {
      doc["vertices"] = space.vertex_count;
      ordered_json edges = ordered_json::array();
      for (const auto& [u, v] : space.edges) edges.push_back({u, v});
      doc["edges"] = std::move(edges);
      break;
    }
    default:
      break;
  }
  return doc;
}

Space space_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw std::invalid_argument("space descriptor needs a \"kind\" string");
  }
  const std::string kind = doc["kind"].get<std::string>();
  const auto require_int = [&doc](const char* field) {
    if (!doc.contains(field)) {
      throw std::invalid_argument(std::string("space descriptor missing \"") + field + "\"");
    }
    return static_cast<int>(int_from_json(doc[field], field));
  };
  if (kind == "line") return Space::line();
  if (kind == "euclidean") return Space::euclidean(require_int("dim"));
  if (kind == "circle") return Space::circle();
  if (kind == "equator-poles") return Space::equator_poles();
  if (kind == "regular-tree") return Space::regular_tree(require_int("degree"));
  if (kind == "lattice") return Space::lattice(require_int("dim"));
  if (kind == "finite-graph") {
    const int vertices = require_int("vertices");
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
      throw std::invalid_argument("finite-graph descriptor needs an \"edges\" array");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("graph edge must be a [u,v] pair");
      }
      edges.emplace_back(static_cast<int>(int_from_json(e[0], "edge endpoint")),
                         static_cast<int>(int_from_json(e[1], "edge endpoint")));
    }
    return Space::finite_graph(vertices, std::move(edges));
  }
  if (kind == "radial-plane") return Space::radial_plane();
  if (kind == "complete-bipartite") return Space::complete_bipartite();
  throw std::invalid_argument("unknown space kind '" + kind + "'");
}

ordered_json pointset_to_json(const PointSet& A) {
  ordered_json doc;
  doc["space"] = space_to_json(A.space());
  ordered_json pts = ordered_json::array();
  for (const Point& p : A.points()) pts.push_back(point_to_json(A.space(), p));
  doc["points"] = std::move(pts);
  return doc;
}

PointSet pointset_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("space") || !doc.contains("points")) {
    throw std::invalid_argument("point set document needs \"space\" and \"points\"");
  }
  const Space space = space_from_json(doc["space"]);
  if (!doc["points"].is_array()) throw std::invalid_argument("\"points\" must be an array");
  std::vector<Point> points;
  points.reserve(doc["points"].size());
  for (const auto& v : doc["points"]) points.push_back(point_from_json(space, v));
  return PointSet(space, std::move(points));
}

std::string write_pointset(const PointSet& A) { return pointset_to_json(A).dump(2) + "\n"; }

PointSet read_pointset(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return pointset_from_json(doc);
}

PointSet load_pointset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_pointset(buffer.str());
}

void save_pointset_file(const PointSet& A, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_pointset(A);
}

}  // namespace ap3
