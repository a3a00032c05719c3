#include "arcgraph/analyze.hpp"
#include "arcgraph/census.hpp"
#include "arcgraph/error.hpp"

namespace arcgraph {
namespace {

Graph complete4() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return Graph::from_edges(4, e);
}

Graph k33() {
  std::vector<Edge> e;
  for (Point i = 0; i < 3; ++i)
    for (Point j = 3; j < 6; ++j)
      e.emplace_back(i, j);
  return Graph::from_edges(6, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Point i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

// Hub i is joined to vertex i of three heptagons with steps 1, 2 and 4.
Graph coxeter() {
  std::vector<Edge> e;
  for (Point i = 0; i < 7; ++i) {
    Point hub = 21 + i;
    for (Point c = 0; c < 3; ++c) {
      Point step = Point{1} << c;
      e.emplace_back(7 * c + i, 7 * c + (i + step) % 7);
      e.emplace_back(7 * c + i, hub);
    }
  }
  return Graph::from_edges(28, e);
}

} // namespace

std::uint64_t NamedGraphRecord::expected_aut_order() const {
  return 3 * (std::uint64_t{1} << (expected_s - 1)) * order;
}

const std::vector<NamedGraphRecord> &census_registry() {
  static const std::vector<NamedGraphRecord> reg{
      {"F004", "K4", 4, 2, "@K4"},
      {"F006", "K3,3", 6, 3, "@K33"},
      {"F008", "cube", 8, 2, "[3,-3]^4"},
      {"F010", "Petersen", 10, 3, "@Petersen"},
      {"F014", "Heawood", 14, 4, "[5,-5]^7"},
      {"F016", "Moebius-Kantor", 16, 2, "[5,-5]^8"},
      {"F018", "Pappus", 18, 3, "[5,7,-7,7,-7,-5]^3"},
      {"F020A", "dodecahedron", 20, 2, "[10,7,4,-4,-7,10,-4,7,-7,4]^2"},
      {"F020B", "Desargues", 20, 3, "[5,-5,9,-9]^5"},
      {"F024", "Nauru", 24, 2, "[5,-9,7,-7,9,-5]^4"},
      {"F028", "Coxeter", 28, 3, "@Coxeter"},
      {"F030", "Tutte 8-cage", 30, 5, "[-13,-9,7,-7,9,13]^5"},
  };
  return reg;
}

const NamedGraphRecord &named_record(const std::string &id) {
  for (const NamedGraphRecord &r : census_registry())
    if (r.id == id)
      return r;
  throw Error(ErrorCode::UnknownId, "no census graph named '" + id + "'");
}

Graph build_named(const std::string &id) {
  const NamedGraphRecord &r = named_record(id);
  Graph g;
  if (r.construction == "@K4")
    g = complete4();
  else if (r.construction == "@K33")
    g = k33();
  else if (r.construction == "@Petersen")
    g = petersen();
  else if (r.construction == "@Coxeter")
    g = coxeter();
  else
    g = lcf_parse(r.construction);
  if (g.order() != r.order || g.valency() != 3u || !g.is_connected())
    throw Error(ErrorCode::Internal, id + " does not build a connected cubic graph of order " +
                                         std::to_string(r.order));
  return g;
}

NamedVerification verify_named(const std::string &id) {
  const NamedGraphRecord &r = named_record(id);
  Graph g = build_named(id);
  SArcProfile prof = s_arc_profile(g);
  NamedVerification v;
  v.id = id;
  v.computed_s = prof.s_regular();
  v.computed_aut_order = prof.group_order;
  v.pass = v.computed_s == r.expected_s && v.computed_s == prof.s_max_transitive &&
           v.computed_aut_order == r.expected_aut_order();
  return v;
}

} // namespace arcgraph
