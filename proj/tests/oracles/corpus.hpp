#pragma once

// Small test corpus: named symmetric cubic graphs, assorted small graphs and
// seeded random cubic graphs, each optionally shuffled.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "arcgraph/graph.hpp"

namespace corpus {

struct Entry {
  std::string name;
  arcgraph::Graph graph;
};

inline arcgraph::Graph from_pairs(std::size_t n, std::vector<arcgraph::Edge> e) {
  return arcgraph::Graph::from_edges(n, e);
}

inline arcgraph::Graph cycle(std::size_t n) {
  std::vector<arcgraph::Edge> e;
  for (arcgraph::Point i = 0; i < n; ++i)
    e.emplace_back(i, static_cast<arcgraph::Point>((i + 1) % n));
  return from_pairs(n, e);
}

inline arcgraph::Graph complete(std::size_t n) {
  std::vector<arcgraph::Edge> e;
  for (arcgraph::Point i = 0; i < n; ++i)
    for (arcgraph::Point j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return from_pairs(n, e);
}

inline arcgraph::Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<arcgraph::Edge> e;
  for (arcgraph::Point i = 0; i < a; ++i)
    for (arcgraph::Point j = 0; j < b; ++j)
      e.emplace_back(i, static_cast<arcgraph::Point>(a + j));
  return from_pairs(a + b, e);
}

inline arcgraph::Graph petersen() {
  std::vector<arcgraph::Edge> e;
  for (arcgraph::Point i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from_pairs(10, e);
}

inline arcgraph::Graph prism(std::size_t m) {
  std::vector<arcgraph::Edge> e;
  for (arcgraph::Point i = 0; i < m; ++i) {
    auto j = static_cast<arcgraph::Point>((i + 1) % m);
    e.emplace_back(i, j);
    e.emplace_back(static_cast<arcgraph::Point>(i + m), static_cast<arcgraph::Point>(j + m));
    e.emplace_back(i, static_cast<arcgraph::Point>(i + m));
  }
  return from_pairs(2 * m, e);
}

// Uniform-ish random simple cubic graph via the pairing model (retrying).
inline arcgraph::Graph random_cubic(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  while (true) {
    std::vector<arcgraph::Point> pts;
    for (arcgraph::Point v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k)
        pts.push_back(v);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<arcgraph::Edge> e;
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; i += 2) {
      auto u = std::min(pts[i], pts[i + 1]), v = std::max(pts[i], pts[i + 1]);
      ok = u != v && std::find(e.begin(), e.end(), arcgraph::Edge{u, v}) == e.end();
      e.emplace_back(u, v);
    }
    if (ok)
      return from_pairs(n, e);
  }
}

inline arcgraph::Graph shuffled(const arcgraph::Graph &g, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<arcgraph::Point> img(g.order());
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return g.relabel(arcgraph::Permutation(img));
}

inline std::vector<Entry> small_graphs() {
  using arcgraph::lcf_parse;
  std::vector<Entry> c;
  c.push_back({"empty5", arcgraph::Graph(5)});
  c.push_back({"K1", arcgraph::Graph(1)});
  c.push_back({"K2", complete(2)});
  c.push_back({"P4", from_pairs(4, {{0, 1}, {1, 2}, {2, 3}})});
  c.push_back({"star4", from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})});
  c.push_back({"C5", cycle(5)});
  c.push_back({"C6", cycle(6)});
  c.push_back({"2C3", from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})});
  c.push_back({"K4", complete(4)});
  c.push_back({"K5", complete(5)});
  c.push_back({"K6", complete(6)});
  c.push_back({"K33", complete_bipartite(3, 3)});
  c.push_back({"K24", complete_bipartite(2, 4)});
  c.push_back({"prism3", prism(3)});
  c.push_back({"cube", lcf_parse("[3,-3]^4")});
  c.push_back({"mobius8", lcf_parse("[4]^8")});
  c.push_back({"petersen", petersen()});
  c.push_back({"prism5", prism(5)});
  c.push_back({"frucht", lcf_parse("[-5,-2,-4,2,5,-2,2,5,-2,-5,4,2]")});
  c.push_back({"heawood", lcf_parse("[5,-5]^7")});
  c.push_back({"mobius_kantor", lcf_parse("[5,-5]^8")});
  c.push_back({"prism8", prism(8)});
  c.push_back({"pappus", lcf_parse("[5,7,-7,7,-7,-5]^3")});
  c.push_back({"dodecahedron", lcf_parse("[10,7,4,-4,-7,10,-4,7,-7,4]^2")});
  c.push_back({"desargues", lcf_parse("[5,-5,9,-9]^5")});
  c.push_back({"K44", complete_bipartite(4, 4)});
  c.push_back({"C12", cycle(12)});
  for (unsigned s = 0; s < 6; ++s)
    c.push_back({"random10_" + std::to_string(s), random_cubic(10, 100 + s)});
  for (unsigned s = 0; s < 6; ++s)
    c.push_back({"random16_" + std::to_string(s), random_cubic(16, 200 + s)});
  for (unsigned s = 0; s < 3; ++s)
    c.push_back({"random20_" + std::to_string(s), random_cubic(20, 300 + s)});
  return c;
}

} // namespace corpus
