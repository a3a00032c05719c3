#pragma once

// Exhaustive bijection search used as ground truth for isomorphism and
// automorphism counts on small graphs.

#include <cstdint>
#include <vector>

#include "arcgraph/graph.hpp"

namespace oracle {

namespace detail {

inline std::vector<arcgraph::Point> bfs_order(const arcgraph::Graph &g) {
  std::vector<arcgraph::Point> order;
  std::vector<char> seen(g.order(), 0);
  for (arcgraph::Point s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (arcgraph::Point v : g.neighbors(order[i]))
        if (!seen[v]) {
          seen[v] = 1;
          order.push_back(v);
        }
  }
  return order;
}

// Counts bijections a -> b preserving adjacency and non-adjacency; stops once
// `limit` maps are found.
inline std::uint64_t count_maps(const arcgraph::Graph &a, const arcgraph::Graph &b,
                                std::uint64_t limit) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size())
    return 0;
  auto order = bfs_order(a);
  std::vector<std::int64_t> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t found = 0;
  auto consistent = [&](arcgraph::Point u, arcgraph::Point x) {
    if (a.degree(u) != b.degree(x))
      return false;
    for (arcgraph::Point w = 0; w < n; ++w)
      if (map[w] >= 0 &&
          a.has_edge(u, w) != b.has_edge(x, static_cast<arcgraph::Point>(map[w])))
        return false;
    return true;
  };
  auto rec = [&](auto &self, std::size_t depth) -> void {
    if (found >= limit)
      return;
    if (depth == n) {
      ++found;
      return;
    }
    arcgraph::Point u = order[depth];
    for (arcgraph::Point x = 0; x < n; ++x) {
      if (used[x] || !consistent(u, x))
        continue;
      map[u] = x;
      used[x] = 1;
      self(self, depth + 1);
      map[u] = -1;
      used[x] = 0;
    }
  };
  rec(rec, 0);
  return found;
}

} // namespace detail

inline bool brute_isomorphic(const arcgraph::Graph &a, const arcgraph::Graph &b) {
  return detail::count_maps(a, b, 1) == 1;
}

inline std::uint64_t brute_automorphism_count(const arcgraph::Graph &g) {
  return detail::count_maps(g, g, UINT64_MAX);
}

} // namespace oracle
