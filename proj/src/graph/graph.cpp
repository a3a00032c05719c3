#include <algorithm>
#include <numeric>

#include "arcgraph/error.hpp"
#include "arcgraph/graph.hpp"

namespace arcgraph {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (u == v)
      throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto &a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate edge at vertex " + std::to_string(v));
  }
  g.edges_ = edges.size();
  return g;
}

bool Graph::has_edge(Point u, Point v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Point u = 0; u < adj_.size(); ++u)
    for (Point v : adj_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::optional<std::size_t> Graph::valency() const {
  if (adj_.empty())
    return 0;
  std::size_t d = adj_[0].size();
  for (const auto &a : adj_)
    if (a.size() != d)
      return std::nullopt;
  return d;
}

bool Graph::is_connected() const {
  if (adj_.empty())
    return true;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Point> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point u = stack.back();
    stack.pop_back();
    for (Point v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == adj_.size();
}

Graph Graph::relabel(const Permutation &p) const {
  if (p.degree() != order())
    throw Error(ErrorCode::InvalidArgument, "relabelling has wrong degree");
  std::vector<Edge> e;
  for (auto [u, v] : edges())
    e.emplace_back(p[u], p[v]);
  return from_edges(order(), e);
}

bool is_automorphism(const Graph &g, const Permutation &p) {
  if (p.degree() != g.order())
    return false;
  for (Point u = 0; u < g.order(); ++u)
    for (Point v : g.neighbors(u))
      if (!g.has_edge(p[u], p[v]))
        return false;
  return true;
}

CosetGraph coset_graph(const FiniteGroupOracle &g, std::span<const std::size_t> h,
                       std::size_t a) {
  const std::size_t n = g.size();
  std::vector<char> in_h(n, 0);
  for (std::size_t x : h) {
    if (x >= n)
      throw Error(ErrorCode::NotASubgroup, "element index out of range");
    in_h[x] = 1;
  }
  if (h.empty() || !in_h[g.identity()])
    throw Error(ErrorCode::NotASubgroup, "H does not contain the identity");
  std::vector<std::size_t> hs;
  for (std::size_t x = 0; x < n; ++x)
    if (in_h[x])
      hs.push_back(x);
  for (std::size_t x : hs)
    for (std::size_t y : hs)
      if (!in_h[g.multiply(x, y)])
        throw Error(ErrorCode::NotASubgroup, "H is not closed under products");
  if (a >= n)
    throw Error(ErrorCode::InvalidArgument, "a out of range");
  if (in_h[a])
    throw Error(ErrorCode::InvalidArgument, "a lies in H");
  if (!in_h[g.multiply(a, a)])
    throw Error(ErrorCode::InvalidArgument, "a^2 does not lie in H");

  // Core of H: elements all of whose conjugates stay in H.
  std::vector<char> core = in_h;
  const auto gens = g.generators();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x : hs) {
      if (!core[x])
        continue;
      for (std::size_t s : gens)
        if (!core[g.multiply(g.multiply(g.inverse(s), x), s)]) {
          core[x] = 0;
          changed = true;
          break;
        }
    }
  }
  if (std::count(core.begin(), core.end(), 1) > 1)
    throw Error(ErrorCode::Multiedge,
                "H is not core-free; the coset graph would carry multiple edges");

  CosetGraph out;
  std::vector<std::int64_t> coset_of(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] >= 0)
      continue;
    std::vector<std::size_t> c;
    for (std::size_t y : hs) {
      std::size_t e = g.multiply(y, x);
      coset_of[e] = static_cast<std::int64_t>(out.cosets.size());
      c.push_back(e);
    }
    std::sort(c.begin(), c.end());
    out.cosets.push_back(std::move(c));
  }
  const std::size_t m = out.cosets.size();

  std::vector<char> in_d(n, 0);
  std::vector<std::size_t> dset;
  for (std::size_t x : hs)
    for (std::size_t y : hs) {
      std::size_t e = g.multiply(g.multiply(x, a), y);
      if (!in_d[e]) {
        in_d[e] = 1;
        dset.push_back(e);
      }
    }
  for (std::size_t e : dset)
    if (!in_d[g.inverse(e)])
      throw Error(ErrorCode::Internal, "HaH is not closed under inverses");

  std::vector<Edge> edges;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t x = out.cosets[c][0];
    for (std::size_t d : dset) {
      auto c2 = static_cast<std::size_t>(coset_of[g.multiply(d, x)]);
      if (c < c2)
        edges.emplace_back(static_cast<Point>(c), static_cast<Point>(c2));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph::from_edges(m, edges);

  std::vector<Permutation> action_gens;
  for (std::size_t s : gens) {
    std::vector<Point> img(m);
    for (std::size_t c = 0; c < m; ++c)
      img[c] = static_cast<Point>(coset_of[g.multiply(out.cosets[c][0], s)]);
    action_gens.emplace_back(std::move(img));
  }
  out.action = PermGroup::with_known_order(m, std::move(action_gens), n);
  return out;
}

QuotientResult quotient_graph(const Graph &g, const PermGroup &n) {
  if (n.degree() != g.order())
    throw Error(ErrorCode::InvalidArgument, "group degree differs from graph order");
  for (const Permutation &p : n.generators())
    if (!is_automorphism(g, p))
      throw Error(ErrorCode::NotAutomorphism, "generator " + p.to_string() +
                                                  " is not an automorphism");
  QuotientResult r;
  auto orbs = orbits(n);
  r.projection.assign(g.order(), 0);
  for (std::size_t i = 0; i < orbs.size(); ++i)
    for (Point v : orbs[i])
      r.projection[v] = static_cast<Point>(i);
  std::vector<Edge> edges;
  for (Point u = 0; u < g.order(); ++u) {
    std::vector<Point> seen;
    for (Point v : g.neighbors(u)) {
      Point pu = r.projection[u], pv = r.projection[v];
      if (pu == pv || std::find(seen.begin(), seen.end(), pv) != seen.end())
        r.multiedge_collapsed = true;
      seen.push_back(pv);
      if (pu < pv)
        edges.emplace_back(pu, pv);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  r.quotient = Graph::from_edges(orbs.size(), edges);
  r.is_covering = is_covering_projection(g, r.quotient, r.projection);
  return r;
}

bool is_covering_projection(const Graph &g, const Graph &h,
                            std::span<const Point> proj) {
  if (proj.size() != g.order())
    throw Error(ErrorCode::InvalidArgument, "projection has wrong length");
  std::vector<char> hit(h.order(), 0);
  for (Point v : proj) {
    if (v >= h.order())
      throw Error(ErrorCode::InvalidArgument, "projection leaves the target graph");
    hit[v] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw Error(ErrorCode::InvalidArgument, "projection is not surjective");
  std::vector<Point> img;
  for (Point u = 0; u < g.order(); ++u) {
    img.clear();
    for (Point v : g.neighbors(u))
      img.push_back(proj[v]);
    std::sort(img.begin(), img.end());
    auto target = h.neighbors(proj[u]);
    if (!std::equal(img.begin(), img.end(), target.begin(), target.end()))
      return false;
  }
  return true;
}

} // namespace arcgraph
