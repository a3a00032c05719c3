#include <algorithm>

#include "arcgraph/analyze.hpp"
#include "arcgraph/error.hpp"

namespace arcgraph {

int SArcProfile::s_regular() const {
  int s = -1;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i].regular)
      s = static_cast<int>(i);
  return s;
}

std::uint64_t count_s_arcs(const Graph &g, int s) {
  if (s < 0)
    throw Error(ErrorCode::InvalidArgument, "s must be non-negative");
  if (s == 0)
    return g.order();
  // f[arc] = number of s-arcs starting with that arc; arcs indexed by
  // (vertex, neighbour slot).
  std::vector<std::size_t> offset(g.order() + 1, 0);
  for (Point v = 0; v < g.order(); ++v)
    offset[v + 1] = offset[v] + g.degree(v);
  std::vector<std::uint64_t> f(offset.back(), 1), next(offset.back());
  auto slot = [&](Point u, Point v) {
    auto nb = g.neighbors(u);
    return offset[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) -
                                                nb.begin());
  };
  for (int step = 1; step < s; ++step) {
    for (Point u = 0; u < g.order(); ++u)
      for (Point v : g.neighbors(u)) {
        std::uint64_t sum = 0;
        for (Point w : g.neighbors(v))
          if (w != u)
            sum += f[slot(v, w)];
        next[slot(u, v)] = sum;
      }
    f.swap(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t x : f)
    total += x;
  return total;
}

SArcProfile s_arc_profile(const Graph &gr, const PermGroup &g, int s_cap) {
  if (s_cap < 1)
    throw Error(ErrorCode::InvalidArgument, "s_cap must be at least 1");
  if (!gr.is_connected())
    throw Error(ErrorCode::Disconnected, "s-arc profile needs a connected graph");
  auto val = gr.valency();
  if (gr.order() == 0 || (val && *val <= 2))
    throw Error(ErrorCode::InvalidArgument,
                "s-arc profiles are undefined for valency at most 2");
  if (g.degree() != gr.order())
    throw Error(ErrorCode::InvalidArgument, "group degree differs from graph order");
  for (const Permutation &p : g.generators())
    if (!is_automorphism(gr, p))
      throw Error(ErrorCode::NotAutomorphism,
                  "generator " + p.to_string() + " is not an automorphism");

  // Lexicographically first s_cap-arc from vertex 0.
  std::vector<Point> walk{0};
  for (int s = 1; s <= s_cap; ++s) {
    Point cur = walk.back();
    std::optional<Point> prev;
    if (walk.size() >= 2)
      prev = walk[walk.size() - 2];
    std::optional<Point> nxt;
    for (Point w : gr.neighbors(cur))
      if (!prev || w != *prev) {
        nxt = w;
        break;
      }
    if (!nxt)
      break;
    walk.push_back(*nxt);
  }
  std::vector<Point> base;
  std::vector<std::size_t> distinct_upto; // distinct vertices among walk[0..s]
  for (Point v : walk) {
    if (std::find(base.begin(), base.end(), v) == base.end())
      base.push_back(v);
    distinct_upto.push_back(base.size());
  }
  StabChain chain = g.chain_with_base(base);

  SArcProfile prof;
  prof.group_order = chain.order();
  bool all = true;
  for (int s = 0; s <= s_cap; ++s) {
    SArcLevel lv;
    lv.count = count_s_arcs(gr, s);
    if (static_cast<std::size_t>(s) < walk.size()) {
      std::uint64_t stab = chain.stabilizer_order(distinct_upto[static_cast<std::size_t>(s)]);
      lv.transitive = prof.group_order / stab == lv.count;
    }
    lv.regular = lv.transitive && prof.group_order == lv.count;
    all = all && lv.transitive;
    if (all)
      prof.s_max_transitive = s;
    prof.levels.push_back(lv);
  }
  return prof;
}

SArcProfile s_arc_profile(const Graph &gr, int s_cap) {
  if (!gr.is_connected())
    throw Error(ErrorCode::Disconnected, "s-arc profile needs a connected graph");
  return s_arc_profile(gr, automorphism_group(gr), s_cap);
}

LocalAction local_action(const Graph &gr, const PermGroup &g, Point v) {
  if (v >= gr.order())
    throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  if (!g.is_transitive())
    throw Error(ErrorCode::Intransitive, "group is not vertex-transitive");
  auto nb = gr.neighbors(v);
  const std::size_t d = nb.size();
  PermGroup stab = point_stabilizer(g, v);
  std::vector<Permutation> induced;
  for (const Permutation &s : stab.generators()) {
    std::vector<Point> img(d);
    for (std::size_t i = 0; i < d; ++i) {
      auto it = std::lower_bound(nb.begin(), nb.end(), s[nb[i]]);
      if (it == nb.end() || *it != s[nb[i]])
        throw Error(ErrorCode::NotAutomorphism, "stabiliser does not preserve N(v)");
      img[i] = static_cast<Point>(it - nb.begin());
    }
    induced.emplace_back(std::move(img));
  }
  LocalAction la;
  la.degree = d;
  la.group = PermGroup(d, std::move(induced));
  la.order = la.group.order();
  la.transitive = la.group.is_transitive();
  la.quasiprimitive = la.transitive && d > 0 && is_quasiprimitive(la.group);
  if (la.transitive) {
    if (d == 1)
      la.name = "1";
    else if (d == 2)
      la.name = "C2";
    else if (d == 3)
      la.name = la.order == 3 ? "C3" : "S3";
    else if (d == 4) {
      if (la.order == 4) {
        bool cyclic = false;
        for (const Permutation &x : la.group.elements())
          cyclic = cyclic || x.order() == 4;
        la.name = cyclic ? "C4" : "C2xC2";
      } else if (la.order == 8) {
        la.name = "D4";
      } else if (la.order == 12) {
        la.name = "A4";
      } else {
        la.name = "S4";
      }
    }
  }
  return la;
}

std::vector<ArcRegularSubgroup> find_arc_regular_subgroups(const Graph &g,
                                                           std::size_t cap) {
  std::vector<ArcRegularSubgroup> out;
  const std::size_t n = g.order();
  auto val = g.valency();
  if (n == 0 || !val || *val == 0 || !g.is_connected())
    return out;
  const std::size_t d = *val;
  const std::uint64_t target = static_cast<std::uint64_t>(n) * d;
  PermGroup aut = automorphism_group(g);
  if (aut.order() % target != 0)
    return out;
  if (aut.order() > cap)
    throw Error(ErrorCode::BudgetExceeded, "automorphism group of order " +
                                               std::to_string(aut.order()) +
                                               " exceeds element cap");
  const Point w = g.neighbors(0)[0];
  std::vector<Point> base{0, w};
  StabChain chain = aut.chain_with_base(base);
  if (chain.fundamental_orbit(0).size() != n)
    return out;
  std::vector<Permutation> elems = aut.elements(cap);

  std::vector<Permutation> hs, as;
  auto nb0 = g.neighbors(0);
  for (const Permutation &x : elems) {
    if (x[0] == 0 && x.order() == d) {
      bool regular_on_nbrs = true;
      for (Point u : nb0)
        regular_on_nbrs = regular_on_nbrs && x[u] != u;
      if (regular_on_nbrs || d == 1)
        hs.push_back(x);
    }
    if (x[0] == w && x[w] == 0 && (x * x).is_identity())
      as.push_back(x);
  }

  // Marked actions (h, a) are classified up to simultaneous conjugation.
  for (const Permutation &h : hs)
    for (const Permutation &a : as) {
      bool conj = false;
      for (const ArcRegularSubgroup &rep : out) {
        for (const Permutation &x : elems)
          if (h.conjugate_by(x) == rep.h && a.conjugate_by(x) == rep.a) {
            conj = true;
            break;
          }
        if (conj)
          break;
      }
      if (conj)
        continue;
      PermGroup r(n, {h, a});
      if (r.order() == target && r.is_transitive())
        out.push_back({r, h, a});
    }
  return out;
}

} // namespace arcgraph
