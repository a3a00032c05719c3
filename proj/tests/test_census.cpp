#include "doctest.h"

#include <algorithm>
#include <deque>

#include "arcgraph/analyze.hpp"
#include "arcgraph/census.hpp"
#include "arcgraph/cover.hpp"
#include "arcgraph/error.hpp"
#include "oracles/graph_oracles.hpp"

using namespace arcgraph;

namespace {

std::size_t girth(const Graph &g) {
  std::size_t best = SIZE_MAX;
  for (Point s = 0; s < g.order(); ++s) {
    std::vector<std::size_t> dist(g.order(), SIZE_MAX);
    std::vector<Point> parent(g.order(), s);
    std::deque<Point> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      Point u = q.front();
      q.pop_front();
      for (Point v : g.neighbors(u)) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

} // namespace

TEST_CASE("registry") {
  const auto &reg = census_registry();
  CHECK(reg.size() == 12);
  for (const auto &r : reg) {
    CAPTURE(r.id);
    Graph g = build_named(r.id);
    CHECK(g.order() == r.order);
    CHECK(g.size() == 3 * r.order / 2);
    CHECK(g.is_connected());
    CHECK(r.expected_aut_order() == count_s_arcs(g, r.expected_s));
  }
  CHECK(build_named("F014").size() == 21);
  CHECK(girth(build_named("F028")) == 7);
  CHECK(girth(build_named("F030")) == 8);
  CHECK(girth(build_named("F014")) == 6);
  try {
    build_named("F098B");
    FAIL("expected UnknownId");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::UnknownId);
  }
}

TEST_CASE("verification of every registered graph") {
  const std::vector<std::pair<int, std::uint64_t>> expect{
      {2, 24},  {3, 72},  {2, 48},  {3, 120}, {4, 336}, {2, 96},
      {3, 216}, {2, 120}, {3, 240}, {2, 144}, {3, 336}, {5, 1440}};
  const auto &reg = census_registry();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CAPTURE(reg[i].id);
    auto v = verify_named(reg[i].id);
    CHECK(v.pass);
    CHECK(v.computed_s == expect[i].first);
    CHECK(v.computed_aut_order == expect[i].second);
    Graph g = build_named(reg[i].id);
    if (g.order() <= 20)
      CHECK(oracle::brute_automorphism_count(g) == expect[i].second);
  }
}

TEST_CASE("registry identities") {
  auto f = fp::enumerate_arc_regular_quotients(4, 3);
  REQUIRE(f.size() == 1);
  PermGroupOracle a4(f[0].group);
  std::vector<std::size_t> h{a4.index_of(f[0].h)};
  Graph k4 = coset_graph(a4, subgroup_closure(a4, h), a4.index_of(f[0].a)).graph;
  CHECK(isomorphic(build_named("F004"), k4));

  auto c6 = fp::feasibility(2).witnesses.at(0);
  CHECK(isomorphic(build_named("F014"), build_cover({c6, 7, 2})));
  CHECK(isomorphic(build_named("F006"), lcf_parse("[3,-3]^3")));
  CHECK_FALSE(isomorphic(build_named("F020A"), build_named("F020B")));
}
