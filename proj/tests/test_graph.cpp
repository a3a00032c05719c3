#include "doctest.h"

#include <sstream>

#include "arcgraph/error.hpp"
#include "arcgraph/graph.hpp"
#include "oracles/graph_oracles.hpp"

using namespace arcgraph;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (Point i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

ErrorCode code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

} // namespace

TEST_CASE("graph basics") {
  Graph g = petersen();
  CHECK(g.order() == 10);
  CHECK(g.size() == 15);
  CHECK(g.valency() == std::optional<std::size_t>(3));
  CHECK(g.is_connected());
  CHECK(g.has_edge(0, 5));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edges().size() == 15);
  CHECK(Graph::from_edges(10, g.edges()) == g);
  std::vector<Edge> loop{{1, 1}}, dup{{0, 1}, {1, 0}};
  CHECK(code_of([&] { Graph::from_edges(3, loop); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { Graph::from_edges(3, dup); }) == ErrorCode::InvalidArgument);
  CHECK_FALSE(Graph(3).is_connected());
  Permutation rot = Permutation::from_cycles(10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
  CHECK(is_automorphism(g, rot));
  CHECK(g.relabel(rot) == g);
  CHECK_FALSE(is_automorphism(g, Permutation::from_cycles(10, {{0, 5}})));
}

TEST_CASE("coset graph of A4 over a 3-cycle is K4") {
  PermGroup a4(4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                   Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  PermGroupOracle o(a4);
  std::size_t y = o.index_of(Permutation::from_cycles(4, {{0, 1, 2}}));
  std::vector<std::size_t> h = subgroup_closure(o, std::vector<std::size_t>{y});
  std::size_t a = o.index_of(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
  auto cg = coset_graph(o, h, a);
  CHECK(cg.graph.order() == 4);
  CHECK(cg.graph.valency() == std::optional<std::size_t>(3));
  CHECK(oracle::brute_isomorphic(cg.graph, complete(4)));
  CHECK(cg.action.order() == 12);
  for (const auto &p : cg.action.generators())
    CHECK(is_automorphism(cg.graph, p));
  CHECK(point_stabilizer(cg.action, 0).order() == h.size());
  CHECK(cg.cosets[0] == h);

  // Error variants.
  CHECK(code_of([&] { coset_graph(o, h, y); }) == ErrorCode::InvalidArgument);
  std::vector<std::size_t> not_sub{0, y};
  CHECK(code_of([&] { coset_graph(o, not_sub, a); }) == ErrorCode::NotASubgroup);
  std::size_t y2 = o.multiply(a, y);
  CHECK(code_of([&] { coset_graph(o, h, y2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("coset graph of S3 over <y> is the dipole") {
  PermGroup s3(3, {Permutation::from_cycles(3, {{0, 1}}),
                   Permutation::from_cycles(3, {{0, 1, 2}})});
  PermGroupOracle o(s3);
  std::size_t y = o.index_of(Permutation::from_cycles(3, {{0, 1, 2}}));
  std::size_t x = o.index_of(Permutation::from_cycles(3, {{0, 1}}));
  auto h = subgroup_closure(o, std::vector<std::size_t>{y});
  CHECK(code_of([&] { coset_graph(o, h, x); }) == ErrorCode::Multiedge);
}

TEST_CASE("coset graphs of S4 and S5") {
  // S4 over <(0 1 2)> with a = (0 3) gives K4 with valency 3 (2-arc-transitive).
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                   Permutation::from_cycles(4, {{0, 1}})});
  PermGroupOracle o(s4);
  auto h = subgroup_closure(o, std::vector<std::size_t>{
                                   o.index_of(Permutation::from_cycles(4, {{0, 1, 2}})),
                                   o.index_of(Permutation::from_cycles(4, {{0, 1}}))});
  auto cg = coset_graph(o, h, o.index_of(Permutation::from_cycles(4, {{0, 3}})));
  CHECK(oracle::brute_isomorphic(cg.graph, complete(4)));

  // S5 acting on 2-subsets: H = S2 x S3, a = (1 2)(3 4)... gives Petersen.
  PermGroup s5(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                   Permutation::from_cycles(5, {{0, 1}})});
  PermGroupOracle o5(s5);
  auto h5 = subgroup_closure(o5, std::vector<std::size_t>{
                                     o5.index_of(Permutation::from_cycles(5, {{0, 1}})),
                                     o5.index_of(Permutation::from_cycles(5, {{2, 3, 4}})),
                                     o5.index_of(Permutation::from_cycles(5, {{2, 3}}))});
  auto a5 = o5.index_of(Permutation::from_cycles(5, {{0, 2}, {1, 3}}));
  auto pg = coset_graph(o5, h5, a5);
  CHECK(pg.graph.order() == 10);
  CHECK(pg.graph.valency() == std::optional<std::size_t>(3));
  CHECK(oracle::brute_isomorphic(pg.graph, petersen()));
  for (const auto &p : pg.action.generators())
    CHECK(is_automorphism(pg.graph, p));
}

TEST_CASE("quotients and covering projections") {
  Graph p = petersen();
  auto q = quotient_graph(p, PermGroup(10));
  CHECK(q.quotient == p);
  CHECK(q.is_covering);
  CHECK_FALSE(q.multiedge_collapsed);

  // Antipodal quotient of the cube is K4.
  Graph cube = lcf_parse("[3,-3]^4");
  Permutation anti(8);
  {
    // Find the antipodal map: each vertex to the unique vertex at distance 3.
    std::vector<Point> img(8);
    for (Point v = 0; v < 8; ++v) {
      std::vector<int> dist(8, -1);
      std::vector<Point> qv{v};
      dist[v] = 0;
      for (std::size_t i = 0; i < qv.size(); ++i)
        for (Point w : cube.neighbors(qv[i]))
          if (dist[w] < 0) {
            dist[w] = dist[qv[i]] + 1;
            qv.push_back(w);
          }
      for (Point w = 0; w < 8; ++w)
        if (dist[w] == 3)
          img[v] = w;
    }
    anti = Permutation(img);
  }
  auto qc = quotient_graph(cube, PermGroup(8, {anti}));
  CHECK(qc.is_covering);
  CHECK(oracle::brute_isomorphic(qc.quotient, complete(4)));

  // Heawood modulo its rotation C7 collapses onto K2.
  Graph h = lcf_parse("[5,-5]^7");
  std::vector<Point> img(14);
  for (Point v = 0; v < 14; ++v)
    img[v] = (v + 2) % 14;
  auto qh = quotient_graph(h, PermGroup(14, {Permutation(img)}));
  CHECK(qh.quotient.order() == 2);
  CHECK(qh.quotient.size() == 1);
  CHECK_FALSE(qh.is_covering);
  CHECK(qh.multiedge_collapsed);

  CHECK(code_of([&] {
          quotient_graph(p, PermGroup(10, {Permutation::from_cycles(10, {{0, 5}})}));
        }) == ErrorCode::NotAutomorphism);

  std::vector<Point> ident(10);
  for (Point v = 0; v < 10; ++v)
    ident[v] = v;
  CHECK(is_covering_projection(p, p, ident));
  std::vector<Point> bad(10, 0);
  CHECK(code_of([&] { is_covering_projection(p, p, bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("quotient fibres are equal under a semiregular group") {
  Graph m = lcf_parse("[5,-5]^8");
  std::vector<Point> img(16);
  for (Point v = 0; v < 16; ++v)
    img[v] = (v + 4) % 16;
  PermGroup n(16, {Permutation(img)});
  REQUIRE(is_semiregular(n));
  auto q = quotient_graph(m, n);
  std::vector<int> fibre(q.quotient.order(), 0);
  for (Point v : q.projection)
    ++fibre[v];
  for (int f : fibre)
    CHECK(f == 4);
}

TEST_CASE("LCF notation") {
  Graph k4 = lcf_parse("[2]^4");
  CHECK(oracle::brute_isomorphic(k4, complete(4)));
  Graph h = lcf_parse("[5,-5]^7");
  CHECK(h.order() == 14);
  CHECK(h.size() == 21);
  CHECK(lcf_parse(" [ 5 , -5 ] ^ 7 ") == h);
  // Antipodal chords on six vertices: both offsets name the same chord.
  Graph k33 = lcf_parse("[3,-3]^3");
  CHECK(k33.size() == 9);
  CHECK(lcf_parse("[3]^6") == k33);
  for (Point u = 0; u < 6; ++u)
    for (Point v = 0; v < 6; ++v)
      CHECK(k33.has_edge(u, v) == ((u + v) % 2 == 1));

  CHECK(code_of([] { lcf_parse("[1]^6"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { lcf_parse("[0]^4"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { lcf_parse("[2,3]^3"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { lcf_parse("[5,-5"); }) == ErrorCode::Parse);
  CHECK(code_of([] { lcf_parse("5,-5]^7"); }) == ErrorCode::Parse);
  CHECK(code_of([] { lcf_parse("[5,x]^7"); }) == ErrorCode::Parse);
  CHECK(code_of([] { lcf_parse("[]^3"); }) == ErrorCode::Parse);
  CHECK(code_of([] { lcf_parse("[5,-5]^0"); }) == ErrorCode::Parse);

  // The cyclic shift by the period is an automorphism.
  for (const char *code : {"[5,-5]^7", "[5,-9,7,-7,9,-5]^4", "[3,-3]^4"}) {
    Graph g = lcf_parse(code);
    std::size_t n = g.order(), m = 0;
    std::string_view s(code);
    m = static_cast<std::size_t>(std::count(s.begin(), s.end(), ',')) + 1;
    std::vector<Point> img(n);
    for (Point v = 0; v < n; ++v)
      img[v] = static_cast<Point>((v + m) % n);
    CHECK(is_automorphism(g, Permutation(img)));
  }
}

TEST_CASE("graph6 codec") {
  CHECK(graph6_encode(complete(4)) == "C~");
  CHECK(graph6_encode(petersen()) == "IheA@GUAo");
  CHECK(graph6_encode(lcf_parse("[5,-5]^7")) == "MhEGHC@AI?_PC@_G_");
  CHECK(graph6_encode(lcf_parse("[3,-3]^3")) == "ElUg");
  CHECK(graph6_encode(lcf_parse("[5,-5]^8")) == "OhEGHC@AG?_PO@?Ga?K?P");
  CHECK(graph6_decode("IheA@GUAo") == petersen());
  CHECK(graph6_decode(">>graph6<<C~\n") == complete(4));
  CHECK(graph6_decode(graph6_encode(petersen())) == petersen());
  CHECK(graph6_decode("?").order() == 0);
  CHECK(graph6_encode(Graph(0)) == "?");
  CHECK(graph6_encode(Graph(1)) == "@");

  std::vector<Edge> cyc;
  for (Point i = 0; i < 100; ++i)
    cyc.emplace_back(i, (i + 1) % 100);
  Graph c100 = Graph::from_edges(100, cyc);
  std::string e = graph6_encode(c100);
  CHECK(e.substr(0, 4) == "~?@c");
  CHECK(graph6_decode(e) == c100);

  CHECK(graph6_encode(complete(3)) == "Bw");
  CHECK(code_of([] { graph6_decode("Bx"); }) == ErrorCode::Parse);
  CHECK(code_of([] { graph6_decode("C~~"); }) == ErrorCode::Parse);
  CHECK(code_of([] { graph6_decode("C"); }) == ErrorCode::Parse);
  CHECK(code_of([] { graph6_decode(""); }) == ErrorCode::Parse);
  CHECK(code_of([] { graph6_decode("C\x01"); }) == ErrorCode::Parse);
}

TEST_CASE("edge lists") {
  Graph p = petersen();
  std::stringstream ss;
  write_edge_list(ss, p);
  CHECK(read_edge_list(ss) == p);

  std::istringstream in("# a comment\n0 1\n\n1 2 # trailing\n");
  Graph g = read_edge_list(in);
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);

  std::istringstream padded("# n=5\n0 1\n");
  CHECK(read_edge_list(padded).order() == 5);

  std::istringstream bad("0 1 2\n");
  CHECK(code_of([&] { read_edge_list(bad); }) == ErrorCode::Parse);
  std::istringstream junk("zero one\n");
  CHECK(code_of([&] { read_edge_list(junk); }) == ErrorCode::Parse);
  std::istringstream loop("3 3\n");
  CHECK(code_of([&] { read_edge_list(loop); }) == ErrorCode::InvalidArgument);
}
