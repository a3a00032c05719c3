#pragma once

// Simple undirected graphs, coset graphs, quotients and the LCF / graph6 /
// edge-list codecs.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcgraph/perm.hpp"

namespace arcgraph {

using Edge = std::pair<Point, Point>;

class Graph {
public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n) {}
  /// Throws InvalidArgument on loops, duplicate edges or out-of-range ends.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_; }
  std::span<const Point> neighbors(Point v) const { return adj_[v]; }
  std::size_t degree(Point v) const { return adj_[v].size(); }
  bool has_edge(Point u, Point v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Common degree, or nullopt if the graph is not regular.
  std::optional<std::size_t> valency() const;
  bool is_connected() const;

  /// Image of the graph under the vertex map v -> p[v].
  Graph relabel(const Permutation &p) const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<std::vector<Point>> adj_;
  std::size_t edges_ = 0;
};

bool is_automorphism(const Graph &g, const Permutation &p);

struct CosetGraph {
  Graph graph;
  PermGroup action; // right multiplication of G on the cosets
  /// Element indices of each right coset, cosets ordered by least element.
  std::vector<std::vector<std::size_t>> cosets;
};

/// Gamma(G, H, a): right cosets of H, Hx ~ Hy iff x y^-1 in HaH.
/// Errors: NotASubgroup; InvalidArgument if a in H or a^2 not in H;
/// Multiedge if H is not core-free (G cannot act faithfully, as for the dipole).
CosetGraph coset_graph(const FiniteGroupOracle &g, std::span<const std::size_t> h,
                       std::size_t a);

struct QuotientResult {
  Graph quotient;
  std::vector<Point> projection; // vertex -> orbit index
  bool is_covering = false;
  /// Some vertex has two neighbours in one orbit, or a neighbour in its own.
  bool multiedge_collapsed = false;
};

/// Throws NotAutomorphism if a generator of n is not an automorphism.
QuotientResult quotient_graph(const Graph &g, const PermGroup &n);

/// Throws InvalidArgument unless proj maps V(g) onto V(h).
bool is_covering_projection(const Graph &g, const Graph &h,
                            std::span<const Point> proj);

/// "[j1,...,jm]^r". Errors: Parse for malformed text, InvalidArgument for
/// loops, duplicate edges or a result that is not cubic.
Graph lcf_parse(std::string_view code);

std::string graph6_encode(const Graph &g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph graph6_decode(std::string_view bytes);

/// One "u v" pair per line, 0-based; blank lines and '#' comments ignored.
/// A "# n=<count>" comment fixes the order, otherwise it is max index + 1.
Graph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const Graph &g);

} // namespace arcgraph
