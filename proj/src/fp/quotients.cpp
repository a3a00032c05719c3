#include "arcgraph/error.hpp"
#include "arcgraph/fp.hpp"

namespace arcgraph::fp {
namespace {

bool coset_graph_degenerate(const Permutation &a, const Permutation &h, int d) {
  std::vector<Permutation> hs;
  Permutation p(a.degree());
  for (int i = 0; i < d; ++i) {
    hs.push_back(p);
    p = p * h;
  }
  auto in_h = [&](const Permutation &g) {
    for (const Permutation &x : hs)
      if (x == g)
        return true;
    return false;
  };
  if (in_h(a))
    return true;
  for (int i = 1; i < d; ++i)
    if (in_h(a * hs[static_cast<std::size_t>(i)] * a))
      return true;
  return false;
}

} // namespace

std::vector<MarkedGroup> enumerate_arc_regular_quotients(int k, int d,
                                                         std::uint64_t max_nodes) {
  if (k < 1 || d < 3)
    throw Error(ErrorCode::InvalidArgument, "need k >= 1 and d >= 3");
  const auto n = static_cast<std::size_t>(k) * static_cast<std::size_t>(d);
  std::vector<MarkedGroup> out;
  for (NormalSubgroup &ns : normal_subgroups_of_index(Presentation::universal(d), n,
                                                      max_nodes)) {
    const auto &gens = ns.quotient.generators();
    if (gens[0].order() != 2 || gens[1].order() != static_cast<std::uint64_t>(d))
      continue;
    MarkedGroup m;
    m.a = gens[0];
    m.h = gens[1];
    m.k = k;
    m.d = d;
    m.degenerate = coset_graph_degenerate(m.a, m.h, d);
    m.group = std::move(ns.quotient);
    m.table = std::move(ns.table);
    out.push_back(std::move(m));
  }
  return out;
}

Feasibility feasibility(int k, std::uint64_t max_nodes) {
  if (k < 1)
    throw Error(ErrorCode::InvalidArgument, "k must be positive");
  Feasibility f;
  f.k = k;
  if (k % 2 != 0)
    return f;
  for (MarkedGroup &m : enumerate_arc_regular_quotients(k, 3, max_nodes))
    if (abelian_invariants(m.group) == std::vector<std::uint64_t>{6})
      f.witnesses.push_back(std::move(m));
  f.feasible = !f.witnesses.empty();
  return f;
}

} // namespace arcgraph::fp
