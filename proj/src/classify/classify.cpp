#include <algorithm>

#include "arcgraph/analyze.hpp"
#include "arcgraph/classify.hpp"
#include "arcgraph/cover.hpp"
#include "arcgraph/error.hpp"

namespace arcgraph {
namespace {

void check_index(int k, const Budgets &b) {
  if (3 * static_cast<std::size_t>(k) > b.max_cosets)
    throw Error(ErrorCode::BudgetExceeded,
                "index " + std::to_string(3 * k) + " exceeds the coset limit");
}

} // namespace

ClassifyReport classify_order(const ClassifyConfig &cfg) {
  if (cfg.k < 2)
    throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (cfg.d != 3)
    throw Error(ErrorCode::InvalidArgument, "only cubic graphs (d = 3) are classified");
  if (!is_prime(cfg.p))
    throw Error(ErrorCode::InvalidArgument, std::to_string(cfg.p) + " is not prime");
  check_index(cfg.k, cfg.budgets);

  ClassifyReport rep;
  const auto k = static_cast<std::uint64_t>(cfg.k);
  rep.complete = cfg.p >= cfg.c_l * k;
  fp::Feasibility f = fp::feasibility(cfg.k, cfg.budgets.max_nodes);
  rep.feasible = f.feasible;
  if (!rep.complete)
    rep.notes.push_back("below threshold: exceptional graphs possible, consult census");

  if (cfg.p % 6 != 1) {
    rep.notes.push_back("p is not 1 mod 6: no cyclic covers");
    return rep;
  }
  if ((3 * k) % cfg.p == 0) {
    rep.notes.push_back("p divides 3k: cover construction does not apply");
    return rep;
  }
  for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
    const fp::MarkedGroup &base = f.witnesses[i];
    for (std::uint64_t zeta : roots_of_unity(3, cfg.p)) {
      CoverSpec spec{base, cfg.p, zeta};
      Graph g = build_cover(spec);
      SymmetrySearch search = symmetry_search(g);
      const std::string &cert = search.canon.certificate;
      if (std::any_of(rep.covers.begin(), rep.covers.end(),
                      [&](const ClassifiedCover &c) { return c.graph6 == cert; }))
        continue;
      PermGroup aut = PermGroup::with_known_order(g.order(), search.generators, search.aut_order);
      SArcProfile prof = s_arc_profile(g, aut);
      ClassifiedCover c;
      c.graph6 = cert;
      c.order = g.order();
      c.s = prof.s_regular();
      c.aut_order = prof.group_order;
      c.zeta = zeta;
      c.witness = i;
      c.structure_ok = structure_report(build_semidirect(spec), g).ok(3);
      rep.covers.push_back(std::move(c));
    }
  }
  std::sort(rep.covers.begin(), rep.covers.end(),
            [](const auto &x, const auto &y) { return x.graph6 < y.graph6; });
  if (rep.feasible && rep.covers.empty())
    rep.notes.push_back("feasible but no cover was built");
  return rep;
}

std::vector<FeasibilityRow> feasibility_scan(int k_min, int k_max, const Budgets &b) {
  if (k_min < 2 || k_max < k_min)
    throw Error(ErrorCode::InvalidArgument, "need 2 <= k_min <= k_max");
  std::vector<FeasibilityRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    FeasibilityRow r;
    r.k = k;
    try {
      check_index(k, b);
      fp::Feasibility f = fp::feasibility(k, b.max_nodes);
      r.feasible = f.feasible;
      r.witness_count = f.witnesses.size();
    } catch (const Error &e) {
      if (e.code() != ErrorCode::BudgetExceeded)
        throw;
      r.budget_exceeded = true;
    }
    rows.push_back(r);
  }
  return rows;
}

} // namespace arcgraph
