// arcgraph: command-line driver. One JSON document per invocation on stdout
// (or a plain table with --format=text). Exit codes: 0 ok, 1 usage or input
// error, 2 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcgraph/analyze.hpp"
#include "arcgraph/census.hpp"
#include "arcgraph/classify.hpp"
#include "arcgraph/cover.hpp"
#include "arcgraph/error.hpp"

using namespace arcgraph;
using json = nlohmann::ordered_json;

namespace {

struct Output {
  std::string command;
  json params = json::object();
  json results = json::array();
  json extra = json::object(); // command-specific top-level keys
  bool complete = true;
  json notes = json::array();
  bool budget_exceeded = false;
};

void emit(const Output &o, bool text) {
  if (!text) {
    json doc;
    doc["command"] = o.command;
    doc["params"] = o.params;
    doc["results"] = o.results;
    for (auto &[key, val] : o.extra.items())
      doc[key] = val;
    doc["complete"] = o.complete;
    doc["notes"] = o.notes;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << o.command;
  for (auto &[key, val] : o.params.items())
    std::cout << " " << key << "=" << val.dump();
  std::cout << "\n";
  if (!o.results.empty()) {
    std::vector<std::string> cols;
    for (auto &[key, val] : o.results[0].items())
      cols.push_back(key);
    for (const auto &c : cols)
      std::cout << c << "\t";
    std::cout << "\n";
    for (const auto &r : o.results) {
      for (const auto &c : cols) {
        const json &v = r.contains(c) ? r.at(c) : json();
        std::cout << (v.is_string() ? v.get<std::string>() : v.dump()) << "\t";
      }
      std::cout << "\n";
    }
  }
  for (auto &[key, val] : o.extra.items())
    std::cout << key << ": " << val.dump() << "\n";
  std::cout << "complete: " << (o.complete ? "true" : "false") << "\n";
  for (const auto &n : o.notes)
    std::cout << "note: " << n.get<std::string>() << "\n";
}

json cover_json(int k, std::uint64_t p, const ClassifiedCover &c) {
  return json{{"k", k},           {"p", p},
              {"graph6", c.graph6}, {"order", c.order},
              {"s", c.s},          {"aut_order", c.aut_order},
              {"zeta", c.zeta},    {"witness", c.witness},
              {"structure_ok", c.structure_ok}};
}

ClassifiedCover describe_cover(const CoverSpec &spec, std::size_t witness) {
  Graph g = build_cover(spec);
  SymmetrySearch search = symmetry_search(g);
  PermGroup aut = PermGroup::with_known_order(g.order(), search.generators, search.aut_order);
  SArcProfile prof = s_arc_profile(g, aut);
  ClassifiedCover c;
  c.graph6 = search.canon.certificate;
  c.order = g.order();
  c.s = prof.s_regular();
  c.aut_order = prof.group_order;
  c.zeta = spec.zeta;
  c.witness = witness;
  c.structure_ok = structure_report(build_semidirect(spec), g).ok(spec.base.d);
  return c;
}

std::pair<int, int> parse_range(const std::string &r) {
  auto dots = r.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--range", "expected A..B");
  try {
    return {std::stoi(r.substr(0, dots)), std::stoi(r.substr(dots + 2))};
  } catch (const std::exception &) {
    throw CLI::ValidationError("--range", "expected A..B");
  }
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Symmetric cubic graphs of order kp: quotients, covers and census checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  Budgets budgets;
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-cosets", budgets.max_cosets, "largest coset table index");
  app.add_option("--max-nodes", budgets.max_nodes, "quotient search node limit");
  app.add_option("--element-cap", budgets.element_cap, "largest group enumerated");

  Output out;

  auto *feas = app.add_subcommand("feasibility", "which k admit an infinite family");
  int feas_k = 0;
  std::string range;
  auto *fk = feas->add_option("--k", feas_k, "single k")->check(CLI::PositiveNumber);
  auto *fr = feas->add_option("--range", range, "A..B");
  fk->excludes(fr);
  feas->callback([&] {
    if (!*fk && !*fr)
      throw CLI::RequiredError("--k or --range");
    std::vector<FeasibilityRow> rows;
    if (*fk) {
      out.params = {{"k", feas_k}};
      try {
        if (3 * static_cast<std::size_t>(feas_k) > budgets.max_cosets)
          throw Error(ErrorCode::BudgetExceeded, "index exceeds the coset limit");
        auto f = fp::feasibility(feas_k, budgets.max_nodes);
        rows.push_back({feas_k, f.feasible, f.witnesses.size(), false});
      } catch (const Error &e) {
        if (e.code() != ErrorCode::BudgetExceeded)
          throw;
        rows.push_back({feas_k, false, 0, true});
      }
    } else {
      auto [lo, hi] = parse_range(range);
      out.params = {{"k_min", lo}, {"k_max", hi}};
      rows = feasibility_scan(lo, hi, budgets);
    }
    for (const auto &r : rows) {
      json row{{"k", r.k}, {"feasible", r.feasible}, {"witness_count", r.witness_count}};
      if (r.budget_exceeded) {
        row["budget_exceeded"] = true;
        out.complete = false;
        out.budget_exceeded = true;
        out.notes.push_back("k = " + std::to_string(r.k) + ": budget exceeded");
      }
      out.results.push_back(row);
    }
  });

  auto *base = app.add_subcommand("enumerate-base", "arc-regular quotients of C2 * C3 of order 3k");
  int base_k = 0;
  base->add_option("--k", base_k, "k")->required()->check(CLI::PositiveNumber);
  base->callback([&] {
    out.params = {{"k", base_k}};
    if (3 * static_cast<std::size_t>(base_k) > budgets.max_cosets)
      throw Error(ErrorCode::BudgetExceeded, "index exceeds the coset limit");
    for (const auto &m : fp::enumerate_arc_regular_quotients(base_k, 3, budgets.max_nodes)) {
      json row{{"k", base_k},
               {"order", m.group.order()},
               {"abelianization", abelian_invariants(m.group, budgets.element_cap)},
               {"degenerate", m.degenerate}};
      row["witness"] = row["abelianization"] == json::array({6});
      if (!m.degenerate) {
        PermGroupOracle g(m.group, budgets.element_cap);
        std::vector<std::size_t> h{g.index_of(m.h)};
        Graph gr = coset_graph(g, subgroup_closure(g, h), g.index_of(m.a)).graph;
        row["graph6"] = canonical_form(gr).certificate;
      } else {
        row["graph6"] = nullptr;
      }
      row["a"] = m.a.to_string();
      row["h"] = m.h.to_string();
      out.results.push_back(row);
    }
  });

  auto *covers = app.add_subcommand("covers", "cyclic covers of order kp");
  int cov_k = 0;
  std::uint64_t cov_p = 0, cov_zeta = 0;
  covers->add_option("--k", cov_k, "k")->required()->check(CLI::PositiveNumber);
  covers->add_option("--p", cov_p, "prime p")->required();
  auto *cz = covers->add_option("--zeta", cov_zeta, "a fixed cube root of unity mod p");
  covers->callback([&] {
    out.params = {{"k", cov_k}, {"p", cov_p}};
    if (*cz)
      out.params["zeta"] = cov_zeta;
    if (3 * static_cast<std::size_t>(cov_k) > budgets.max_cosets)
      throw Error(ErrorCode::BudgetExceeded, "index exceeds the coset limit");
    std::vector<ClassifiedCover> found;
    if (*cz) {
      auto f = fp::feasibility(cov_k, budgets.max_nodes);
      for (std::size_t i = 0; i < f.witnesses.size(); ++i)
        found.push_back(describe_cover({f.witnesses[i], cov_p, cov_zeta}, i));
    } else {
      auto f = fp::feasibility(cov_k, budgets.max_nodes);
      for (const auto &c : enumerate_covers(cov_k, cov_p, budgets.max_nodes))
        found.push_back(describe_cover({f.witnesses[c.witness], cov_p, c.zeta}, c.witness));
    }
    for (const auto &c : found)
      out.results.push_back(cover_json(cov_k, cov_p, c));
  });

  auto *an = app.add_subcommand("analyze", "symmetry of one graph");
  std::string in_path;
  an->add_option("--in", in_path, "input file")->required();
  auto *g6 = an->add_flag("--graph6", "input is graph6");
  auto *lcf = an->add_flag("--lcf", "input is an LCF code");
  auto *edges = an->add_flag("--edges", "input is an edge list");
  an->callback([&] {
    if (g6->count() + lcf->count() + edges->count() != 1)
      throw CLI::ValidationError("exactly one of --graph6, --lcf, --edges");
    out.params = {{"in", in_path},
                  {"input", *g6 ? "graph6" : *lcf ? "lcf" : "edges"}};
    Graph g;
    if (*edges) {
      std::ifstream in(in_path);
      if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open " + in_path);
      g = read_edge_list(in);
    } else {
      std::string text = slurp(in_path);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.pop_back();
      g = *g6 ? graph6_decode(text) : lcf_parse(text);
    }
    SymmetrySearch search = symmetry_search(g);
    PermGroup aut = PermGroup::with_known_order(g.order(), search.generators, search.aut_order);
    json row{{"graph6", search.canon.certificate},
             {"order", g.order()},
             {"size", g.size()},
             {"aut_order", search.aut_order}};
    auto val = g.valency();
    row["valency"] = val ? json(*val) : json(nullptr);
    if (g.is_connected() && val && *val >= 3) {
      SArcProfile prof = s_arc_profile(g, aut);
      row["s"] = prof.s_regular();
      row["s_max_transitive"] = prof.s_max_transitive;
      if (aut.is_transitive()) {
        LocalAction la = local_action(g, aut, 0);
        row["local_action"] = la.name.empty() ? json(nullptr) : json(la.name);
      }
    } else {
      row["s"] = nullptr;
      out.notes.push_back("s-arc profile needs a connected graph of valency at least 3");
    }
    out.results.push_back(row);
  });

  auto *cv = app.add_subcommand("census-verify", "recompute the registered census graphs");
  std::string cid;
  auto *cid_opt = cv->add_option("--id", cid, "e.g. F014");
  cv->callback([&] {
    std::vector<std::string> ids;
    if (*cid_opt) {
      ids.push_back(cid);
      out.params = {{"id", cid}};
    } else {
      for (const auto &r : census_registry())
        ids.push_back(r.id);
    }
    for (const auto &id : ids) {
      const NamedGraphRecord &r = named_record(id);
      NamedVerification v = verify_named(id);
      out.results.push_back({{"id", id},
                             {"name", r.name},
                             {"graph6", canonical_form(build_named(id)).certificate},
                             {"order", r.order},
                             {"s", v.computed_s},
                             {"aut_order", v.computed_aut_order},
                             {"expected_s", r.expected_s},
                             {"expected_aut_order", r.expected_aut_order()},
                             {"pass", v.pass}});
      if (!v.pass)
        out.complete = false;
    }
  });

  auto *cl = app.add_subcommand("classify", "symmetric cubic graphs of order kp");
  ClassifyConfig cfg;
  cl->add_option("--k", cfg.k, "k")->required();
  cl->add_option("--p", cfg.p, "prime p")->required();
  cl->callback([&] {
    cfg.budgets = budgets;
    out.params = {{"k", cfg.k}, {"p", cfg.p}, {"d", cfg.d}, {"c_L", cfg.c_l}};
    ClassifyReport rep = classify_order(cfg);
    out.extra["feasible"] = rep.feasible;
    for (const auto &c : rep.covers)
      out.results.push_back(cover_json(cfg.k, cfg.p, c));
    out.complete = rep.complete;
    for (const auto &n : rep.notes)
      out.notes.push_back(n);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const Error &e) {
    std::cerr << "arcgraph: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? 2 : 1;
  }
  out.command = app.get_subcommands().front()->get_name();
  emit(out, format == "text");
  return out.budget_exceeded ? 2 : 0;
}
