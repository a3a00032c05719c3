#pragma once

// Symmetric cubic graphs of order kp: feasibility scans and the cyclic-cover
// classification above the p >= c(L) k threshold.

#include <cstdint>
#include <string>
#include <vector>

#include "arcgraph/fp.hpp"
#include "arcgraph/perm.hpp"

namespace arcgraph {

struct Budgets {
  std::size_t max_cosets = fp::kDefaultMaxCosets;
  std::uint64_t max_nodes = fp::kDefaultNodeLimit;
  std::size_t element_cap = kDefaultElementCap;
};

struct ClassifyConfig {
  int k = 0;
  std::uint64_t p = 0;
  int d = 3;
  std::uint64_t c_l = 48; // c(S3)
  Budgets budgets;
};

struct ClassifiedCover {
  std::string graph6; // canonical
  std::size_t order = 0;
  int s = -1;
  std::uint64_t aut_order = 0;
  std::uint64_t zeta = 0;
  std::size_t witness = 0;
  bool structure_ok = false;
};

struct ClassifyReport {
  bool feasible = false;
  std::vector<ClassifiedCover> covers; // sorted by graph6
  bool complete = false;
  std::vector<std::string> notes;
};

/// Throws InvalidArgument unless p is prime, k >= 2 and d = 3;
/// BudgetExceeded from the quotient search.
ClassifyReport classify_order(const ClassifyConfig &cfg);

struct FeasibilityRow {
  int k = 0;
  bool feasible = false;
  std::size_t witness_count = 0;
  bool budget_exceeded = false;
};

/// One row per k in [k_min, k_max]; a budget failure is recorded in its row
/// and the scan continues.
std::vector<FeasibilityRow> feasibility_scan(int k_min, int k_max, const Budgets &b = {});

} // namespace arcgraph
