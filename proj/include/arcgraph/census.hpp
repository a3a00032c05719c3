#pragma once

// Named symmetric cubic graphs from the Foster census and a verifier that
// recomputes their automorphism group orders and arc-regularity.

#include <cstdint>
#include <string>
#include <vector>

#include "arcgraph/graph.hpp"

namespace arcgraph {

struct NamedGraphRecord {
  std::string id;           // "F014"
  std::string name;         // "Heawood"
  std::size_t order = 0;
  int expected_s = 0;
  std::string construction; // LCF code, or a builder tag starting with '@'

  /// 3 * 2^(s-1) * order: the number of s-arcs of a cubic graph.
  std::uint64_t expected_aut_order() const;
};

const std::vector<NamedGraphRecord> &census_registry();
/// Throws UnknownId.
const NamedGraphRecord &named_record(const std::string &id);
Graph build_named(const std::string &id);

struct NamedVerification {
  std::string id;
  int computed_s = -1;
  std::uint64_t computed_aut_order = 0;
  bool pass = false;
};

NamedVerification verify_named(const std::string &id);

} // namespace arcgraph
