#pragma once

// Canonical labelling, automorphism groups, s-arc profiles, local actions and
// arc-regular subgroups.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcgraph/graph.hpp"
#include "arcgraph/perm.hpp"

namespace arcgraph {

struct CanonicalForm {
  std::string certificate; // graph6 of the canonically relabelled graph
  Permutation labeling;    // vertex -> canonical label

  friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) {
    return a.certificate == b.certificate;
  }
};

/// Result of one individualisation-refinement search.
struct SymmetrySearch {
  CanonicalForm canon;
  std::vector<Permutation> generators; // generate Aut(G)
  std::uint64_t aut_order = 1;
  std::vector<Point> first_path;       // a base for Aut(G)
  std::uint64_t nodes = 0;
};

SymmetrySearch symmetry_search(const Graph &g);

CanonicalForm canonical_form(const Graph &g);
bool isomorphic(const Graph &a, const Graph &b);
PermGroup automorphism_group(const Graph &g);

struct SArcLevel {
  std::uint64_t count = 0;
  bool transitive = false;
  bool regular = false;
};

struct SArcProfile {
  std::vector<SArcLevel> levels; // s = 0 .. s_cap
  int s_max_transitive = -1;     // -1 if not even vertex-transitive
  std::uint64_t group_order = 0;
  /// Largest s with regular(s), or -1.
  int s_regular() const;
};

inline constexpr int kDefaultSCap = 7;

/// Errors: Disconnected; InvalidArgument for valency <= 2 or s_cap < 1;
/// NotAutomorphism if a generator of g is not an automorphism.
SArcProfile s_arc_profile(const Graph &gr, const PermGroup &g, int s_cap = kDefaultSCap);
SArcProfile s_arc_profile(const Graph &gr, int s_cap = kDefaultSCap);

/// Number of s-arcs (non-backtracking walks with s steps).
std::uint64_t count_s_arcs(const Graph &g, int s);

struct LocalAction {
  std::size_t degree = 0;
  std::uint64_t order = 0;
  bool transitive = false;
  bool quasiprimitive = false;
  std::string name; // e.g. "C3", "S3"; empty when not named
  PermGroup group;  // on neighbour positions 0..degree-1
};

/// Throws Intransitive unless g is vertex-transitive.
LocalAction local_action(const Graph &gr, const PermGroup &g, Point v);

struct ArcRegularSubgroup {
  PermGroup group;
  Permutation h; // order d, generates the stabiliser of vertex 0
  Permutation a; // involution swapping 0 with its smallest neighbour
};

/// One representative per Aut-conjugacy class of marked arc-regular actions:
/// pairs (h, a) generating an arc-regular subgroup, up to simultaneous
/// conjugation. A subgroup whose generator h is not conjugate to h^-1 by an
/// element fixing a contributes more than one class.
/// Throws BudgetExceeded if Aut(G) has more than `cap` elements.
std::vector<ArcRegularSubgroup>
find_arc_regular_subgroups(const Graph &g, std::size_t cap = kDefaultElementCap);

} // namespace arcgraph
