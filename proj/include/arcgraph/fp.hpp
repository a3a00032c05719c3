#pragma once

// Finitely presented groups: coset enumeration, low-index normal subgroups of
// a presentation, and the arc-regular quotients of C2 * C_d.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arcgraph/perm.hpp"

namespace arcgraph::fp {

/// Letters are signed 1-based generator indices: +i is generator i-1 and -i
/// its inverse.
using Letter = int;
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse_word(const Word &w);
/// Generators named x, y, z, ... ; inverses in upper case. "xyYX" etc.
std::string format_word(const Word &w);

struct Presentation {
  std::size_t num_generators = 0;
  std::vector<Word> relators;

  /// C2 * C_d = < x, y | x^2, y^d >.
  static Presentation universal(int d);
  /// Throws InvalidArgument if a relator is empty after free reduction or uses
  /// an unknown generator. Relators are stored freely reduced.
  void validate() const;
};

Presentation make_presentation(std::size_t num_generators,
                               std::vector<Word> relators);

/// Coset table with columns (g0, g0^-1, g1, g1^-1, ...). Coset 0 is the
/// subgroup itself. Undefined entries are -1.
class CosetTable {
public:
  CosetTable() = default;
  CosetTable(std::size_t num_generators, std::size_t index,
             std::vector<std::int32_t> entries);

  std::size_t num_generators() const noexcept { return gens_; }
  std::size_t num_columns() const noexcept { return 2 * gens_; }
  std::size_t index() const noexcept { return index_; }

  static std::size_t column(Letter l) {
    return 2 * (static_cast<std::size_t>(l > 0 ? l : -l) - 1) + (l < 0 ? 1 : 0);
  }

  std::int32_t entry(std::size_t coset, std::size_t col) const {
    return data_[coset * num_columns() + col];
  }
  std::int32_t act(std::size_t coset, Letter l) const {
    return entry(coset, column(l));
  }
  /// Image of `coset` under a word, or -1 if the trace runs off the table.
  std::int32_t trace(std::size_t coset, const Word &w) const;

  bool is_closed() const;
  /// Every relator closes from every coset.
  bool satisfies(const Presentation &p) const;
  /// Permutation of cosets induced by generator g (table must be closed).
  Permutation generator_action(std::size_t g) const;

  const std::vector<std::int32_t> &entries() const noexcept { return data_; }

  friend bool operator==(const CosetTable &, const CosetTable &) = default;
  friend auto operator<=>(const CosetTable &, const CosetTable &) = default;

private:
  std::size_t gens_ = 0;
  std::size_t index_ = 0;
  std::vector<std::int32_t> data_;
};

/// Renumbers a closed table in standard (first-appearance) order from coset 0.
CosetTable standardize(const CosetTable &t);

/// HLT enumeration with lookahead; throws BudgetExceeded if more than
/// `max_cosets` live cosets are needed.
CosetTable todd_coxeter(const Presentation &p, const std::vector<Word> &subgroup,
                        std::size_t max_cosets);

/// Permutation group generated by the generator columns of a closed table.
PermGroup coset_action(const CosetTable &t);

struct NormalSubgroup {
  CosetTable table;   // regular table of the quotient, standard numbering
  PermGroup quotient; // regular permutation image of the quotient group
};

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;
/// Largest coset table (index k*d) the drivers will ask for.
inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Every normal subgroup of index <= max_index, sorted by (index, table).
std::vector<NormalSubgroup>
low_index_normal_subgroups(const Presentation &p, std::size_t max_index,
                           std::uint64_t max_nodes = kDefaultNodeLimit);

/// Every normal subgroup of index exactly `index`, sorted by table.
std::vector<NormalSubgroup>
normal_subgroups_of_index(const Presentation &p, std::size_t index,
                          std::uint64_t max_nodes = kDefaultNodeLimit);

/// A finite group with distinguished generators a (order 2) and h (order d):
/// an arc-regular group of a d-valent graph of order k.
struct MarkedGroup {
  PermGroup group;
  Permutation a;
  Permutation h;
  int k = 0;
  int d = 0;
  /// Set when the coset graph Gamma(group, <h>, a) is not simple, e.g. the
  /// k = 2 dipole.
  bool degenerate = false;
  CosetTable table;
};

/// Quotients of C2 * C_d of order k*d in which x and y keep orders 2 and d.
std::vector<MarkedGroup>
enumerate_arc_regular_quotients(int k, int d,
                                std::uint64_t max_nodes = kDefaultNodeLimit);

struct Feasibility {
  int k = 0;
  bool feasible = false;
  std::vector<MarkedGroup> witnesses; // those with abelianization [6]
};

/// Whether some cubic arc-regular quotient of order 3k has abelianization C6.
Feasibility feasibility(int k, std::uint64_t max_nodes = kDefaultNodeLimit);

} // namespace arcgraph::fp
