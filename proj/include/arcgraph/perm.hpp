#pragma once

// Permutations, permutation groups and abstract finite-group oracles.
//
// Conventions: points are dense 0-based integers and permutations act on the
// right, so for a product `g * h` the point x goes to (x^g)^h. Products and
// group elements are always read left to right.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arcgraph {

using Point = std::uint32_t;

/// Exhaustive element enumeration is only allowed below this many elements.
inline constexpr std::size_t kDefaultElementCap = 10000;

class Permutation {
public:
  Permutation() = default;
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);
  /// Throws InvalidArgument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  /// Apply *this first, then rhs.
  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  /// rhs^-1 * this * rhs
  Permutation conjugate_by(const Permutation &rhs) const;

  bool is_identity() const;
  std::uint64_t order() const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const;

  /// Cycle notation, identity printed as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

/// Stabilizer chain (base and strong generating set) built by deterministic
/// Schreier-Sims. Base points not supplied by the caller are chosen as the
/// smallest point moved by the element that needs a new level.
class StabChain {
public:
  StabChain() = default;
  StabChain(std::size_t degree, std::span<const Permutation> generators,
            std::span<const Point> base_prefix = {},
            std::optional<std::uint64_t> known_order = std::nullopt);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }
  std::vector<Point> base() const;
  std::span<const Point> fundamental_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }

  std::uint64_t order() const { return stabilizer_order(0); }
  /// Order of the pointwise stabilizer of base points 0..level-1.
  std::uint64_t stabilizer_order(std::size_t level) const;
  /// Strong generators fixing base points 0..level-1.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  const std::vector<Permutation> &strong_generators() const noexcept {
    return strong_;
  }

  bool contains(const Permutation &g) const;
  /// Transversal element u with base(level)^u = point; point must lie in the
  /// fundamental orbit.
  Permutation transversal(std::size_t level, Point point) const;

  /// Calls f on every group element exactly once.
  template <class F> void for_each_element(F &&f) const;

private:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens; // indices into strong_
    std::vector<Point> orbit;
    std::vector<std::int32_t> via; // -2: not in orbit, -1: base, else gen index
  };

  void add_strong_generator(Permutation g);
  void rebuild_orbit(std::size_t level);
  // Strips g through levels [from, depth); returns residue and failing level.
  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t from) const;
  void run(std::optional<std::uint64_t> known_order);
  template <class F>
  void enumerate(std::size_t level, const Permutation &prefix, F &f) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
};

class PermGroup {
public:
  PermGroup() : PermGroup(0) {}
  explicit PermGroup(std::size_t degree,
                     std::vector<Permutation> generators = {});
  /// Same as the constructor, but lets Schreier-Sims stop as soon as the chain
  /// reaches `order`. The caller guarantees `order` is the true group order.
  static PermGroup with_known_order(std::size_t degree,
                                    std::vector<Permutation> generators,
                                    std::uint64_t order);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept {
    return generators_;
  }

  const StabChain &chain() const;
  StabChain chain_with_base(std::span<const Point> base_prefix) const;

  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation &g) const;
  bool is_trivial() const { return order() == 1; }

  /// Sorted orbit of `p`.
  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const;

  /// All elements, sorted; throws BudgetExceeded above `cap`.
  std::vector<Permutation> elements(std::size_t cap = kDefaultElementCap) const;

private:
  struct Memo;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Memo> memo_;
};

std::uint64_t group_order(const PermGroup &g);
/// Orbit partition, cells sorted internally and by minimum element.
std::vector<std::vector<Point>> orbits(const PermGroup &g);
PermGroup point_stabilizer(const PermGroup &g, Point v);
PermGroup pointwise_stabilizer(const PermGroup &g, std::span<const Point> pts);
bool is_semiregular(const PermGroup &g);
bool is_normal_subgroup(const PermGroup &g, const PermGroup &n);
PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> s);
PermGroup derived_subgroup(const PermGroup &g);
/// One representative (the smallest element) per conjugacy class.
std::vector<Permutation>
conjugacy_class_representatives(const PermGroup &g,
                                std::size_t cap = kDefaultElementCap);
bool is_quasiprimitive(const PermGroup &g,
                       std::size_t cap = kDefaultElementCap);
/// Invariant factors d1 | d2 | ... of G/[G,G]; empty for a perfect group.
std::vector<std::uint64_t>
abelian_invariants(const PermGroup &g, std::size_t cap = kDefaultElementCap);

/// Abstract finite group on element indices 0..size()-1.
class FiniteGroupOracle {
public:
  virtual ~FiniteGroupOracle() = default;
  virtual std::size_t size() const = 0;
  virtual std::size_t multiply(std::size_t i, std::size_t j) const = 0;
  virtual std::size_t inverse(std::size_t i) const = 0;
  virtual std::size_t identity() const = 0;
  /// A generating set (element indices).
  virtual std::vector<std::size_t> generators() const = 0;
  virtual std::string label(std::size_t i) const { return std::to_string(i); }
};

/// Exhaustive check of closure, identity, inverses and associativity.
/// Throws Inconsistency on failure and BudgetExceeded above `cap` elements.
void check_group_axioms(const FiniteGroupOracle &g,
                        std::size_t cap = kDefaultElementCap);

/// Sorted element indices of the subgroup generated by `gens`.
std::vector<std::size_t> subgroup_closure(const FiniteGroupOracle &g,
                                          std::span<const std::size_t> gens);

std::size_t element_order(const FiniteGroupOracle &g, std::size_t i);

/// Invariant factors of G/[G,G], computed on element indices (no element cap).
std::vector<std::uint64_t> abelian_invariants(const FiniteGroupOracle &g);

/// Regular representation of a PermGroup: elements are sorted permutations
/// (identity is index 0).
class PermGroupOracle final : public FiniteGroupOracle {
public:
  explicit PermGroupOracle(const PermGroup &group,
                           std::size_t cap = kDefaultElementCap);

  std::size_t size() const override { return elements_.size(); }
  std::size_t multiply(std::size_t i, std::size_t j) const override;
  std::size_t inverse(std::size_t i) const override { return inverse_[i]; }
  std::size_t identity() const override { return 0; }
  std::vector<std::size_t> generators() const override { return gens_; }
  std::string label(std::size_t i) const override {
    return elements_[i].to_string();
  }

  const Permutation &element(std::size_t i) const { return elements_[i]; }
  /// Throws InvalidArgument if `p` is not an element.
  std::size_t index_of(const Permutation &p) const;
  const PermGroup &group() const noexcept { return group_; }

private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> gens_;
  std::vector<std::uint32_t> table_; // dense product table when small enough
  struct Index;
  std::shared_ptr<const Index> index_;
};

template <class F> void StabChain::for_each_element(F &&f) const {
  Permutation id(degree_);
  enumerate(0, id, f);
}

template <class F>
void StabChain::enumerate(std::size_t level, const Permutation &suffix,
                          F &f) const {
  // Elements factor as u_{k-1} * ... * u_1 * u_0 with u_i from level i.
  if (level == levels_.size()) {
    f(suffix);
    return;
  }
  for (Point pt : levels_[level].orbit)
    enumerate(level + 1, transversal(level, pt) * suffix, f);
}

} // namespace arcgraph
