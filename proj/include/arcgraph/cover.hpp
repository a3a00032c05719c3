#pragma once

// Cyclic regular covers of arc-regular base graphs: the character chi of the
// base group, the semidirect product C_p x| G, and the coset graph
// Gamma(G, <zh>, a).

#include <cstdint>
#include <string>
#include <vector>

#include "arcgraph/fp.hpp"
#include "arcgraph/graph.hpp"
#include "arcgraph/perm.hpp"

namespace arcgraph {

bool is_prime(std::uint64_t n);
/// Multiplicative order of x modulo p (p prime, x not divisible by p).
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t p);
/// Residues of multiplicative order exactly d mod p, increasing.
std::vector<std::uint64_t> roots_of_unity(std::uint64_t d, std::uint64_t p);

struct CoverSpec {
  fp::MarkedGroup base;
  std::uint64_t p = 0;
  std::uint64_t zeta = 0;
};

/// Throws InvalidArgument unless p is a prime with p !| kd and p = 1 mod 2d,
/// InvalidZeta unless zeta has order d, AbelianizationMismatch unless the base
/// abelianizes to C_{2d}.
void validate(const CoverSpec &spec);

/// The homomorphism G -> Z_p^* with a -> -1 and h -> zeta, indexed like the
/// elements of PermGroupOracle(base.group).
struct Character {
  std::vector<std::uint64_t> table;
  std::uint64_t p = 0;
};

/// Errors as validate(); Inconsistency if propagation over the Cayley graph
/// hits a conflict.
Character character_chi(const fp::MarkedGroup &base, std::uint64_t p, std::uint64_t zeta);

/// C_p x| G on pairs (e, g) meaning z^e g, indexed as e * |G| + g.
/// (e1, g1)(e2, g2) = (e1 + e2 chi(g1)^-1, g1 g2).
class SemidirectGroup final : public FiniteGroupOracle {
public:
  SemidirectGroup(const fp::MarkedGroup &base, std::uint64_t p, Character chi);

  std::size_t size() const override { return p_ * m_; }
  std::size_t multiply(std::size_t i, std::size_t j) const override;
  std::size_t inverse(std::size_t i) const override;
  std::size_t identity() const override { return element(0, base_.identity()); }
  /// a and zh.
  std::vector<std::size_t> generators() const override { return {a(), zh()}; }
  std::string label(std::size_t i) const override;

  std::size_t element(std::uint64_t e, std::size_t g) const {
    return static_cast<std::size_t>(e % p_) * m_ + g;
  }
  std::uint64_t exponent(std::size_t i) const { return i / m_; }
  std::size_t base_index(std::size_t i) const { return i % m_; }

  std::size_t a() const { return element(0, a_); }
  std::size_t h() const { return element(0, h_); }
  std::size_t z() const { return element(1, base_.identity()); }
  /// z^t h; t = 1 gives the standard generator.
  std::size_t zh(std::uint64_t t = 1) const { return element(t, h_); }

  std::uint64_t p() const { return p_; }
  const Character &chi() const { return chi_; }
  const PermGroupOracle &base() const { return base_; }
  int k() const { return k_; }
  int d() const { return d_; }

private:
  PermGroupOracle base_;
  Character chi_;
  std::vector<std::uint64_t> chi_inv_;
  std::uint64_t p_;
  std::size_t m_;
  std::size_t a_, h_;
  int k_, d_;
};

SemidirectGroup build_semidirect(const CoverSpec &spec);

struct Cover {
  Graph graph;
  PermGroup action;            // arc-regular action of G on the vertices
  Permutation z;               // generator of P in that action
  std::uint64_t zeta = 0;
};

/// Gamma(G, <z^t h>, a). Any failed postcondition (order kp, valency d,
/// connected, arc-regular, covering projection for k >= 3) throws Internal.
Cover build_cover_full(const CoverSpec &spec, std::uint64_t t = 1);
Graph build_cover(const CoverSpec &spec);

struct EnumeratedCover {
  Graph graph;
  std::string certificate;     // canonical graph6
  std::size_t witness = 0;     // index into feasibility(k).witnesses
  std::uint64_t zeta = 0;
};

/// Covers of one base for every zeta of order d, deduplicated by canonical
/// form and sorted by certificate.
std::vector<EnumeratedCover> covers_of_base(const fp::MarkedGroup &base, std::uint64_t p);

/// Union over the feasibility witnesses of order 3k. Throws InvalidArgument
/// unless p is prime, p = 1 mod 6 and p !| 3k.
std::vector<EnumeratedCover> enumerate_covers(int k, std::uint64_t p,
                                              std::uint64_t max_nodes = fp::kDefaultNodeLimit);

/// Whether a -> a^-1, h -> h^-1 extends to an automorphism of the base group.
bool has_inverting_automorphism(const fp::MarkedGroup &base,
                                std::size_t cap = kDefaultElementCap);

struct StructureReport {
  bool sylow_p_normal = false;
  bool sylow_p_order_p = false;
  bool sylow_p_semiregular = false;
  bool covering_projection = false; // vacuously true for k < 3
  std::vector<std::uint64_t> abelianization;
  std::uint64_t p_mod_2d = 0;
  std::uint64_t centralizer_order = 0;          // |C_G(P)|
  std::uint64_t centralizer_complement_order = 0; // |J|

  bool ok(int d) const;
};

/// Rebuilds the coset action of `g` and checks it against `gr`; a mismatch
/// leaves every flag false.
StructureReport structure_report(const SemidirectGroup &g, const Graph &gr);

} // namespace arcgraph
