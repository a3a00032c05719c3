#include <algorithm>
#include <map>

#include "arcgraph/analyze.hpp"
#include "arcgraph/cover.hpp"
#include "arcgraph/error.hpp"

namespace arcgraph {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  x %= p;
  for (; e; e >>= 1, x = mulmod(x, x, p))
    if (e & 1)
      r = mulmod(r, x, p);
  return r;
}

std::string str(std::uint64_t x) { return std::to_string(x); }

std::vector<std::size_t> coset_index(const CosetGraph &cg, std::size_t n) {
  std::vector<std::size_t> of(n, 0);
  for (std::size_t c = 0; c < cg.cosets.size(); ++c)
    for (std::size_t x : cg.cosets[c])
      of[x] = c;
  return of;
}

Permutation action_of(const SemidirectGroup &g, const CosetGraph &cg, std::size_t x) {
  auto of = coset_index(cg, g.size());
  std::vector<Point> img(cg.cosets.size());
  for (std::size_t c = 0; c < cg.cosets.size(); ++c)
    img[c] = static_cast<Point>(of[g.multiply(cg.cosets[c][0], x)]);
  return Permutation(std::move(img));
}

CosetGraph cover_coset_graph(const SemidirectGroup &g, std::uint64_t t) {
  std::vector<std::size_t> gen{g.zh(t)};
  return coset_graph(g, subgroup_closure(g, gen), g.a());
}

[[noreturn]] void broken(const std::string &what) {
  throw Error(ErrorCode::Internal, "cover postcondition failed: " + what);
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0)
      return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t p) {
  x %= p;
  if (x == 0)
    throw Error(ErrorCode::InvalidArgument, "zero has no multiplicative order");
  std::uint64_t ord = 1;
  for (std::uint64_t y = x; y != 1; y = mulmod(y, x, p))
    ++ord;
  return ord;
}

std::vector<std::uint64_t> roots_of_unity(std::uint64_t d, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  if ((p - 1) % d != 0)
    return out;
  for (std::uint64_t x = 2; x < p; ++x)
    if (powmod(x, d, p) == 1 && multiplicative_order(x, p) == d)
      out.push_back(x);
  return out;
}

void validate(const CoverSpec &spec) {
  const auto k = static_cast<std::uint64_t>(spec.base.k);
  const auto d = static_cast<std::uint64_t>(spec.base.d);
  const std::uint64_t p = spec.p;
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument, str(p) + " is not prime");
  if ((k * d) % p == 0)
    throw Error(ErrorCode::InvalidArgument, "p divides kd");
  if (p % (2 * d) != 1)
    throw Error(ErrorCode::InvalidArgument, "p is not 1 mod 2d");
  if (spec.zeta % p == 0 || multiplicative_order(spec.zeta, p) != d)
    throw Error(ErrorCode::InvalidZeta,
                "zeta = " + str(spec.zeta) + " does not have order " + str(d) + " mod " + str(p));
  if (abelian_invariants(spec.base.group) != std::vector<std::uint64_t>{2 * d})
    throw Error(ErrorCode::AbelianizationMismatch,
                "base group does not abelianize to C" + str(2 * d));
}

Character character_chi(const fp::MarkedGroup &base, std::uint64_t p, std::uint64_t zeta) {
  validate({base, p, zeta});
  PermGroupOracle g(base.group);
  const std::size_t a = g.index_of(base.a), h = g.index_of(base.h);
  const std::uint64_t img[2] = {p - 1, zeta % p};
  const std::size_t step[2] = {a, h};
  Character chi;
  chi.p = p;
  chi.table.assign(g.size(), 0);
  chi.table[g.identity()] = 1;
  std::vector<std::size_t> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    for (int s = 0; s < 2; ++s) {
      std::size_t y = g.multiply(x, step[s]);
      std::uint64_t v = mulmod(chi.table[x], img[s], p);
      if (chi.table[y] == 0) {
        chi.table[y] = v;
        queue.push_back(y);
      } else if (chi.table[y] != v) {
        throw Error(ErrorCode::Inconsistency, "chi is not well defined at " + g.label(y));
      }
    }
  }
  if (queue.size() != g.size())
    throw Error(ErrorCode::Inconsistency, "a and h do not generate the base group");
  if (g.size() <= 1000)
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y)
        if (chi.table[g.multiply(x, y)] != mulmod(chi.table[x], chi.table[y], p))
          throw Error(ErrorCode::Inconsistency, "chi is not multiplicative");
  return chi;
}

SemidirectGroup::SemidirectGroup(const fp::MarkedGroup &base, std::uint64_t p, Character chi)
    : base_(base.group), chi_(std::move(chi)), p_(p), m_(base_.size()),
      a_(base_.index_of(base.a)), h_(base_.index_of(base.h)), k_(base.k), d_(base.d) {
  if (chi_.table.size() != m_ || chi_.p != p)
    throw Error(ErrorCode::InvalidArgument, "character does not match the base group");
  chi_inv_.resize(m_);
  for (std::size_t g = 0; g < m_; ++g)
    chi_inv_[g] = powmod(chi_.table[g], p - 2, p);
}

std::size_t SemidirectGroup::multiply(std::size_t i, std::size_t j) const {
  std::uint64_t e1 = exponent(i), e2 = exponent(j);
  std::size_t g1 = base_index(i), g2 = base_index(j);
  return element((e1 + mulmod(e2, chi_inv_[g1], p_)) % p_, base_.multiply(g1, g2));
}

std::size_t SemidirectGroup::inverse(std::size_t i) const {
  std::uint64_t e = exponent(i);
  std::size_t g = base_index(i);
  return element((p_ - mulmod(e, chi_.table[g], p_)) % p_, base_.inverse(g));
}

std::string SemidirectGroup::label(std::size_t i) const {
  return "z^" + str(exponent(i)) + " " + base_.label(base_index(i));
}

SemidirectGroup build_semidirect(const CoverSpec &spec) {
  return SemidirectGroup(spec.base, spec.p, character_chi(spec.base, spec.p, spec.zeta));
}

Cover build_cover_full(const CoverSpec &spec, std::uint64_t t) {
  if (t % spec.p == 0)
    throw Error(ErrorCode::InvalidArgument, "z^t must generate P");
  SemidirectGroup g = build_semidirect(spec);
  CosetGraph cg = cover_coset_graph(g, t);
  const std::size_t n = static_cast<std::size_t>(spec.base.k) * spec.p;
  const auto d = static_cast<std::size_t>(spec.base.d);
  if (cg.graph.order() != n)
    broken("order is not kp");
  if (cg.graph.valency() != d)
    broken("valency is not d");
  if (!cg.graph.is_connected())
    broken("not connected");
  if (cg.action.order() != n * d)
    broken("action order is not kpd");
  if (!s_arc_profile(cg.graph, cg.action, 1).levels[1].regular)
    broken("action is not arc-regular");

  Cover out;
  out.z = action_of(g, cg, g.z());
  out.zeta = spec.zeta;
  if (spec.base.k >= 3 && !spec.base.degenerate) {
    QuotientResult q = quotient_graph(cg.graph, PermGroup(n, {out.z}));
    std::map<Point, std::size_t> fibre;
    for (Point v : q.projection)
      ++fibre[v];
    for (auto [v, size] : fibre)
      if (size != spec.p)
        broken("fibre of size " + str(size));
    if (!q.is_covering)
      broken("quotient map is not a covering projection");
    PermGroupOracle bo(spec.base.group);
    std::vector<std::size_t> hgen{bo.index_of(spec.base.h)};
    Graph base = coset_graph(bo, subgroup_closure(bo, hgen), bo.index_of(spec.base.a)).graph;
    if (!isomorphic(q.quotient, base))
      broken("quotient is not the base graph");
  }
  out.graph = std::move(cg.graph);
  out.action = std::move(cg.action);
  return out;
}

Graph build_cover(const CoverSpec &spec) { return build_cover_full(spec).graph; }

std::vector<EnumeratedCover> covers_of_base(const fp::MarkedGroup &base, std::uint64_t p) {
  std::vector<EnumeratedCover> out;
  for (std::uint64_t zeta : roots_of_unity(static_cast<std::uint64_t>(base.d), p)) {
    Graph g = build_cover({base, p, zeta});
    std::string cert = canonical_form(g).certificate;
    bool dup = std::any_of(out.begin(), out.end(),
                           [&](const EnumeratedCover &c) { return c.certificate == cert; });
    if (!dup)
      out.push_back({std::move(g), std::move(cert), 0, zeta});
  }
  std::sort(out.begin(), out.end(),
            [](const auto &x, const auto &y) { return x.certificate < y.certificate; });
  return out;
}

std::vector<EnumeratedCover> enumerate_covers(int k, std::uint64_t p, std::uint64_t max_nodes) {
  if (k < 1)
    throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument, str(p) + " is not prime");
  if (p % 6 != 1 || (3 * static_cast<std::uint64_t>(k)) % p == 0)
    throw Error(ErrorCode::InvalidArgument, "need p = 1 mod 6 and p not dividing 3k");
  fp::Feasibility f = fp::feasibility(k, max_nodes);
  std::vector<EnumeratedCover> out;
  for (std::size_t i = 0; i < f.witnesses.size(); ++i)
    for (EnumeratedCover &c : covers_of_base(f.witnesses[i], p)) {
      bool dup = std::any_of(out.begin(), out.end(),
                             [&](const EnumeratedCover &o) { return o.certificate == c.certificate; });
      if (!dup) {
        c.witness = i;
        out.push_back(std::move(c));
      }
    }
  std::sort(out.begin(), out.end(),
            [](const auto &x, const auto &y) { return x.certificate < y.certificate; });
  return out;
}

bool has_inverting_automorphism(const fp::MarkedGroup &base, std::size_t cap) {
  PermGroupOracle g(base.group, cap);
  const std::size_t gens[2] = {g.index_of(base.a), g.index_of(base.h)};
  const std::size_t imgs[2] = {g.inverse(gens[0]), g.inverse(gens[1])};
  const std::size_t none = g.size();
  std::vector<std::size_t> phi(g.size(), none);
  phi[g.identity()] = g.identity();
  std::vector<std::size_t> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    for (int s = 0; s < 2; ++s) {
      std::size_t y = g.multiply(x, gens[s]);
      std::size_t v = g.multiply(phi[x], imgs[s]);
      if (phi[y] == none) {
        phi[y] = v;
        queue.push_back(y);
      } else if (phi[y] != v) {
        return false;
      }
    }
  }
  std::vector<std::size_t> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool StructureReport::ok(int d) const {
  const auto dd = static_cast<std::uint64_t>(d);
  return sylow_p_normal && sylow_p_order_p && sylow_p_semiregular && covering_projection &&
         abelianization == std::vector<std::uint64_t>{2 * dd} && p_mod_2d == 1;
}

StructureReport structure_report(const SemidirectGroup &g, const Graph &gr) {
  StructureReport r;
  CosetGraph cg = cover_coset_graph(g, 1);
  if (!(cg.graph == gr))
    return r;
  const std::uint64_t p = g.p();
  const std::size_t n = gr.order();
  Permutation z = action_of(g, cg, g.z());
  PermGroup pg(n, {z});
  const std::uint64_t order = cg.action.order();
  r.sylow_p_order_p = pg.order() == p && (order / p) % p != 0;
  r.sylow_p_normal = is_normal_subgroup(cg.action, pg);
  r.sylow_p_semiregular = is_semiregular(pg);
  r.covering_projection = g.k() < 3 || quotient_graph(gr, pg).is_covering;
  r.abelianization = abelian_invariants(g);
  r.p_mod_2d = p % (2 * static_cast<std::uint64_t>(g.d()));
  const std::size_t zi = g.z();
  std::uint64_t c = 0;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g.multiply(x, zi) == g.multiply(zi, x))
      ++c;
  r.centralizer_order = c;
  r.centralizer_complement_order = c / p;
  return r;
}

} // namespace arcgraph
