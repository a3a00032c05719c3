#include "arcgraph/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "arcgraph/error.hpp"
#include "arcgraph/kernels.hpp"

namespace arcgraph {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error(ErrorCode::InvalidArgument, "images do not form a bijection");
    seen[p] = true;
  }
}

Permutation
Permutation::from_cycles(std::size_t degree,
                         const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point p = cyc[i];
      if (p >= degree || used[p])
        throw Error(ErrorCode::InvalidArgument, "cycles are not disjoint");
      used[p] = true;
      img[p] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  if (rhs.degree() != degree())
    throw Error(ErrorCode::InvalidArgument, "degree mismatch in product");
  Permutation out;
  out.images_.resize(images_.size());
  kernels::compose(images_, rhs.images_, out.images_);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e)
                          : static_cast<std::uint64_t>(e);
  Permutation acc(degree());
  while (n > 0) {
    if (n & 1U)
      acc = acc * base;
    base = base * base;
    n >>= 1U;
  }
  return acc;
}

Permutation Permutation::conjugate_by(const Permutation &rhs) const {
  return rhs.inverse() * *this * rhs;
}

bool Permutation::is_identity() const { return kernels::is_identity(images_); }

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    Point p = static_cast<Point>(i);
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      os << (first ? "" : " ") << p;
      first = false;
      p = images_[p];
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(std::size_t degree, std::span<const Permutation> generators,
                     std::span<const Point> base_prefix,
                     std::optional<std::uint64_t> known_order)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree)
      throw Error(ErrorCode::InvalidArgument, "base point out of range");
    Level lv;
    lv.base = b;
    levels_.push_back(std::move(lv));
  }
  for (const auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::InvalidArgument, "generator degree mismatch");
    if (!g.is_identity())
      add_strong_generator(g);
  }
  for (std::size_t i = 0; i < levels_.size(); ++i)
    rebuild_orbit(i);
  run(known_order);
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto &lv : levels_)
    b.push_back(lv.base);
  return b;
}

std::uint64_t StabChain::stabilizer_order(std::size_t level) const {
  std::uint64_t ord = 1;
  for (std::size_t i = level; i < levels_.size(); ++i)
    ord *= levels_[i].orbit.size();
  return ord;
}

std::vector<Permutation>
StabChain::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level < levels_.size()) {
    for (std::size_t gi : levels_[level].gens)
      out.push_back(strong_[gi]);
  }
  return out;
}

// Registers g as a strong generator. It belongs to every level whose base
// points (before it first moves one) it fixes; a new level is appended if it
// fixes all current base points.
void StabChain::add_strong_generator(Permutation g) {
  std::size_t idx = strong_.size();
  strong_inv_.push_back(g.inverse());
  strong_.push_back(std::move(g));
  const Permutation &s = strong_.back();
  std::size_t lv = 0;
  for (; lv < levels_.size(); ++lv) {
    levels_[lv].gens.push_back(idx);
    if (s[levels_[lv].base] != levels_[lv].base)
      break;
  }
  if (lv == levels_.size()) {
    Level nl;
    nl.base = s.first_moved_point();
    nl.gens.push_back(idx);
    levels_.push_back(std::move(nl));
  }
}

void StabChain::rebuild_orbit(std::size_t level) {
  Level &lv = levels_[level];
  lv.via.assign(degree_, -2);
  lv.orbit.clear();
  lv.via[lv.base] = -1;
  lv.orbit.push_back(lv.base);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    Point p = lv.orbit[head];
    for (std::size_t gi : lv.gens) {
      Point q = strong_[gi][p];
      if (lv.via[q] == -2) {
        lv.via[q] = static_cast<std::int32_t>(gi);
        lv.orbit.push_back(q);
      }
    }
  }
}

Permutation StabChain::transversal(std::size_t level, Point point) const {
  const Level &lv = levels_[level];
  if (lv.via[point] == -2)
    throw Error(ErrorCode::InvalidArgument, "point not in fundamental orbit");
  // Collect generators on the path base -> point, then multiply forwards.
  std::vector<std::size_t> path;
  for (Point cur = point; lv.via[cur] != -1;) {
    auto gi = static_cast<std::size_t>(lv.via[cur]);
    path.push_back(gi);
    cur = strong_inv_[gi][cur];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = u * strong_[*it];
  return u;
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g,
                                                     std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level &lv = levels_[i];
    Point beta = g[lv.base];
    if (lv.via[beta] == -2)
      return {std::move(g), i};
    for (Point cur = beta; lv.via[cur] != -1;) {
      auto gi = static_cast<std::size_t>(lv.via[cur]);
      g = g * strong_inv_[gi];
      cur = strong_inv_[gi][cur];
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  auto [res, lvl] = strip(g, 0);
  return lvl == levels_.size() && res.is_identity();
}

void StabChain::run(std::optional<std::uint64_t> known_order) {
  auto done = [&] { return known_order && order() >= *known_order; };
  if (levels_.empty() || done())
    return;
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t level = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[level].orbit.size() && !restarted;
         ++oi) {
      Point beta = levels_[level].orbit[oi];
      Permutation u = transversal(level, beta);
      for (std::size_t gpos = 0; gpos < levels_[level].gens.size(); ++gpos) {
        std::size_t gi = levels_[level].gens[gpos];
        // Schreier generator u_beta * s * u_{beta^s}^-1, stripped from level.
        auto [res, fail] = strip(u * strong_[gi], level);
        if (fail == levels_.size() && res.is_identity())
          continue;
        add_strong_generator(std::move(res));
        // The new generator lies in G^(level), so only deeper orbits change.
        for (std::size_t l = level + 1; l < levels_.size(); ++l)
          rebuild_orbit(l);
        if (done())
          return;
        i = std::min(fail, levels_.size() - 1) + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Memo {
  std::once_flag once;
  std::optional<std::uint64_t> known_order;
  StabChain chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), memo_(std::make_shared<Memo>()) {
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw Error(ErrorCode::InvalidArgument, "generator degree mismatch");
  generators_ = std::move(generators);
}

PermGroup PermGroup::with_known_order(std::size_t degree,
                                      std::vector<Permutation> generators,
                                      std::uint64_t order) {
  PermGroup g(degree, std::move(generators));
  g.memo_->known_order = order;
  return g;
}

const StabChain &PermGroup::chain() const {
  std::call_once(memo_->once, [this] {
    memo_->chain = StabChain(degree_, generators_, {}, memo_->known_order);
  });
  return memo_->chain;
}

StabChain PermGroup::chain_with_base(std::span<const Point> base_prefix) const {
  std::optional<std::uint64_t> ord = memo_->known_order;
  if (!ord)
    ord = order();
  // Seeding with the existing strong generators keeps the rebuild cheap.
  return StabChain(degree_, chain().strong_generators(), base_prefix, ord);
}

bool PermGroup::contains(const Permutation &g) const {
  return chain().contains(g);
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_)
    throw Error(ErrorCode::InvalidArgument, "point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const auto &g : generators_) {
      Point q = g[orb[head]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool PermGroup::is_transitive() const {
  return degree_ == 0 || orbit(0).size() == degree_;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  std::uint64_t ord = order();
  if (ord > cap)
    throw Error(ErrorCode::BudgetExceeded,
                "group of order " + std::to_string(ord) +
                    " exceeds element cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(ord);
  chain().for_each_element([&](const Permutation &g) { out.push_back(g); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

std::uint64_t group_order(const PermGroup &g) { return g.order(); }

std::vector<std::vector<Point>> orbits(const PermGroup &g) {
  std::vector<std::vector<Point>> cells;
  std::vector<bool> seen(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p])
      continue;
    auto orb = g.orbit(p);
    for (Point q : orb)
      seen[q] = true;
    cells.push_back(std::move(orb));
  }
  return cells;
}

PermGroup pointwise_stabilizer(const PermGroup &g, std::span<const Point> pts) {
  for (Point p : pts)
    if (p >= g.degree())
      throw Error(ErrorCode::InvalidArgument, "point out of range");
  StabChain ch = g.chain_with_base(pts);
  std::size_t level = pts.size();
  std::uint64_t ord = ch.stabilizer_order(level);
  return PermGroup::with_known_order(g.degree(), ch.stabilizer_generators(level),
                                     ord);
}

PermGroup point_stabilizer(const PermGroup &g, Point v) {
  Point pts[] = {v};
  return pointwise_stabilizer(g, pts);
}

bool is_semiregular(const PermGroup &g) {
  std::uint64_t ord = g.order();
  for (const auto &cell : orbits(g))
    if (cell.size() != ord)
      return false;
  return true;
}

bool is_normal_subgroup(const PermGroup &g, const PermGroup &n) {
  for (const auto &x : n.generators())
    if (!g.contains(x))
      return false;
  for (const auto &x : n.generators())
    for (const auto &s : g.generators())
      if (!n.contains(x.conjugate_by(s)))
        return false;
  return true;
}

PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> s) {
  std::vector<Permutation> gens;
  for (const auto &x : s) {
    if (!g.contains(x))
      throw Error(ErrorCode::InvalidArgument, "element not in group");
    if (!x.is_identity())
      gens.push_back(x);
  }
  PermGroup n(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto &t : g.generators()) {
      Permutation c = gens[i].conjugate_by(t);
      if (!n.contains(c)) {
        gens.push_back(std::move(c));
        n = PermGroup(g.degree(), gens);
      }
    }
  }
  return PermGroup::with_known_order(g.degree(), std::move(gens), n.order());
}

PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Permutation> comms;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

std::vector<Permutation> conjugacy_class_representatives(const PermGroup &g,
                                                         std::size_t cap) {
  auto elems = g.elements(cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);
  std::vector<bool> done(elems.size(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i])
      continue;
    reps.push_back(elems[i]);
    std::vector<std::size_t> queue{i};
    done[i] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto &t : g.generators()) {
        std::size_t j = index.at(elems[queue[head]].conjugate_by(t));
        if (!done[j]) {
          done[j] = true;
          queue.push_back(j);
        }
      }
  }
  return reps;
}

bool is_quasiprimitive(const PermGroup &g, std::size_t cap) {
  if (!g.is_transitive())
    throw Error(ErrorCode::Intransitive, "quasiprimitivity needs a transitive group");
  for (const auto &rep : conjugacy_class_representatives(g, cap)) {
    if (rep.is_identity())
      continue;
    Permutation one[] = {rep};
    if (!normal_closure(g, one).is_transitive())
      return false;
  }
  return true;
}

namespace {

// Invariant factors of an abelian group of order m, given the order of every
// element.
std::vector<std::uint64_t> invariants_from_orders(std::uint64_t m,
                                                  const std::vector<std::uint64_t> &qorder) {
  // For each prime q, the number of elements of order dividing q^j equals
  // q^(sum_i min(e_i, j)); successive differences give #{i : e_i >= j}.
  std::map<std::uint64_t, std::vector<int>> primary; // prime -> exponents desc
  std::uint64_t rest = m;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    if (rest % q != 0)
      continue;
    while (rest % q == 0)
      rest /= q;
    std::vector<int> at_least; // at_least[j-1] = #{i : e_i >= j}
    int prev_log = 0;
    for (std::uint64_t qj = q;; qj *= q) {
      std::uint64_t cnt = 0;
      for (auto o : qorder)
        if (qj % o == 0)
          ++cnt;
      int lg = 0;
      for (std::uint64_t t = cnt; t > 1; t /= q)
        ++lg;
      if (lg == prev_log)
        break;
      at_least.push_back(lg - prev_log);
      prev_log = lg;
    }
    std::vector<int> exps;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int t = 0; t < at_least[j] - next; ++t)
        exps.push_back(static_cast<int>(j + 1));
    }
    std::sort(exps.rbegin(), exps.rend());
    primary[q] = exps;
  }
  std::size_t rank = 0;
  for (const auto &[q, e] : primary)
    rank = std::max(rank, e.size());
  std::vector<std::uint64_t> inv(rank, 1);
  for (const auto &[q, e] : primary)
    for (std::size_t t = 0; t < e.size(); ++t)
      for (int r = 0; r < e[t]; ++r)
        inv[t] *= q;
  std::sort(inv.begin(), inv.end());
  return inv;
}

} // namespace

std::vector<std::uint64_t> abelian_invariants(const PermGroup &g,
                                              std::size_t cap) {
  PermGroup d = derived_subgroup(g);
  std::uint64_t m = g.order() / d.order();
  if (m == 1)
    return {};
  // Build G/[G,G] explicitly: cosets of the derived subgroup.
  PermGroupOracle big(g, cap);
  auto sub = d.elements(cap);
  std::vector<std::size_t> coset(big.size(), SIZE_MAX);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (coset[i] != SIZE_MAX)
      continue;
    std::size_t c = reps.size();
    reps.push_back(i);
    for (const auto &x : sub)
      coset[big.index_of(big.element(i) * x)] = c;
  }
  auto qmul = [&](std::size_t a, std::size_t b) {
    return coset[big.multiply(reps[a], reps[b])];
  };
  const std::size_t qid = coset[big.identity()];
  std::vector<std::uint64_t> qorder(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    std::uint64_t ord = 1;
    for (std::size_t x = c; x != qid; x = qmul(x, c))
      ++ord;
    qorder[c] = ord;
  }
  return invariants_from_orders(m, qorder);
}

// ---------------------------------------------------------------------------
// Oracles

void check_group_axioms(const FiniteGroupOracle &g, std::size_t cap) {
  const std::size_t m = g.size();
  if (m > cap)
    throw Error(ErrorCode::BudgetExceeded, "group too large for axiom check");
  const std::size_t e = g.identity();
  std::vector<std::size_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t k = g.multiply(i, j);
      if (k >= m)
        throw Error(ErrorCode::Inconsistency, "product out of range");
      table[i * m + j] = k;
    }
  for (std::size_t i = 0; i < m; ++i) {
    if (table[e * m + i] != i || table[i * m + e] != i)
      throw Error(ErrorCode::Inconsistency, "identity law fails");
    if (table[i * m + g.inverse(i)] != e || table[g.inverse(i) * m + i] != e)
      throw Error(ErrorCode::Inconsistency, "inverse law fails");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t ij = table[i * m + j];
      for (std::size_t k = 0; k < m; ++k)
        if (table[ij * m + k] != table[i * m + table[j * m + k]])
          throw Error(ErrorCode::Inconsistency, "associativity fails");
    }
}

std::vector<std::size_t> subgroup_closure(const FiniteGroupOracle &g,
                                          std::span<const std::size_t> gens) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> out{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (std::size_t s : gens) {
      std::size_t x = g.multiply(out[head], s);
      if (!seen[x]) {
        seen[x] = true;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroupOracle &g) {
  const std::size_t n = g.size();
  const auto gens = g.generators();
  auto comm = [&](std::size_t x, std::size_t y) {
    return g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
  };
  std::vector<std::size_t> dgens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      dgens.push_back(comm(gens[i], gens[j]));
  // Normal closure: add conjugates of the closure's generators until stable.
  std::vector<std::size_t> d = subgroup_closure(g, dgens);
  std::vector<char> in_d(n, 0);
  for (bool grown = true; grown;) {
    grown = false;
    std::fill(in_d.begin(), in_d.end(), 0);
    for (std::size_t x : d)
      in_d[x] = 1;
    for (std::size_t i = 0; i < dgens.size() && !grown; ++i)
      for (std::size_t s : gens) {
        std::size_t c = g.multiply(g.multiply(g.inverse(s), dgens[i]), s);
        if (!in_d[c]) {
          dgens.push_back(c);
          d = subgroup_closure(g, dgens);
          grown = true;
          break;
        }
      }
  }
  const std::uint64_t m = n / d.size();
  if (m == 1)
    return {};
  std::vector<std::size_t> coset(n, SIZE_MAX), reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (coset[i] != SIZE_MAX)
      continue;
    for (std::size_t x : d)
      coset[g.multiply(i, x)] = reps.size();
    reps.push_back(i);
  }
  const std::size_t qid = coset[g.identity()];
  std::vector<std::uint64_t> qorder(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    std::uint64_t ord = 1;
    for (std::size_t x = c; x != qid; x = coset[g.multiply(reps[x], reps[c])])
      ++ord;
    qorder[c] = ord;
  }
  return invariants_from_orders(m, qorder);
}

std::size_t element_order(const FiniteGroupOracle &g, std::size_t i) {
  std::size_t ord = 1;
  for (std::size_t x = i; x != g.identity(); x = g.multiply(x, i))
    ++ord;
  return ord;
}

struct PermGroupOracle::Index {
  std::unordered_map<Permutation, std::size_t, PermutationHash> map;
};

PermGroupOracle::PermGroupOracle(const PermGroup &group, std::size_t cap)
    : group_(group), elements_(group.elements(cap)) {
  auto idx = std::make_shared<Index>();
  idx->map.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    idx->map.emplace(elements_[i], i);
  index_ = idx;
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    inverse_[i] = index_of(elements_[i].inverse());
  for (const auto &g : group_.generators())
    gens_.push_back(index_of(g));
  const std::size_t m = elements_.size();
  if (m <= 2048) {
    table_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        table_[i * m + j] =
            static_cast<std::uint32_t>(index_of(elements_[i] * elements_[j]));
  }
}

std::size_t PermGroupOracle::multiply(std::size_t i, std::size_t j) const {
  if (!table_.empty())
    return table_[i * elements_.size() + j];
  return index_of(elements_[i] * elements_[j]);
}

std::size_t PermGroupOracle::index_of(const Permutation &p) const {
  auto it = index_->map.find(p);
  if (it == index_->map.end())
    throw Error(ErrorCode::InvalidArgument, "permutation is not a group element");
  return it->second;
}

} // namespace arcgraph
