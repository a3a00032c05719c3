#include <algorithm>
#include <set>

#include "arcgraph/error.hpp"
#include "arcgraph/fp.hpp"

namespace arcgraph::fp {
namespace {

// Backtracking search for regular coset tables (normal subgroups) of bounded
// index. Each coset c carries a partial map phi_c with phi_c(0) = c that must
// extend to an automorphism of the finished table (left multiplication by the
// element c); entries are transported along every phi_c as they appear, and
// relator traces are scanned Felsch-style.
class NormalSearch {
public:
  NormalSearch(const Presentation &p, std::size_t max_index, bool exact,
               std::uint64_t max_nodes)
      : cols_(2 * p.num_generators), gens_(p.num_generators), max_(max_index),
        exact_(exact), max_nodes_(max_nodes), table_(max_index * cols_, -1),
        phi_(max_index * max_index, -1), phinv_(max_index * max_index, -1),
        by_first_(cols_) {
    std::set<std::vector<std::size_t>> seen;
    for (const Word &r : p.relators)
      for (const Word &w : {r, inverse_word(r)}) {
        std::vector<std::size_t> cw;
        for (Letter l : w)
          cw.push_back(CosetTable::column(l));
        for (std::size_t s = 0; s < cw.size(); ++s) {
          std::vector<std::size_t> rot(cw.begin() + static_cast<std::ptrdiff_t>(s), cw.end());
          rot.insert(rot.end(), cw.begin(), cw.begin() + static_cast<std::ptrdiff_t>(s));
          if (seen.insert(rot).second)
            by_first_[rot.front()].push_back(rot);
        }
      }
    relators_ = p.relators;
  }

  std::vector<CosetTable> run() {
    n_ = 1;
    search();
    std::vector<CosetTable> out(found_.begin(), found_.end());
    return out;
  }

private:
  using Slot = std::int32_t;

  Slot &t(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }
  Slot &phi(std::size_t c, std::size_t i) { return phi_[c * max_ + i]; }
  Slot &phinv(std::size_t c, std::size_t u) { return phinv_[c * max_ + u]; }

  void assign(Slot &s, Slot v) {
    trail_.emplace_back(&s, s);
    s = v;
  }

  bool set_entry(std::size_t i, std::size_t col, std::size_t j) {
    Slot &a = t(i, col), &b = t(j, col ^ 1);
    if (a >= 0)
      return a == static_cast<Slot>(j);
    if (b >= 0)
      return false;
    assign(a, static_cast<Slot>(j));
    assign(b, static_cast<Slot>(i));
    events_.push_back({false, i, col});
    return true;
  }

  bool set_map(std::size_t c, std::size_t i, std::size_t u) {
    Slot &a = phi(c, i), &b = phinv(c, u);
    if (a >= 0)
      return a == static_cast<Slot>(u);
    if (b >= 0)
      return false;
    assign(a, static_cast<Slot>(u));
    assign(b, static_cast<Slot>(i));
    events_.push_back({true, c, i});
    return true;
  }

  bool scan(std::size_t i, const std::vector<std::size_t> &w) {
    std::size_t f = i, p = 0, L = w.size();
    while (p < L && t(f, w[p]) >= 0)
      f = static_cast<std::size_t>(t(f, w[p++]));
    if (p == L)
      return f == i;
    std::size_t b = i, q = L;
    while (q > p && t(b, w[q - 1] ^ 1) >= 0)
      b = static_cast<std::size_t>(t(b, w[--q] ^ 1));
    if (q == p)
      return false;
    if (q == p + 1)
      return set_entry(f, w[p], b);
    return true;
  }

  bool on_entry(std::size_t i, std::size_t col) {
    const auto j = static_cast<std::size_t>(t(i, col));
    for (const auto &w : by_first_[col])
      if (!scan(i, w))
        return false;
    for (const auto &w : by_first_[col ^ 1])
      if (!scan(j, w))
        return false;
    for (std::size_t c = 1; c < n_; ++c) {
      // Forward: the edge i -col-> j seen from c.
      Slot u = phi(c, i), w = phi(c, j);
      if (u >= 0) {
        Slot v = t(static_cast<std::size_t>(u), col);
        if (v >= 0 && w >= 0) {
          if (v != w)
            return false;
        } else if (w >= 0) {
          if (!set_entry(static_cast<std::size_t>(u), col, static_cast<std::size_t>(w)))
            return false;
        } else if (v >= 0) {
          if (!set_map(c, j, static_cast<std::size_t>(v)))
            return false;
        }
      } else if (w >= 0) {
        Slot v = t(static_cast<std::size_t>(w), col ^ 1);
        if (v >= 0 && !set_map(c, i, static_cast<std::size_t>(v)))
          return false;
      }
      // Backward: the same edge pulled back through phi_c.
      Slot x = phinv(c, i), y = phinv(c, j);
      if (x >= 0) {
        Slot v = t(static_cast<std::size_t>(x), col);
        if (v >= 0 && y >= 0) {
          if (v != y)
            return false;
        } else if (y >= 0) {
          if (!set_entry(static_cast<std::size_t>(x), col, static_cast<std::size_t>(y)))
            return false;
        } else if (v >= 0) {
          if (!set_map(c, static_cast<std::size_t>(v), j))
            return false;
        }
      } else if (y >= 0) {
        Slot v = t(static_cast<std::size_t>(y), col ^ 1);
        if (v >= 0 && !set_map(c, static_cast<std::size_t>(v), i))
          return false;
      }
    }
    return true;
  }

  bool on_map(std::size_t c, std::size_t i) {
    const auto u = static_cast<std::size_t>(phi(c, i));
    for (std::size_t col = 0; col < cols_; ++col) {
      Slot j = t(i, col), v = t(u, col);
      if (j >= 0 && v >= 0) {
        if (!set_map(c, static_cast<std::size_t>(j), static_cast<std::size_t>(v)))
          return false;
      } else if (j >= 0) {
        Slot w = phi(c, static_cast<std::size_t>(j));
        if (w >= 0 && !set_entry(u, col, static_cast<std::size_t>(w)))
          return false;
      } else if (v >= 0) {
        Slot w = phinv(c, static_cast<std::size_t>(v));
        if (w >= 0 && !set_entry(i, col, static_cast<std::size_t>(w)))
          return false;
      }
    }
    return true;
  }

  bool propagate() {
    while (!events_.empty()) {
      Event e = events_.back();
      events_.pop_back();
      if (!(e.map ? on_map(e.a, e.b) : on_entry(e.a, e.b))) {
        events_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      *trail_.back().first = trail_.back().second;
      trail_.pop_back();
    }
  }

  bool try_branch(std::size_t r, std::size_t col, std::size_t j, bool fresh) {
    std::size_t mark = trail_.size();
    std::size_t saved_n = n_;
    bool ok = true;
    if (fresh) {
      n_ = j + 1;
      ok = set_map(j, 0, j);
    }
    ok = ok && set_entry(r, col, j) && propagate();
    if (ok)
      search();
    else
      events_.clear();
    undo(mark);
    n_ = saved_n;
    return ok;
  }

  void search() {
    if (++nodes_ > max_nodes_)
      throw Error(ErrorCode::BudgetExceeded,
                  "normal subgroup search exceeded " + std::to_string(max_nodes_) +
                      " nodes");
    std::size_t r = 0, col = 0;
    bool open = false;
    for (r = 0; r < n_ && !open; ++r)
      for (col = 0; col < cols_; ++col)
        if (t(r, col) < 0) {
          open = true;
          break;
        }
    if (!open) {
      record();
      return;
    }
    --r;
    for (std::size_t j = 0; j < n_; ++j)
      if (t(j, col ^ 1) < 0)
        try_branch(r, col, j, false);
    if (n_ < max_)
      try_branch(r, col, n_, true);
  }

  void record() {
    if (exact_ && n_ != max_)
      return;
    std::vector<std::int32_t> data(table_.begin(),
                                   table_.begin() + static_cast<std::ptrdiff_t>(n_ * cols_));
    CosetTable tab(gens_, n_, std::move(data));
    for (std::size_t c = 1; c < n_; ++c)
      for (std::size_t i = 0; i < n_; ++i)
        if (phi(c, i) < 0)
          throw Error(ErrorCode::Internal, "regularity map left partial");
    Presentation p;
    p.num_generators = gens_;
    p.relators = relators_;
    if (!tab.satisfies(p))
      throw Error(ErrorCode::Internal, "search produced a table violating a relator");
    found_.insert(standardize(tab));
  }

  struct Event {
    bool map;
    std::size_t a, b;
  };

  std::size_t cols_, gens_, max_;
  bool exact_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::size_t n_ = 0;
  std::vector<Slot> table_, phi_, phinv_;
  std::vector<std::vector<std::vector<std::size_t>>> by_first_;
  std::vector<Word> relators_;
  std::vector<std::pair<Slot *, Slot>> trail_;
  std::vector<Event> events_;
  std::set<CosetTable> found_;
};

std::vector<NormalSubgroup> package(std::vector<CosetTable> tables) {
  std::sort(tables.begin(), tables.end(), [](const CosetTable &a, const CosetTable &b) {
    if (a.index() != b.index())
      return a.index() < b.index();
    return a.entries() < b.entries();
  });
  std::vector<NormalSubgroup> out;
  for (CosetTable &t : tables) {
    std::vector<Permutation> gens;
    for (std::size_t g = 0; g < t.num_generators(); ++g)
      gens.push_back(t.generator_action(g));
    PermGroup q = PermGroup::with_known_order(t.index(), std::move(gens), t.index());
    out.push_back({std::move(t), std::move(q)});
  }
  return out;
}

} // namespace

std::vector<NormalSubgroup> low_index_normal_subgroups(const Presentation &p,
                                                       std::size_t max_index,
                                                       std::uint64_t max_nodes) {
  if (max_index < 1)
    throw Error(ErrorCode::InvalidArgument, "max_index must be at least 1");
  p.validate();
  NormalSearch s(p, max_index, false, max_nodes);
  return package(s.run());
}

std::vector<NormalSubgroup> normal_subgroups_of_index(const Presentation &p,
                                                      std::size_t index,
                                                      std::uint64_t max_nodes) {
  if (index < 1)
    throw Error(ErrorCode::InvalidArgument, "index must be at least 1");
  p.validate();
  NormalSearch s(p, index, true, max_nodes);
  return package(s.run());
}

} // namespace arcgraph::fp
