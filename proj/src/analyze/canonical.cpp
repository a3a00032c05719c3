#include <algorithm>
#include <deque>
#include <numeric>

#include "arcgraph/analyze.hpp"
#include "arcgraph/error.hpp"

namespace arcgraph {
namespace {

// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`
// identified by their start position.
struct Partition {
  std::vector<Point> lab;            // position -> vertex
  std::vector<std::uint32_t> pos;    // vertex -> position
  std::vector<std::uint32_t> cell;   // vertex -> start of its cell
  std::vector<std::uint32_t> end;    // start -> one past the end of the cell
  std::size_t cells = 0;

  explicit Partition(std::size_t n) : lab(n), pos(n), cell(n, 0), end(n + 1, 0) {
    std::iota(lab.begin(), lab.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    if (n > 0) {
      end[0] = static_cast<std::uint32_t>(n);
      cells = 1;
    }
  }
  bool discrete() const { return cells == lab.size(); }
  void place(Point v, std::uint32_t p) {
    lab[p] = v;
    pos[v] = p;
  }
};

class Refiner {
public:
  explicit Refiner(const Graph &g)
      : g_(g), cnt_(g.order(), 0), queued_(g.order() + 1, 0) {}

  // Individualises v (moves it to the front of its cell) and refines.
  void individualize(Partition &p, Point v) {
    std::uint32_t s = p.cell[v], e = p.end[s];
    Point front = p.lab[s];
    std::uint32_t pv = p.pos[v];
    p.place(front, pv);
    p.place(v, s);
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i)
      p.cell[p.lab[i]] = s + 1;
    ++p.cells;
    refine(p, {s});
  }

  void refine(Partition &p, std::vector<std::uint32_t> initial) {
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s : initial)
      push(queue, s);
    std::vector<Point> members, touched, group;
    while (!queue.empty()) {
      std::uint32_t w = queue.front();
      queue.pop_front();
      queued_[w] = 0;
      members.assign(p.lab.begin() + w, p.lab.begin() + p.end[w]);
      touched.clear();
      for (Point u : members)
        for (Point x : g_.neighbors(u))
          if (cnt_[x]++ == 0)
            touched.push_back(x);
      std::sort(touched.begin(), touched.end(), [&](Point a, Point b) {
        return p.cell[a] != p.cell[b] ? p.cell[a] < p.cell[b] : a < b;
      });
      for (std::size_t i = 0; i < touched.size();) {
        std::size_t j = i;
        std::uint32_t s = p.cell[touched[i]];
        while (j < touched.size() && p.cell[touched[j]] == s)
          ++j;
        group.assign(touched.begin() + static_cast<std::ptrdiff_t>(i),
                     touched.begin() + static_cast<std::ptrdiff_t>(j));
        split(p, s, group, queue);
        i = j;
      }
      for (Point x : touched)
        cnt_[x] = 0;
    }
  }

private:
  void push(std::deque<std::uint32_t> &q, std::uint32_t s) {
    if (!queued_[s]) {
      queued_[s] = 1;
      q.push_back(s);
    }
  }

  void split(Partition &p, std::uint32_t s, const std::vector<Point> &t,
             std::deque<std::uint32_t> &queue) {
    const std::uint32_t e = p.end[s];
    const std::uint32_t size = e - s;
    if (size == 1)
      return;
    if (t.size() == size) {
      bool uniform = true;
      for (Point x : t)
        uniform = uniform && cnt_[x] == cnt_[t[0]];
      if (uniform)
        return;
    }
    // Move touched vertices to the tail, then order the tail by count.
    std::uint32_t k = e;
    for (Point x : t) {
      --k;
      Point y = p.lab[k];
      std::uint32_t px = p.pos[x];
      p.place(y, px);
      p.place(x, k);
    }
    std::sort(p.lab.begin() + k, p.lab.begin() + e,
              [&](Point a, Point b) { return cnt_[a] < cnt_[b]; });
    for (std::uint32_t i = k; i < e; ++i)
      p.pos[p.lab[i]] = i;

    std::vector<std::uint32_t> starts;
    if (k > s)
      starts.push_back(s);
    for (std::uint32_t i = k; i < e; ++i)
      if (i == k || cnt_[p.lab[i]] != cnt_[p.lab[i - 1]])
        starts.push_back(i);
    if (starts.size() == 1)
      return;
    for (std::size_t f = 0; f < starts.size(); ++f) {
      std::uint32_t fs = starts[f];
      std::uint32_t fe = f + 1 < starts.size() ? starts[f + 1] : e;
      p.end[fs] = fe;
      if (fs != s)
        for (std::uint32_t i = fs; i < fe; ++i)
          p.cell[p.lab[i]] = fs;
    }
    p.cells += starts.size() - 1;
    if (queued_[s]) {
      for (std::size_t f = 1; f < starts.size(); ++f)
        push(queue, starts[f]);
    } else {
      std::size_t largest = 0;
      for (std::size_t f = 1; f < starts.size(); ++f)
        if (p.end[starts[f]] - starts[f] > p.end[starts[largest]] - starts[largest])
          largest = f;
      for (std::size_t f = 0; f < starts.size(); ++f)
        if (f != largest)
          push(queue, starts[f]);
    }
  }

  const Graph &g_;
  std::vector<std::uint32_t> cnt_;
  std::vector<char> queued_;
};

struct Leaf {
  std::vector<Point> lab;
  std::vector<std::uint64_t> key; // sorted graph6 bit positions of the edges
  std::vector<Point> path;
};

// graph6 order: a leaf is smaller when, at the first differing edge position,
// it has the larger position (the other leaf has a 1 bit there first).
bool graph6_less(const std::vector<std::uint64_t> &a,
                 const std::vector<std::uint64_t> &b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i])
      return a[i] > b[i];
  return a.size() < b.size();
}

class Search {
public:
  explicit Search(const Graph &g) : g_(g), refiner_(g) {}

  SymmetrySearch run() {
    const std::size_t n = g_.order();
    Partition root(n);
    if (n > 0)
      refiner_.refine(root, {0});
    dfs(root, 0);

    SymmetrySearch out;
    out.nodes = nodes_;
    out.generators = autos_;
    out.first_path = first_.path;
    std::vector<Point> labels(n);
    for (std::uint32_t i = 0; i < n; ++i)
      labels[best_.lab[i]] = i;
    out.canon.labeling = Permutation(std::move(labels));
    out.canon.certificate = graph6_encode(g_.relabel(out.canon.labeling));
    std::uint64_t order = 1;
    for (std::size_t l = 0; l < first_.path.size(); ++l) {
      std::vector<Point> prefix(first_.path.begin(),
                                first_.path.begin() + static_cast<std::ptrdiff_t>(l));
      auto rep = orbit_reps(prefix);
      Point target = rep[first_.path[l]];
      order *= static_cast<std::uint64_t>(
          std::count(rep.begin(), rep.end(), target));
    }
    out.aut_order = order;
    return out;
  }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Union-find orbit representatives of the automorphisms fixing `prefix`.
  std::vector<Point> orbit_reps(const std::vector<Point> &prefix) const {
    std::vector<Point> parent(g_.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Point x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation &a : autos_) {
      bool fixes = true;
      for (Point v : prefix)
        fixes = fixes && a[v] == v;
      if (!fixes)
        continue;
      for (Point v = 0; v < g_.order(); ++v) {
        Point r1 = find(v), r2 = find(a[v]);
        if (r1 != r2)
          parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
    for (Point v = 0; v < g_.order(); ++v)
      parent[v] = find(v);
    return parent;
  }

  std::size_t dfs(const Partition &p, std::size_t level) {
    ++nodes_;
    if (p.discrete())
      return leaf(p);
    std::uint32_t target = 0, best_size = UINT32_MAX;
    for (std::uint32_t s = 0; s < p.lab.size(); s = p.end[s]) {
      std::uint32_t sz = p.end[s] - s;
      if (sz > 1 && sz < best_size) {
        best_size = sz;
        target = s;
      }
    }
    std::vector<Point> children(p.lab.begin() + target, p.lab.begin() + p.end[target]);
    std::sort(children.begin(), children.end());
    std::vector<Point> explored;
    std::vector<Point> reps;
    std::size_t reps_autos = kNone;
    for (Point v : children) {
      if (!explored.empty()) {
        if (reps_autos != autos_.size()) {
          reps = orbit_reps(path_);
          reps_autos = autos_.size();
        }
        bool seen = false;
        for (Point u : explored)
          seen = seen || reps[u] == reps[v];
        if (seen)
          continue;
      }
      explored.push_back(v);
      Partition q = p;
      refiner_.individualize(q, v);
      path_.push_back(v);
      std::size_t r = dfs(q, level + 1);
      path_.pop_back();
      if (r != kNone && r < level)
        return r;
    }
    return kNone;
  }

  std::size_t leaf(const Partition &p) {
    Leaf cur;
    cur.lab = p.lab;
    cur.path = path_;
    cur.key.reserve(g_.size());
    for (auto [u, v] : g_.edges()) {
      std::uint64_t a = p.pos[u], b = p.pos[v];
      if (a > b)
        std::swap(a, b);
      cur.key.push_back(b * (b - 1) / 2 + a);
    }
    std::sort(cur.key.begin(), cur.key.end());
    if (!have_first_) {
      have_first_ = true;
      first_ = cur;
      best_ = std::move(cur);
      return kNone;
    }
    if (cur.key == first_.key) {
      add_automorphism(first_, cur);
      return common_prefix(cur.path, first_.path);
    }
    if (cur.key == best_.key) {
      add_automorphism(best_, cur);
      return common_prefix(cur.path, best_.path);
    }
    if (graph6_less(cur.key, best_.key))
      best_ = std::move(cur);
    return kNone;
  }

  void add_automorphism(const Leaf &from, const Leaf &to) {
    const std::size_t n = g_.order();
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[from.lab[i]] = to.lab[i];
    Permutation a(std::move(img));
    if (!is_automorphism(g_, a))
      throw Error(ErrorCode::Internal, "equal leaves gave a non-automorphism");
    if (!a.is_identity())
      autos_.push_back(std::move(a));
  }

  static std::size_t common_prefix(const std::vector<Point> &a,
                                   const std::vector<Point> &b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i])
      ++i;
    return i;
  }

  const Graph &g_;
  Refiner refiner_;
  std::vector<Point> path_;
  std::vector<Permutation> autos_;
  bool have_first_ = false;
  Leaf first_, best_;
  std::uint64_t nodes_ = 0;
};

} // namespace

SymmetrySearch symmetry_search(const Graph &g) {
  Search s(g);
  return s.run();
}

CanonicalForm canonical_form(const Graph &g) { return symmetry_search(g).canon; }

bool isomorphic(const Graph &a, const Graph &b) {
  if (a.order() != b.order() || a.size() != b.size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

PermGroup automorphism_group(const Graph &g) {
  SymmetrySearch s = symmetry_search(g);
  return PermGroup::with_known_order(g.order(), std::move(s.generators), s.aut_order);
}

} // namespace arcgraph
