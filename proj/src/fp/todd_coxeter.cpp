#include <deque>
#include <numeric>

#include "arcgraph/error.hpp"
#include "arcgraph/fp.hpp"

namespace arcgraph::fp {
namespace {

class Enumerator {
public:
  Enumerator(const Presentation &p, std::size_t max_cosets)
      : gens_(p.num_generators), cols_(2 * p.num_generators),
        max_live_(max_cosets) {
    for (const Word &r : p.relators) {
      std::vector<std::size_t> w;
      for (Letter l : r)
        w.push_back(CosetTable::column(l));
      relators_.push_back(std::move(w));
    }
    new_coset();
  }

  CosetTable run(const std::vector<Word> &subgroup) {
    for (const Word &sw : subgroup) {
      std::vector<std::size_t> w;
      for (Letter l : free_reduce(sw))
        w.push_back(CosetTable::column(l));
      scan_and_fill(0, w);
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto &r : relators_) {
        if (!alive(c))
          break;
        scan_and_fill(c, r);
      }
      for (std::size_t col = 0; col < cols_ && alive(c); ++col)
        if (at(c, col) < 0)
          define(c, col);
    }
    return compact();
  }

private:
  std::int32_t &at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != static_cast<std::int32_t>(r))
      r = static_cast<std::size_t>(parent_[r]);
    while (parent_[c] != static_cast<std::int32_t>(r)) {
      std::size_t next = static_cast<std::size_t>(parent_[c]);
      parent_[c] = static_cast<std::int32_t>(r);
      c = next;
    }
    return r;
  }

  std::size_t new_coset() {
    std::size_t c = parent_.size();
    parent_.push_back(static_cast<std::int32_t>(c));
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    return c;
  }

  void define(std::size_t c, std::size_t col) {
    if (live_ >= max_live_) {
      lookahead();
      if (!alive(c) || at(c, col) >= 0)
        return;
      if (live_ >= max_live_)
        throw Error(ErrorCode::BudgetExceeded,
                    "coset enumeration exceeded " + std::to_string(max_live_) +
                        " cosets");
    }
    if (parent_.size() >= 8 * max_live_ + 64)
      throw Error(ErrorCode::BudgetExceeded, "coset table storage exhausted");
    std::size_t n = new_coset();
    at(c, col) = static_cast<std::int32_t>(n);
    at(n, col ^ 1) = static_cast<std::int32_t>(c);
  }

  // Scans w from c in both directions, defining new cosets as needed.
  void scan_and_fill(std::size_t c, const std::vector<std::size_t> &w) {
    while (true) {
      if (scan(c, w, true))
        return;
      if (!alive(c))
        return;
    }
  }

  // One scan step. Returns true when the scan is finished (closed, deduced or
  // a coincidence was processed); false after a new coset was defined.
  bool scan(std::size_t c, const std::vector<std::size_t> &w, bool fill) {
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (i < j && at(f, w[i]) >= 0)
      f = static_cast<std::size_t>(at(f, w[i++]));
    if (i == j) {
      if (f != b)
        coincidence(f, b);
      return true;
    }
    while (j > i && at(b, w[j - 1] ^ 1) >= 0)
      b = static_cast<std::size_t>(at(b, w[--j] ^ 1));
    if (j == i) {
      coincidence(f, b);
      return true;
    }
    if (j == i + 1) {
      at(f, w[i]) = static_cast<std::int32_t>(b);
      at(b, w[i] ^ 1) = static_cast<std::int32_t>(f);
      return true;
    }
    if (!fill)
      return true;
    define(f, w[i]);
    return false;
  }

  void lookahead() {
    for (std::size_t c = 0; c < parent_.size(); ++c)
      for (const auto &r : relators_) {
        if (!alive(c))
          break;
        scan(c, r, false);
      }
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t> &queue) {
    a = rep(a);
    b = rep(b);
    if (a == b)
      return;
    if (a > b)
      std::swap(a, b);
    parent_[b] = static_cast<std::int32_t>(a);
    --live_;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t col = 0; col < cols_; ++col) {
        std::int32_t fv = at(e, col);
        if (fv < 0)
          continue;
        auto f = static_cast<std::size_t>(fv);
        if (at(f, col ^ 1) == static_cast<std::int32_t>(e))
          at(f, col ^ 1) = -1;
        std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, col) >= 0)
          merge(f1, static_cast<std::size_t>(at(e1, col)), queue);
        else if (at(f1, col ^ 1) >= 0)
          merge(e1, static_cast<std::size_t>(at(f1, col ^ 1)), queue);
        else {
          at(e1, col) = static_cast<std::int32_t>(f1);
          at(f1, col ^ 1) = static_cast<std::int32_t>(e1);
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<std::int32_t> fwd(parent_.size(), -1);
    std::int32_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(c))
        fwd[c] = n++;
    std::vector<std::int32_t> data;
    data.reserve(static_cast<std::size_t>(n) * cols_);
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(c))
        for (std::size_t col = 0; col < cols_; ++col) {
          std::int32_t e = at(c, col);
          if (e < 0)
            throw Error(ErrorCode::Internal, "coset table left incomplete");
          data.push_back(fwd[rep(static_cast<std::size_t>(e))]);
        }
    return standardize(CosetTable(gens_, static_cast<std::size_t>(n), std::move(data)));
  }

  std::size_t gens_, cols_, max_live_;
  std::size_t live_ = 0;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
};

} // namespace

CosetTable todd_coxeter(const Presentation &p, const std::vector<Word> &subgroup,
                        std::size_t max_cosets) {
  if (max_cosets < 1)
    throw Error(ErrorCode::InvalidArgument, "max_cosets must be at least 1");
  p.validate();
  for (const Word &w : subgroup)
    for (Letter l : w)
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > p.num_generators)
        throw Error(ErrorCode::InvalidArgument, "subgroup word uses unknown generator");
  Enumerator e(p, max_cosets);
  return e.run(subgroup);
}

} // namespace arcgraph::fp
