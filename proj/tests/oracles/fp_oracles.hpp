#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

// Exhaustive epimorphism oracle: every pair (X, Y) in S_m with X^2 = Y^3 = 1
// generating a group of order <= limit, keyed by the regular Cayley table of
// <X, Y> labelled in breadth-first order over the columns (X, X^-1, Y, Y^-1).
// Two epimorphisms from C2 * C3 share a kernel iff their keys coincide.
using P7 = std::array<std::uint8_t, 7>;

inline P7 mul(const P7 &a, const P7 &b) {
  P7 r{};
  for (std::size_t i = 0; i < 7; ++i)
    r[i] = b[a[i]];
  return r;
}

inline std::optional<std::vector<std::int32_t>>
cayley_key(const P7 &x, const P7 &y, std::size_t limit) {
  P7 id{};
  std::iota(id.begin(), id.end(), 0);
  P7 yi = mul(y, y);
  std::array<P7, 4> cols{x, x, y, yi};
  std::map<P7, std::int32_t> label{{id, 0}};
  std::vector<P7> order{id};
  std::vector<std::int32_t> table;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const P7 &g : cols) {
      P7 e = mul(order[i], g);
      auto [it, fresh] = label.emplace(e, static_cast<std::int32_t>(order.size()));
      if (fresh) {
        order.push_back(e);
        if (order.size() > limit)
          return std::nullopt;
      }
      table.push_back(it->second);
    }
  return table;
}

inline std::set<std::vector<std::int32_t>> epimorphism_kernels(std::size_t limit) {
  std::vector<P7> all, invols, triples;
  P7 p{};
  std::iota(p.begin(), p.end(), 0);
  do {
    P7 p2 = mul(p, p);
    if (std::is_sorted(p2.begin(), p2.end()) && p2[0] == 0 && p2[6] == 6)
      invols.push_back(p);
    P7 p3 = mul(p2, p);
    bool id3 = true;
    for (std::size_t i = 0; i < 7; ++i)
      id3 = id3 && p3[i] == i;
    if (id3)
      triples.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::set<std::vector<std::int32_t>> keys;
  for (const P7 &x : invols)
    for (const P7 &y : triples)
      if (auto k = cayley_key(x, y, limit))
        keys.insert(*k);
  return keys;
}

} // namespace oracle
