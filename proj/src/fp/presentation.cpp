#include <cstdlib>

#include "arcgraph/error.hpp"
#include "arcgraph/fp.hpp"

namespace arcgraph::fp {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  // Cyclic reduction is not applied: relators are compared as words.
  return out;
}

Word inverse_word(const Word &w) {
  Word out(w.rbegin(), w.rend());
  for (Letter &l : out)
    l = -l;
  return out;
}

std::string format_word(const Word &w) {
  std::string s;
  for (Letter l : w) {
    int g = std::abs(l) - 1;
    char c = g < 3 ? static_cast<char>('x' + g) : static_cast<char>('a' + g - 3);
    s.push_back(l < 0 ? static_cast<char>(c - 'a' + 'A') : c);
  }
  return s.empty() ? "1" : s;
}

Presentation Presentation::universal(int d) {
  if (d < 1)
    throw Error(ErrorCode::InvalidArgument, "d must be positive");
  Presentation p;
  p.num_generators = 2;
  p.relators.push_back({1, 1});
  p.relators.push_back(Word(static_cast<std::size_t>(d), 2));
  return p;
}

void Presentation::validate() const {
  for (const Word &r : relators) {
    if (r.empty())
      throw Error(ErrorCode::InvalidArgument, "empty relator");
    for (Letter l : r)
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > num_generators)
        throw Error(ErrorCode::InvalidArgument, "relator uses unknown generator");
    if (free_reduce(r) != r)
      throw Error(ErrorCode::InvalidArgument, "relator is not freely reduced");
  }
}

Presentation make_presentation(std::size_t num_generators,
                               std::vector<Word> relators) {
  Presentation p;
  p.num_generators = num_generators;
  for (Word &r : relators) {
    Word red = free_reduce(std::move(r));
    if (red.empty())
      throw Error(ErrorCode::InvalidArgument, "relator reduces to the empty word");
    p.relators.push_back(std::move(red));
  }
  p.validate();
  return p;
}

CosetTable::CosetTable(std::size_t num_generators, std::size_t index,
                       std::vector<std::int32_t> entries)
    : gens_(num_generators), index_(index), data_(std::move(entries)) {
  if (data_.size() != index_ * 2 * gens_)
    throw Error(ErrorCode::InvalidArgument, "coset table size mismatch");
  for (std::int32_t e : data_)
    if (e < -1 || e >= static_cast<std::int32_t>(index_))
      throw Error(ErrorCode::InvalidArgument, "coset table entry out of range");
}

std::int32_t CosetTable::trace(std::size_t coset, const Word &w) const {
  std::int32_t c = static_cast<std::int32_t>(coset);
  for (Letter l : w) {
    c = act(static_cast<std::size_t>(c), l);
    if (c < 0)
      return -1;
  }
  return c;
}

bool CosetTable::is_closed() const {
  for (std::int32_t e : data_)
    if (e < 0)
      return false;
  return true;
}

bool CosetTable::satisfies(const Presentation &p) const {
  for (std::size_t c = 0; c < index_; ++c)
    for (const Word &r : p.relators)
      if (trace(c, r) != static_cast<std::int32_t>(c))
        return false;
  return true;
}

Permutation CosetTable::generator_action(std::size_t g) const {
  if (!is_closed())
    throw Error(ErrorCode::InvalidArgument, "coset table is not closed");
  std::vector<Point> img(index_);
  for (std::size_t c = 0; c < index_; ++c)
    img[c] = static_cast<Point>(entry(c, 2 * g));
  return Permutation(std::move(img));
}

CosetTable standardize(const CosetTable &t) {
  if (!t.is_closed())
    throw Error(ErrorCode::InvalidArgument, "coset table is not closed");
  const std::size_t n = t.index(), cols = t.num_columns();
  std::vector<std::int32_t> fwd(n, -1), back;
  back.reserve(n);
  fwd[0] = 0;
  back.push_back(0);
  for (std::size_t i = 0; i < back.size(); ++i)
    for (std::size_t c = 0; c < cols; ++c) {
      auto e = static_cast<std::size_t>(t.entry(static_cast<std::size_t>(back[i]), c));
      if (fwd[e] < 0) {
        fwd[e] = static_cast<std::int32_t>(back.size());
        back.push_back(static_cast<std::int32_t>(e));
      }
    }
  if (back.size() != n)
    throw Error(ErrorCode::InvalidArgument, "coset table is not transitive");
  std::vector<std::int32_t> data(n * cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < cols; ++c)
      data[i * cols + c] =
          fwd[static_cast<std::size_t>(t.entry(static_cast<std::size_t>(back[i]), c))];
  return CosetTable(t.num_generators(), n, std::move(data));
}

PermGroup coset_action(const CosetTable &t) {
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < t.num_generators(); ++g)
    gens.push_back(t.generator_action(g));
  return PermGroup(t.index(), std::move(gens));
}

} // namespace arcgraph::fp
