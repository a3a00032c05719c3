#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "arcgraph/error.hpp"
#include "arcgraph/graph.hpp"

namespace arcgraph {
namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    skip_ws();
    long long v = 0;
    const char *b = s_.data() + i_, *e = s_.data() + s_.size();
    if (b != e && *b == '+')
      ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p == b)
      fail("expected an integer");
    i_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(i_));
  }

private:
  std::string_view s_;
  std::size_t i_ = 0;
};

} // namespace

Graph lcf_parse(std::string_view code) {
  Cursor c(code);
  c.expect('[');
  std::vector<long long> jumps;
  do
    jumps.push_back(c.integer());
  while (c.eat(','));
  c.expect(']');
  long long reps = 1;
  if (c.eat('^'))
    reps = c.integer();
  if (!c.done())
    c.fail("trailing characters");
  if (reps < 1)
    throw Error(ErrorCode::Parse, "repeat count must be positive");
  const long long n = static_cast<long long>(jumps.size()) * reps;
  if (n < 3 || n > (1LL << 28))
    throw Error(ErrorCode::InvalidArgument, "LCF order out of range");

  std::set<Edge> edges;
  for (long long i = 0; i < n; ++i) {
    auto u = static_cast<Point>(i), v = static_cast<Point>((i + 1) % n);
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  if (static_cast<long long>(edges.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "Hamiltonian cycle is degenerate");
  std::set<Edge> chords;
  for (long long i = 0; i < n; ++i) {
    long long j = jumps[static_cast<std::size_t>(i % static_cast<long long>(jumps.size()))];
    long long t = ((i + j) % n + n) % n;
    if (t == i)
      throw Error(ErrorCode::InvalidArgument,
                  "chord rule creates a loop at vertex " + std::to_string(i));
    auto u = static_cast<Point>(i), v = static_cast<Point>(t);
    Edge e{std::min(u, v), std::max(u, v)};
    if (edges.count(e))
      throw Error(ErrorCode::InvalidArgument,
                  "chord duplicates a cycle edge at vertex " + std::to_string(i));
    chords.insert(e);
  }
  edges.insert(chords.begin(), chords.end());
  std::vector<Edge> list(edges.begin(), edges.end());
  Graph g = Graph::from_edges(static_cast<std::size_t>(n), list);
  if (g.valency() != std::optional<std::size_t>(3))
    throw Error(ErrorCode::InvalidArgument,
                "inconsistent chords: the LCF graph is not cubic");
  return g;
}

namespace {

void put_n(std::string &out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else if (n <= 68719476735ULL) {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6)
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    throw Error(ErrorCode::InvalidArgument, "graph too large for graph6");
  }
}

[[noreturn]] void fail(const std::string &what) {
  throw Error(ErrorCode::Parse, "graph6: " + what);
}

} // namespace

std::string graph6_encode(const Graph &g) {
  std::string out;
  const std::uint64_t n = g.order();
  put_n(out, n);
  int acc = 0, bits = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Point>(i), static_cast<Point>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0)
    out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header)
    s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  for (char ch : s)
    if (ch < 63 || ch > 126)
      fail("byte out of range");
  std::size_t pos = 0;
  auto take = [&](int count) {
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= s.size())
        fail("truncated header");
      v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    }
    return v;
  };
  if (s.empty())
    fail("empty input");
  std::uint64_t n;
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take(3);
    if (n <= 62)
      fail("non-minimal order header");
  } else {
    pos += 2;
    n = take(6);
    if (n <= 258047)
      fail("non-minimal order header");
  }
  if (n > (1ULL << 24))
    throw Error(ErrorCode::InvalidArgument, "graph6: order too large to load");
  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes)
    fail("body has " + std::to_string(s.size() - pos) + " bytes, expected " +
         std::to_string(nbytes));
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1)
        edges.emplace_back(static_cast<Point>(i), static_cast<Point>(j));
    }
  if (nbits % 6 != 0) {
    int last = s.back() - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1))
      fail("nonzero padding bits");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list(std::istream &in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string_view comment(line);
      comment.remove_prefix(hash + 1);
      while (!comment.empty() && comment.front() == ' ')
        comment.remove_prefix(1);
      if (comment.substr(0, 2) == "n=") {
        std::size_t v = 0;
        auto r = std::from_chars(comment.data() + 2, comment.data() + comment.size(), v);
        if (r.ec != std::errc())
          throw Error(ErrorCode::Parse, "bad order declaration on line " +
                                            std::to_string(lineno));
        declared = v;
      }
      line.resize(hash);
    }
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw Error(ErrorCode::Parse, "malformed edge on line " + std::to_string(lineno));
      continue;
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0)
      throw Error(ErrorCode::Parse, "malformed edge on line " + std::to_string(lineno));
    edges.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (declared) {
    if (*declared < n)
      throw Error(ErrorCode::Parse, "edge endpoint exceeds declared order");
    n = *declared;
  }
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << "# n=" << g.order() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

} // namespace arcgraph
