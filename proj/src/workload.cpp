#include "csc/workload.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace csc {

std::vector<EdgeUpdate> parse_workload(std::istream& in, const VertexDictionary& dict) {
  std::vector<EdgeUpdate> updates;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string op, u, v, extra;
    if (!(ss >> op) || op[0] == '#') continue;
    if (op != "+" && op != "-") throw ParseError(lineno, "expected '+' or '-', got '" + op + "'");
    if (!(ss >> u >> v)) throw ParseError(lineno, "expected two vertex ids");
    if (ss >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    EdgeUpdate up{op == "+", dict.find(u), dict.find(v)};
    if (up.from == kNoVertex) throw ParseError(lineno, "unknown vertex '" + u + "'");
    if (up.to == kNoVertex) throw ParseError(lineno, "unknown vertex '" + v + "'");
    if (up.from == up.to) throw ParseError(lineno, "self-loop");
    updates.push_back(up);
  }
  return updates;
}

void write_workload(std::ostream& out, const std::vector<EdgeUpdate>& updates, const VertexDictionary& dict) {
  for (const auto& up : updates)
    out << (up.insert ? '+' : '-') << ' ' << dict.name(up.from) << ' ' << dict.name(up.to) << '\n';
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("empty range");
  // rejection sampling keeps the draw unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<EdgeUpdate> remove_reinsert_workload(const DirectedGraph& g, std::size_t count, std::uint64_t seed) {
  auto edges = g.edges();
  Rng rng(seed);
  count = std::min(count, edges.size());
  // partial Fisher-Yates
  for (std::size_t i = 0; i < count; ++i) std::swap(edges[i], edges[i + rng.below(edges.size() - i)]);
  std::vector<EdgeUpdate> updates;
  for (std::size_t i = 0; i < count; ++i) updates.push_back({false, edges[i].first, edges[i].second});
  for (std::size_t i = 0; i < count; ++i) updates.push_back({true, edges[i].first, edges[i].second});
  return updates;
}

namespace {

std::size_t max_edges(std::size_t n) { return n < 2 ? 0 : n * (n - 1); }

void add_random_edges(DirectedGraph& g, std::size_t target, Rng& rng) {
  const auto n = g.num_vertices();
  target = std::min(target, max_edges(n));
  while (g.num_edges() < target) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u != v) g.insert_edge(u, v);
  }
}

}  // namespace

DirectedGraph generate_erdos(std::size_t n, std::size_t m, std::uint64_t seed) {
  DirectedGraph g(n);
  Rng rng(seed);
  add_random_edges(g, m, rng);
  return g;
}

DirectedGraph generate_chain(std::size_t n, std::size_t m, std::uint64_t seed) {
  DirectedGraph g(n);
  if (n >= 2) {
    for (VertexId v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1);
    if (n > 2) g.insert_edge(static_cast<VertexId>(n - 1), 0);
  }
  Rng rng(seed);
  add_random_edges(g, m, rng);
  return g;
}

DirectedGraph generate_star_cycles(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t hubs) {
  DirectedGraph g(n);
  if (n < 3) return g;
  if (hubs == 0) hubs = std::max<std::size_t>(1, n / 2500);
  hubs = std::min(hubs, n - 1);
  // an oriented graph holds at most one edge per unordered pair
  m = std::min(m, max_edges(n) / 2);
  Rng rng(seed);
  auto add = [&](VertexId u, VertexId v) { return u != v && !g.has_edge(v, u) && g.insert_edge(u, v); };

  // each hub gets `spokes` out-edges and `spokes` in-edges
  const std::size_t spokes = std::min(m / 2 / hubs / 2, (n - 1) / 2);
  for (VertexId h = 0; h < hubs; ++h) {
    for (int dir = 0; dir < 2; ++dir) {
      // bounded retries: on tiny graphs earlier hubs may use up the free pairs
      for (std::size_t added = 0, tries = 0; added < spokes && tries < 64 * n; ++tries) {
        auto x = static_cast<VertexId>(rng.below(n));
        if (dir == 0 ? add(h, x) : add(x, h)) ++added;
      }
    }
  }
  while (g.num_edges() < m) add(static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)));
  return g;
}

}  // namespace csc
