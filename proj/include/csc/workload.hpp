#pragma once

#include <iosfwd>
#include <random>
#include <vector>

#include "csc/graph.hpp"

namespace csc {

struct EdgeUpdate {
  bool insert = true;
  VertexId from = 0;
  VertexId to = 0;

  friend bool operator==(const EdgeUpdate&, const EdgeUpdate&) = default;
};

// Lines "+ u v" / "- u v" in original vertex names; '#' comments allowed.
std::vector<EdgeUpdate> parse_workload(std::istream& in, const VertexDictionary& dict);
void write_workload(std::ostream& out, const std::vector<EdgeUpdate>& updates, const VertexDictionary& dict);

// Uniform integers independent of the standard library's distributions, so
// generated graphs are identical across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// `count` distinct existing edges removed one by one, then reinserted in the
// same order.
std::vector<EdgeUpdate> remove_reinsert_workload(const DirectedGraph& g, std::size_t count, std::uint64_t seed);

// m distinct uniformly random edges (capped at n(n-1)).
DirectedGraph generate_erdos(std::size_t n, std::size_t m, std::uint64_t seed);

// Ring 0->1->...->n-1->0 plus random chords up to m edges in total.
DirectedGraph generate_chain(std::size_t n, std::size_t m, std::uint64_t seed);

// Vertices 0..hubs-1 are planted hubs: half of the edge budget is spread over
// them as in- and out-edges to random vertices, the other half is random
// background edges that close cycles through the hubs. No edge is ever
// paired with its reverse, so every cycle has at least 3 edges. hubs = 0
// picks max(1, n / 2500).
DirectedGraph generate_star_cycles(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t hubs = 0);

}  // namespace csc
