#pragma once

// Brute-force ground truth for tests. Shares only the graph container and
// result types with the library; no label or query code.

#include <vector>

#include "csc/graph.hpp"
#include "csc/label.hpp"
#include "csc/ordering.hpp"
#include "csc/query.hpp"

namespace csc::oracle {

// Exact shortest distances and path counts for every ordered pair.
class AllPairs {
 public:
  explicit AllPairs(const DirectedGraph& g);

  std::size_t size() const { return n_; }
  std::uint32_t dist(VertexId s, VertexId t) const { return dist_[s * n_ + t]; }
  Count count(VertexId s, VertexId t) const { return count_[s * n_ + t]; }
  QueryResult result(VertexId s, VertexId t) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
  std::vector<Count> count_;
};

// Minimum over out-neighbours w of sd(w,v)+1 restricted to >= min_len, count
// summed over the minimising neighbours.
QueryResult sccnt(const AllPairs& ap, const DirectedGraph& g, VertexId v, std::uint32_t min_len);
QueryResult sccnt(const DirectedGraph& g, VertexId v, std::uint32_t min_len);

// Enumerates simple cycles through v by DFS. Exponential; tiny graphs only.
QueryResult enumerate_sccnt(const DirectedGraph& g, VertexId v, std::uint32_t min_len);

// The label set the cover constraint mandates under `ord`: (h, sd, c) in
// L_in(t) iff some shortest h->t path has h as its top vertex, c counting
// those paths; canonical iff every shortest path qualifies. Out-labels
// mirror this. Lists are sorted by hub rank.
struct LabelSets {
  std::vector<LabelList> in;
  std::vector<LabelList> out;
};
LabelSets expected_labels(const DirectedGraph& g, const VertexOrdering& ord);

}  // namespace csc::oracle
