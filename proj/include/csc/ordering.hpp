#pragma once

#include <vector>

#include "csc/bipartite.hpp"

namespace csc {

// rank 0 is the most important vertex.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  // order[r] is the vertex at rank r
  explicit VertexOrdering(std::vector<VertexId> order);

  std::size_t size() const { return order_.size(); }
  std::uint32_t rank(VertexId v) const { return rank_[v]; }
  VertexId at_rank(std::uint32_t r) const { return order_[r]; }
  bool precedes(VertexId a, VertexId b) const { return rank_[a] < rank_[b]; }
  const std::vector<VertexId>& order() const { return order_; }

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) { return a.order_ == b.order_; }

 private:
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> rank_;
};

// Descending total degree, ties by ascending id.
VertexOrdering compute_ordering(const DirectedGraph& g);
// Couple pairs ranked by their original vertex, v_in directly above v_out.
VertexOrdering compute_ordering(const BipartiteGraph& gb);
VertexOrdering bipartite_ordering(const VertexOrdering& original);

}  // namespace csc
