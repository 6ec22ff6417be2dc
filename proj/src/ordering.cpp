#include "csc/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace csc {

VertexOrdering::VertexOrdering(std::vector<VertexId> order) : order_(std::move(order)), rank_(order_.size(), kNoVertex) {
  for (std::uint32_t r = 0; r < order_.size(); ++r) {
    VertexId v = order_[r];
    if (v >= order_.size() || rank_[v] != kNoVertex) throw Error("ordering is not a permutation");
    rank_[v] = r;
  }
}

namespace {

VertexOrdering by_degree(const std::vector<std::size_t>& degree) {
  std::vector<VertexId> order(degree.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return degree[a] > degree[b]; });
  return VertexOrdering(std::move(order));
}

}  // namespace

VertexOrdering compute_ordering(const DirectedGraph& g) {
  std::vector<std::size_t> degree(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) degree[v] = g.in_degree(v) + g.out_degree(v);
  return by_degree(degree);
}

VertexOrdering compute_ordering(const BipartiteGraph& gb) {
  const auto& base = gb.base();
  std::vector<std::size_t> degree(gb.num_original_vertices());
  // couple edge excluded on both sides
  for (VertexId v = 0; v < degree.size(); ++v)
    degree[v] = base.in_degree(in_vertex(v)) + base.out_degree(out_vertex(v));
  return bipartite_ordering(by_degree(degree));
}

VertexOrdering bipartite_ordering(const VertexOrdering& original) {
  std::vector<VertexId> order;
  order.reserve(2 * original.size());
  for (VertexId v : original.order()) {
    order.push_back(in_vertex(v));
    order.push_back(out_vertex(v));
  }
  return VertexOrdering(std::move(order));
}

}  // namespace csc
