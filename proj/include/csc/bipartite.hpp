#pragma once

#include "csc/graph.hpp"

namespace csc {

enum class Side : std::uint8_t { kIn = 0, kOut = 1 };

// Vertex v of the original graph becomes v_in = 2v and v_out = 2v+1.
inline constexpr VertexId in_vertex(VertexId v) { return 2 * v; }
inline constexpr VertexId out_vertex(VertexId v) { return 2 * v + 1; }
inline constexpr VertexId couple_of(VertexId x) { return x ^ 1u; }
inline constexpr VertexId original_of(VertexId x) { return x >> 1; }
inline constexpr Side side_of(VertexId x) { return (x & 1u) ? Side::kOut : Side::kIn; }
inline constexpr bool is_in_vertex(VertexId x) { return (x & 1u) == 0; }

// Couple edges v_in -> v_out for every v, and v_out -> w_in for every
// original edge (v, w).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  std::size_t num_original_vertices() const { return base_.num_vertices() / 2; }
  std::size_t num_original_edges() const { return base_.num_edges() - num_original_vertices(); }
  const DirectedGraph& base() const { return base_; }

  bool has_original_edge(VertexId v, VertexId w) const { return base_.has_edge(out_vertex(v), in_vertex(w)); }
  bool insert_original_edge(VertexId v, VertexId w);
  bool delete_original_edge(VertexId v, VertexId w);

  // Recovers the original graph.
  DirectedGraph original() const;

 private:
  friend BipartiteGraph bipartite_convert(const DirectedGraph& g);
  DirectedGraph base_;
};

BipartiteGraph bipartite_convert(const DirectedGraph& g);

}  // namespace csc
