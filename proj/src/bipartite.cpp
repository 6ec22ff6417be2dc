#include "csc/bipartite.hpp"

namespace csc {

BipartiteGraph bipartite_convert(const DirectedGraph& g) {
  BipartiteGraph gb;
  gb.base_ = DirectedGraph(2 * g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    gb.base_.insert_edge(in_vertex(v), out_vertex(v));
    for (VertexId w : g.out_neighbors(v)) gb.base_.insert_edge(out_vertex(v), in_vertex(w));
  }
  return gb;
}

bool BipartiteGraph::insert_original_edge(VertexId v, VertexId w) {
  if (v == w) throw Error("self-loop rejected");
  return base_.insert_edge(out_vertex(v), in_vertex(w));
}

bool BipartiteGraph::delete_original_edge(VertexId v, VertexId w) {
  if (v == w) throw Error("self-loop rejected");
  return base_.delete_edge(out_vertex(v), in_vertex(w));
}

DirectedGraph BipartiteGraph::original() const {
  DirectedGraph g(num_original_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId x : base_.out_neighbors(out_vertex(v))) g.insert_edge(v, original_of(x));
  return g;
}

}  // namespace csc
