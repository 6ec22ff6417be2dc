#pragma once

#include "csc/label_index.hpp"

namespace csc {

struct BuildOptions {
  // Distance-pruning query reads canonical entries only. Setting this to false
  // reads every entry; both settings yield the same index.
  bool prune_with_canonical_only = true;
};

// Pruned BFS labeling over a plain directed graph.
LabelIndex build_hpspc(const DirectedGraph& g, const VertexOrdering& ord, const BuildOptions& opts = {});

// Labeling over the bipartite graph with couple-vertex skipping. `ord` must be
// couple-consecutive (see bipartite_ordering).
LabelIndex build_csc(const BipartiteGraph& gb, const VertexOrdering& ord, const BuildOptions& opts = {});

// Reference for tests: plain labeling over the bipartite graph, no skipping.
// Returns a kPlain index over 2n vertices.
LabelIndex build_csc_without_skipping(const BipartiteGraph& gb, const VertexOrdering& ord);

}  // namespace csc
