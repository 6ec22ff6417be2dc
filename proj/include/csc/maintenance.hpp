#pragma once

#include <optional>

#include "csc/query.hpp"

namespace csc {

enum class UpdateStrategy : std::uint8_t {
  kRedundancy,  // leave distance-dominated entries in place
  kMinimality,  // purge them through the inverted hub lists
};

struct UpdateConfig {
  UpdateStrategy strategy = UpdateStrategy::kRedundancy;
  std::uint32_t min_cycle_len = 3;
  // Test hook: process affected hubs lowest rank first.
  bool ascending_hub_order = false;
};

struct UpdateStats {
  bool applied = true;  // false when the edge update was a no-op
  std::size_t affected_hubs = 0;
  std::size_t labels_inserted = 0;
  std::size_t labels_replaced = 0;     // shorter distance
  std::size_t labels_accumulated = 0;  // same distance, more paths
  std::size_t labels_deleted = 0;      // deletion step 2
  std::size_t labels_cleaned = 0;      // minimality purge
  std::size_t vertices_visited = 0;
  double seconds = 0;

  std::size_t labels_touched() const {
    return labels_inserted + labels_replaced + labels_accumulated + labels_deleted + labels_cleaned;
  }
  UpdateStats& operator+=(const UpdateStats& o);
};

// Patch `idx` after edge (a,b) was inserted into `g`. `g` is the indexed
// graph: the original graph for a plain index, the bipartite base graph (with
// a = v_out, b = w_in) for a bipartite one.
UpdateStats inc_cnt(LabelIndex& idx, const DirectedGraph& g, VertexId a, VertexId b, const UpdateConfig& cfg = {});

// Patch `idx` after edge (a,b) was removed from `g`. Same conventions.
UpdateStats dec_cnt(LabelIndex& idx, const DirectedGraph& g, VertexId a, VertexId b, const UpdateConfig& cfg = {});

// Graph plus index kept in step; edges are addressed in original ids.
class DynamicIndex {
 public:
  // Builds a bipartite (CSC) or plain (HP-SPC) index with degree ordering.
  DynamicIndex(DirectedGraph g, IndexKind kind);
  // Adopts an existing index built for g.
  DynamicIndex(DirectedGraph g, LabelIndex idx);

  const DirectedGraph& graph() const { return g_; }
  const BipartiteGraph& bipartite() const { return gb_; }
  const LabelIndex& index() const { return idx_; }

  UpdateStats insert_edge(VertexId v, VertexId w, const UpdateConfig& cfg = {});
  UpdateStats delete_edge(VertexId v, VertexId w, const UpdateConfig& cfg = {});

  QueryResult sccnt(VertexId v, const QueryOptions& opts = {}) const;
  QueryResult spcnt(VertexId s, VertexId t) const { return spcnt_original(idx_, s, t); }

  // Fresh index over the current graph with the frozen ordering.
  LabelIndex rebuild() const;

 private:
  DirectedGraph g_;
  BipartiteGraph gb_;  // kept only for bipartite indexes
  LabelIndex idx_;
};

}  // namespace csc
