#pragma once

#include <iosfwd>
#include <optional>

#include "csc/bipartite.hpp"
#include "csc/label_index.hpp"

namespace csc {

struct QueryResult {
  std::optional<std::uint32_t> length;  // empty: no path / no cycle
  Count count = 0;
  bool saturated = false;  // count hit the 64-bit ceiling

  static QueryResult none() { return {}; }
  static QueryResult of(std::uint32_t length, Count count) { return {length, count, false}; }
  bool found() const { return length.has_value(); }

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

std::ostream& operator<<(std::ostream& out, const QueryResult& r);

struct QueryOptions {
  // 3 follows the cycle definition (len >= 3); 2 also admits u->v->u.
  std::uint32_t min_cycle_len = 3;
};

// Touch counters for the query-locality checks.
struct QueryTrace {
  std::size_t label_lists = 0;
  std::size_t adjacency_lists = 0;
  std::size_t spcnt_calls = 0;
};

// Distance and count of shortest s->t paths from the labels. On a bipartite
// index the vertices are bipartite ids.
QueryResult spcnt(const LabelIndex& idx, VertexId s, VertexId t, QueryTrace* trace = nullptr);

// SPCnt between original vertices on either kind of index.
QueryResult spcnt_original(const LabelIndex& idx, VertexId s, VertexId t);

QueryResult sccnt_csc(const LabelIndex& idx, const BipartiteGraph& gb, VertexId v, const QueryOptions& opts = {},
                      QueryTrace* trace = nullptr);
QueryResult sccnt_hpspc(const LabelIndex& idx, const DirectedGraph& g, VertexId v, const QueryOptions& opts = {},
                        QueryTrace* trace = nullptr);
QueryResult sccnt_bfs(const DirectedGraph& g, VertexId v, const QueryOptions& opts = {}, QueryTrace* trace = nullptr);

// Throws Error unless min_cycle_len is 2 or 3.
void validate(const QueryOptions& opts);

}  // namespace csc
