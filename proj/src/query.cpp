#include "csc/query.hpp"

#include <ostream>
#include <vector>

namespace csc {

std::ostream& operator<<(std::ostream& out, const QueryResult& r) {
  out << '(';
  if (r.length) {
    out << *r.length;
  } else {
    out << "none";
  }
  out << ", " << r.count << (r.saturated ? ", saturated" : "") << ')';
  return out;
}

void validate(const QueryOptions& opts) {
  if (opts.min_cycle_len != 2 && opts.min_cycle_len != 3) throw Error("min cycle length must be 2 or 3");
}

namespace {

// Running minimum over candidate (length, count) pairs.
struct Best {
  std::uint64_t dist = std::uint64_t(-1);
  Count count = 0;

  void offer(std::uint64_t d, Count c) {
    if (d < dist) {
      dist = d;
      count = c;
    } else if (d == dist) {
      count = sat_add(count, c);
    }
  }

  QueryResult result() const {
    if (count == 0) return QueryResult::none();
    return {static_cast<std::uint32_t>(dist), count, count == kCountMax};
  }
};

}  // namespace

QueryResult spcnt(const LabelIndex& idx, VertexId s, VertexId t, QueryTrace* trace) {
  if (trace) {
    trace->label_lists += 2;
    ++trace->spcnt_calls;
  }
  const auto& ord = idx.ordering();
  const auto& ls = idx.out_label(s);
  const auto& lt = idx.in_label(t);

  // OUT hubs never label other vertices' in-lists, so a path whose top vertex
  // is s_out is found through s_in, one step behind s.
  VertexId shifted = kNoVertex;
  if (idx.bipartite() && !is_in_vertex(s) && t != s && t != couple_of(s)) shifted = couple_of(s);

  Best best;
  std::size_t i = 0, j = 0;
  while (i < ls.size() && j < lt.size()) {
    auto ri = ord.rank(ls[i].hub), rj = ord.rank(lt[j].hub);
    if (ri < rj) {
      ++i;
    } else if (ri > rj) {
      ++j;
    } else {
      if (ls[i].hub != shifted) best.offer(std::uint64_t{ls[i].dist} + lt[j].dist, sat_mul(ls[i].count, lt[j].count));
      ++i;
      ++j;
    }
  }
  if (shifted != kNoVertex) {
    if (const auto* e = idx.find(LabelSide::kIn, t, shifted)) best.offer(e->dist - 1, e->count);
  }
  return best.result();
}

QueryResult spcnt_original(const LabelIndex& idx, VertexId s, VertexId t) {
  if (!idx.bipartite()) return spcnt(idx, s, t);
  if (s == t) return QueryResult::of(0, 1);
  auto r = spcnt(idx, out_vertex(s), in_vertex(t));
  if (r.found()) r.length = (*r.length + 1) / 2;
  return r;
}

QueryResult sccnt_csc(const LabelIndex& idx, const BipartiteGraph& gb, VertexId v, const QueryOptions& opts,
                      QueryTrace* trace) {
  validate(opts);
  auto r = spcnt(idx, out_vertex(v), in_vertex(v), trace);
  if (!r.found()) return r;
  r.length = (*r.length + 1) / 2;
  if (*r.length >= opts.min_cycle_len) return r;

  // Shortest cycle is a 2-cycle but those are excluded: take the best cycle
  // leaving v towards a neighbour that has no edge back to v.
  const auto& base = gb.base();
  if (trace) ++trace->adjacency_lists;
  Best best;
  for (VertexId x : base.out_neighbors(out_vertex(v))) {
    VertexId w = original_of(x);
    if (base.has_edge(out_vertex(w), in_vertex(v))) continue;
    auto rw = spcnt(idx, in_vertex(w), in_vertex(v), trace);
    if (rw.found()) best.offer(*rw.length / 2 + 1, rw.count);
  }
  return best.result();
}

QueryResult sccnt_hpspc(const LabelIndex& idx, const DirectedGraph& g, VertexId v, const QueryOptions& opts,
                        QueryTrace* trace) {
  validate(opts);
  bool skip_reciprocal = false;
  if (opts.min_cycle_len == 3) {
    if (trace) ++trace->adjacency_lists;
    for (VertexId w : g.out_neighbors(v)) {
      if (g.has_edge(w, v)) {
        skip_reciprocal = true;
        break;
      }
    }
  }

  Best best;
  if (trace) ++trace->adjacency_lists;
  if (skip_reciprocal || g.out_degree(v) < g.in_degree(v)) {
    for (VertexId w : g.out_neighbors(v)) {
      if (skip_reciprocal && g.has_edge(w, v)) continue;
      auto r = spcnt(idx, w, v, trace);
      if (r.found()) best.offer(*r.length + 1, r.count);
    }
  } else {
    for (VertexId u : g.in_neighbors(v)) {
      auto r = spcnt(idx, v, u, trace);
      if (r.found()) best.offer(*r.length + 1, r.count);
    }
  }
  return best.result();
}

QueryResult sccnt_bfs(const DirectedGraph& g, VertexId v, const QueryOptions& opts, QueryTrace* trace) {
  validate(opts);
  const auto n = g.num_vertices();
  std::vector<std::uint32_t> dist(n, kInfDist);
  std::vector<Count> cnt(n, 0);
  std::vector<VertexId> queue;

  if (trace) ++trace->adjacency_lists;
  for (VertexId w : g.out_neighbors(v)) {
    if (opts.min_cycle_len == 3 && g.has_edge(w, v)) continue;
    dist[w] = 1;
    cnt[w] = 1;
    queue.push_back(w);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId w = queue[head];
    if (w == v) return {dist[v], cnt[v], cnt[v] == kCountMax};
    if (trace) ++trace->adjacency_lists;
    for (VertexId u : g.out_neighbors(w)) {
      if (dist[u] == kInfDist) {
        dist[u] = dist[w] + 1;
        cnt[u] = cnt[w];
        queue.push_back(u);
      } else if (dist[u] == dist[w] + 1) {
        cnt[u] = sat_add(cnt[u], cnt[w]);
      }
    }
  }
  return QueryResult::none();
}

}  // namespace csc
