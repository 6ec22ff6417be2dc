#include "oracle.hpp"

#include <deque>
#include <functional>

namespace csc::oracle {

namespace {

// Single-source BFS counting paths; `allowed` filters intermediate and end
// vertices (the source is always allowed). Reverse follows in-edges.
void bfs_count(const DirectedGraph& g, VertexId s, bool reverse, const std::function<bool(VertexId)>& allowed,
               std::vector<std::uint32_t>& dist, std::vector<Count>& count) {
  dist.assign(g.num_vertices(), kInfDist);
  count.assign(g.num_vertices(), 0);
  dist[s] = 0;
  count[s] = 1;
  std::deque<VertexId> q{s};
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    auto nbrs = reverse ? g.in_neighbors(x) : g.out_neighbors(x);
    for (VertexId y : nbrs) {
      if (!allowed(y)) continue;
      if (dist[y] == kInfDist) {
        dist[y] = dist[x] + 1;
        count[y] = count[x];
        q.push_back(y);
      } else if (dist[y] == dist[x] + 1) {
        count[y] = sat_add(count[y], count[x]);
      }
    }
  }
}

bool any(VertexId) { return true; }

}  // namespace

AllPairs::AllPairs(const DirectedGraph& g) : n_(g.num_vertices()), dist_(n_ * n_), count_(n_ * n_) {
  std::vector<std::uint32_t> d;
  std::vector<Count> c;
  for (VertexId s = 0; s < n_; ++s) {
    bfs_count(g, s, false, any, d, c);
    std::copy(d.begin(), d.end(), dist_.begin() + s * n_);
    std::copy(c.begin(), c.end(), count_.begin() + s * n_);
  }
}

QueryResult AllPairs::result(VertexId s, VertexId t) const {
  if (dist(s, t) == kInfDist) return QueryResult::none();
  return {dist(s, t), count(s, t), count(s, t) == kCountMax};
}

QueryResult sccnt(const AllPairs& ap, const DirectedGraph& g, VertexId v, std::uint32_t min_len) {
  std::uint32_t best = kInfDist;
  Count total = 0;
  for (VertexId w : g.out_neighbors(v)) {
    if (ap.dist(w, v) == kInfDist) continue;
    std::uint32_t len = ap.dist(w, v) + 1;
    if (len < min_len) continue;
    if (len < best) {
      best = len;
      total = ap.count(w, v);
    } else if (len == best) {
      total = sat_add(total, ap.count(w, v));
    }
  }
  if (best == kInfDist) return QueryResult::none();
  return {best, total, total == kCountMax};
}

QueryResult sccnt(const DirectedGraph& g, VertexId v, std::uint32_t min_len) {
  // sd(w, v) for all w from one reverse BFS
  std::vector<std::uint32_t> d;
  std::vector<Count> c;
  bfs_count(g, v, true, any, d, c);
  std::uint32_t best = kInfDist;
  Count total = 0;
  for (VertexId w : g.out_neighbors(v)) {
    if (d[w] == kInfDist || d[w] + 1 < min_len) continue;
    if (d[w] + 1 < best) {
      best = d[w] + 1;
      total = c[w];
    } else if (d[w] + 1 == best) {
      total = sat_add(total, c[w]);
    }
  }
  if (best == kInfDist) return QueryResult::none();
  return {best, total, total == kCountMax};
}

QueryResult enumerate_sccnt(const DirectedGraph& g, VertexId v, std::uint32_t min_len) {
  std::vector<bool> on_path(g.num_vertices(), false);
  std::uint32_t best = kInfDist;
  Count total = 0;
  std::function<void(VertexId, std::uint32_t)> dfs = [&](VertexId x, std::uint32_t len) {
    for (VertexId y : g.out_neighbors(x)) {
      if (y == v) {
        if (len + 1 < min_len) continue;
        if (len + 1 < best) {
          best = len + 1;
          total = 1;
        } else if (len + 1 == best) {
          ++total;
        }
      } else if (!on_path[y] && len + 1 < best) {
        on_path[y] = true;
        dfs(y, len + 1);
        on_path[y] = false;
      }
    }
  };
  on_path[v] = true;
  dfs(v, 0);
  if (best == kInfDist) return QueryResult::none();
  return QueryResult::of(best, total);
}

LabelSets expected_labels(const DirectedGraph& g, const VertexOrdering& ord) {
  const auto n = g.num_vertices();
  LabelSets sets{std::vector<LabelList>(n), std::vector<LabelList>(n)};
  std::vector<std::uint32_t> full_d, low_d;
  std::vector<Count> full_c, low_c;
  for (VertexId h : ord.order()) {
    auto below = [&](VertexId x) { return ord.precedes(h, x); };
    for (bool reverse : {false, true}) {
      bfs_count(g, h, reverse, any, full_d, full_c);
      bfs_count(g, h, reverse, below, low_d, low_c);
      auto& target = reverse ? sets.out : sets.in;
      for (VertexId t = 0; t < n; ++t) {
        if (low_d[t] == kInfDist || low_d[t] != full_d[t]) continue;
        target[t].push_back({h, low_d[t], low_c[t], low_c[t] == full_c[t]});
      }
    }
  }
  return sets;
}

}  // namespace csc::oracle
