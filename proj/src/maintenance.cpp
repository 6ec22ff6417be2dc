#include "csc/maintenance.hpp"

#include <algorithm>
#include <chrono>

#include "csc/builder.hpp"

namespace csc {

UpdateStats& UpdateStats::operator+=(const UpdateStats& o) {
  affected_hubs += o.affected_hubs;
  labels_inserted += o.labels_inserted;
  labels_replaced += o.labels_replaced;
  labels_accumulated += o.labels_accumulated;
  labels_deleted += o.labels_deleted;
  labels_cleaned += o.labels_cleaned;
  vertices_visited += o.vertices_visited;
  seconds += o.seconds;
  return *this;
}

namespace {

using Clock = std::chrono::steady_clock;

LabelSide opposite(LabelSide s) { return s == LabelSide::kIn ? LabelSide::kOut : LabelSide::kIn; }

class Maintainer {
 public:
  Maintainer(LabelIndex& idx, const DirectedGraph& g, const UpdateConfig& cfg)
      : idx_(idx), g_(g), ord_(idx.ordering()), cfg_(cfg), dist_(g.num_vertices(), kInfDist),
        cnt_(g.num_vertices(), 0) {
    if (g.num_vertices() != idx.num_vertices()) throw Error("graph does not match index");
  }

  UpdateStats stats;

  // Hubs whose passes are run; OUT hubs of a bipartite index only carry
  // self entries.
  bool eligible(VertexId h) const { return !idx_.bipartite() || is_in_vertex(h); }

  void insert(VertexId a, VertexId b) {
    std::vector<VertexId> hubs;
    std::vector<std::uint8_t> role(g_.num_vertices(), 0);
    for (const auto& e : idx_.in_label(a)) role[e.hub] |= 1;
    for (const auto& e : idx_.out_label(b)) role[e.hub] |= 2;
    for (const auto& e : idx_.in_label(a)) hubs.push_back(e.hub);
    for (const auto& e : idx_.out_label(b))
      if (role[e.hub] == 2) hubs.push_back(e.hub);
    sort_hubs(hubs);

    for (VertexId h : hubs) {
      if (!eligible(h)) continue;
      ++stats.affected_hubs;
      if ((role[h] & 1) && ord_.precedes(h, b)) {
        if (const auto* e = idx_.find(LabelSide::kIn, a, h)) {
          auto d = e->dist + 1;
          auto c = e->count;
          pass(LabelSide::kIn, h, b, d, c);
        }
      }
      if ((role[h] & 2) && ord_.precedes(h, a)) {
        if (const auto* e = idx_.find(LabelSide::kOut, b, h)) {
          auto d = e->dist + 1;
          auto c = e->count;
          pass(LabelSide::kOut, h, a, d, c);
        }
      }
    }
  }

  void remove(VertexId a, VertexId b) {
    // Step 1, on the pre-deletion index: A = {x : sd(x,a)+1 = sd(x,b)},
    // B = {y : sd(b,y)+1 = sd(a,y)}. Both are closed along shortest paths
    // towards a (from b), so a BFS restricted to members finds them all.
    std::vector<std::uint8_t> role(g_.num_vertices(), 0);
    auto side_a = collect(a, true, [&](VertexId x) {
      auto xa = distance(x, a);
      return xa != kInfDist && std::uint64_t{xa} + 1 == distance(x, b);
    });
    auto side_b = collect(b, false, [&](VertexId y) {
      auto by = distance(b, y);
      return by != kInfDist && std::uint64_t{by} + 1 == distance(a, y);
    });
    for (VertexId x : side_a) role[x] |= 1;
    for (VertexId y : side_b) role[y] |= 2;

    // Step 2: drop every entry that may be stale, a superset of the out-of-date ones.
    auto purge = [&](LabelSide side, const std::vector<VertexId>& owners, std::uint8_t hub_role) {
      std::vector<VertexId> doomed;
      for (VertexId u : owners) {
        doomed.clear();
        for (const auto& e : idx_.label(side, u))
          if ((role[e.hub] & hub_role) && eligible(e.hub)) doomed.push_back(e.hub);
        for (VertexId h : doomed) idx_.erase(side, u, h);
        stats.labels_deleted += doomed.size();
      }
    };
    purge(LabelSide::kIn, side_b, 1);
    purge(LabelSide::kOut, side_a, 2);

    // Step 3: rerun the pruned build BFS for each affected hub, writing only
    // into the owners whose entries were dropped.
    std::vector<VertexId> hubs;
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (role[v] && eligible(v)) hubs.push_back(v);
    sort_hubs(hubs);
    stats.affected_hubs += hubs.size();
    for (VertexId h : hubs) {
      if (role[h] & 1) rebuild_pass(LabelSide::kIn, h, role, 2);
      if (role[h] & 2) rebuild_pass(LabelSide::kOut, h, role, 1);
    }
  }

 private:
  void sort_hubs(std::vector<VertexId>& hubs) const {
    std::sort(hubs.begin(), hubs.end(), [&](VertexId x, VertexId y) { return ord_.precedes(x, y); });
    if (cfg_.ascending_hub_order) std::reverse(hubs.begin(), hubs.end());
  }

  std::uint32_t distance(VertexId s, VertexId t) const {
    auto r = spcnt(idx_, s, t);
    return r.found() ? *r.length : kInfDist;
  }

  // Index distance between the owner and the hub of an entry on `side`.
  std::uint32_t entry_distance(LabelSide side, VertexId owner, VertexId hub) const {
    return side == LabelSide::kIn ? distance(hub, owner) : distance(owner, hub);
  }

  // Distance through hubs ranked strictly above `hub` only.
  std::uint32_t higher_distance(LabelSide side, VertexId owner, VertexId hub) const {
    const auto& from = side == LabelSide::kIn ? idx_.out_label(hub) : idx_.out_label(owner);
    const auto& to = side == LabelSide::kIn ? idx_.in_label(owner) : idx_.in_label(hub);
    const auto limit = ord_.rank(hub);
    std::uint64_t best = kInfDist;
    std::size_t i = 0, j = 0;
    while (i < from.size() && j < to.size()) {
      auto ri = ord_.rank(from[i].hub), rj = ord_.rank(to[j].hub);
      if (ri >= limit || rj >= limit) break;
      if (ri < rj) {
        ++i;
      } else if (ri > rj) {
        ++j;
      } else {
        best = std::min(best, std::uint64_t{from[i].dist} + to[j].dist);
        ++i;
        ++j;
      }
    }
    return static_cast<std::uint32_t>(best);
  }

  std::span<const VertexId> next(LabelSide side, VertexId w) const {
    return side == LabelSide::kIn ? g_.out_neighbors(w) : g_.in_neighbors(w);
  }

  void start(VertexId s, std::uint32_t d, Count c) {
    queue_.clear();
    visited_.clear();
    reach(s, d, c);
    queue_.push_back(s);
  }

  void reach(VertexId w, std::uint32_t d, Count c) {
    dist_[w] = d;
    cnt_[w] = c;
    visited_.push_back(w);
  }

  void expand(VertexId hub, VertexId w, std::span<const VertexId> nbrs) {
    const auto nd = dist_[w] + 1;
    for (VertexId u : nbrs) {
      if (dist_[u] == kInfDist) {
        if (!ord_.precedes(hub, u)) continue;
        reach(u, nd, cnt_[w]);
        queue_.push_back(u);
      } else if (dist_[u] == nd) {
        cnt_[u] = sat_add(cnt_[u], cnt_[w]);
      }
    }
  }

  void finish() {
    stats.vertices_visited += queue_.size();
    for (VertexId w : visited_) {
      dist_[w] = kInfDist;
      cnt_[w] = 0;
    }
  }

  // Forward pass (side kIn, BFS along out-edges from b) or backward pass
  // (side kOut, along in-edges from a).
  void pass(LabelSide side, VertexId hub, VertexId s, std::uint32_t d, Count c) {
    start(s, d, c);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId w = queue_[head];
      if (dist_[w] > entry_distance(side, w, hub)) continue;
      update_label(side, w, hub, dist_[w], cnt_[w]);
      expand(hub, w, next(side, w));
    }
    finish();
  }

  void update_label(LabelSide side, VertexId w, VertexId hub, std::uint32_t d, Count c) {
    if (auto* e = idx_.find(side, w, hub)) {
      if (d < e->dist) {
        e->dist = d;
        e->count = c;
        e->canonical = higher_distance(side, w, hub) > d;
        ++stats.labels_replaced;
        clean(side, w);
      } else if (d == e->dist) {
        e->count = sat_add(e->count, c);
        e->canonical = higher_distance(side, w, hub) > d;
        ++stats.labels_accumulated;
      }
    } else {
      idx_.insert(side, w, {hub, d, c, higher_distance(side, w, hub) > d});
      ++stats.labels_inserted;
      clean(side, w);
    }
  }

  // Removes entries of L_side(w), and entries with hub w in opposite-side
  // labels, whose distance exceeds the current index distance.
  void clean(LabelSide side, VertexId w) {
    if (cfg_.strategy != UpdateStrategy::kMinimality) return;
    std::vector<VertexId> doomed;
    for (const auto& e : idx_.label(side, w))
      if (e.dist > entry_distance(side, w, e.hub)) doomed.push_back(e.hub);
    for (VertexId h : doomed) idx_.erase(side, w, h);
    stats.labels_cleaned += doomed.size();

    auto other = opposite(side);
    doomed.clear();
    for (VertexId v : idx_.inverted(other, w)) {
      const auto* e = idx_.find(other, v, w);
      if (e && e->dist > entry_distance(other, v, w)) doomed.push_back(v);
    }
    for (VertexId v : doomed) idx_.erase(other, v, w);
    stats.labels_cleaned += doomed.size();
  }

  template <typename Member>
  std::vector<VertexId> collect(VertexId s, bool reverse, Member member) {
    std::vector<VertexId> found;
    if (!member(s)) return found;
    std::vector<std::uint8_t> seen(g_.num_vertices(), 0);
    seen[s] = 1;
    found.push_back(s);
    for (std::size_t head = 0; head < found.size(); ++head) {
      VertexId x = found[head];
      auto nbrs = reverse ? g_.in_neighbors(x) : g_.out_neighbors(x);
      for (VertexId y : nbrs) {
        if (seen[y]) continue;
        seen[y] = 1;
        if (member(y)) found.push_back(y);
      }
    }
    stats.vertices_visited += found.size();
    return found;
  }

  // Build BFS from `hub` pruned by strictly higher hubs; entries are written
  // only into owners whose role includes `target_role`.
  void rebuild_pass(LabelSide side, VertexId hub, const std::vector<std::uint8_t>& role, std::uint8_t target_role) {
    start(hub, 0, 1);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId w = queue_[head];
      auto higher = higher_distance(side, w, hub);
      if (higher < dist_[w]) continue;
      if (role[w] & target_role) {
        LabelEntry fresh{hub, dist_[w], cnt_[w], higher > dist_[w]};
        if (auto* e = idx_.find(side, w, hub)) {
          *e = fresh;
          ++stats.labels_replaced;
        } else {
          idx_.insert(side, w, fresh);
          ++stats.labels_inserted;
        }
      }
      expand(hub, w, next(side, w));
    }
    finish();
  }

  LabelIndex& idx_;
  const DirectedGraph& g_;
  const VertexOrdering& ord_;
  UpdateConfig cfg_;
  std::vector<std::uint32_t> dist_;
  std::vector<Count> cnt_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> visited_;
};

template <typename Fn>
UpdateStats timed(Fn fn) {
  auto t0 = Clock::now();
  UpdateStats stats = fn();
  stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return stats;
}

}  // namespace

UpdateStats inc_cnt(LabelIndex& idx, const DirectedGraph& g, VertexId a, VertexId b, const UpdateConfig& cfg) {
  return timed([&] {
    Maintainer m(idx, g, cfg);
    m.insert(a, b);
    return m.stats;
  });
}

UpdateStats dec_cnt(LabelIndex& idx, const DirectedGraph& g, VertexId a, VertexId b, const UpdateConfig& cfg) {
  return timed([&] {
    Maintainer m(idx, g, cfg);
    m.remove(a, b);
    return m.stats;
  });
}

DynamicIndex::DynamicIndex(DirectedGraph g, IndexKind kind) : g_(std::move(g)) {
  if (kind == IndexKind::kBipartite) {
    gb_ = bipartite_convert(g_);
    idx_ = build_csc(gb_, compute_ordering(gb_));
  } else {
    idx_ = build_hpspc(g_, compute_ordering(g_));
  }
}

DynamicIndex::DynamicIndex(DirectedGraph g, LabelIndex idx) : g_(std::move(g)), idx_(std::move(idx)) {
  if (idx_.bipartite()) gb_ = bipartite_convert(g_);
  auto expected = idx_.bipartite() ? 2 * g_.num_vertices() : g_.num_vertices();
  if (idx_.num_vertices() != expected) throw Error("index does not match graph");
}

UpdateStats DynamicIndex::insert_edge(VertexId v, VertexId w, const UpdateConfig& cfg) {
  if (!g_.insert_edge(v, w)) return UpdateStats{.applied = false};
  if (!idx_.bipartite()) return inc_cnt(idx_, g_, v, w, cfg);
  gb_.insert_original_edge(v, w);
  return inc_cnt(idx_, gb_.base(), out_vertex(v), in_vertex(w), cfg);
}

UpdateStats DynamicIndex::delete_edge(VertexId v, VertexId w, const UpdateConfig& cfg) {
  if (!g_.delete_edge(v, w)) return UpdateStats{.applied = false};
  if (!idx_.bipartite()) return dec_cnt(idx_, g_, v, w, cfg);
  gb_.delete_original_edge(v, w);
  return dec_cnt(idx_, gb_.base(), out_vertex(v), in_vertex(w), cfg);
}

QueryResult DynamicIndex::sccnt(VertexId v, const QueryOptions& opts) const {
  return idx_.bipartite() ? sccnt_csc(idx_, gb_, v, opts) : sccnt_hpspc(idx_, g_, v, opts);
}

LabelIndex DynamicIndex::rebuild() const {
  return idx_.bipartite() ? build_csc(gb_, idx_.ordering()) : build_hpspc(g_, idx_.ordering());
}

}  // namespace csc
