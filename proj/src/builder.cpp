#include "csc/builder.hpp"

#include <vector>

namespace csc {

namespace {

class Builder {
 public:
  Builder(const DirectedGraph& g, LabelIndex& idx, const BuildOptions& opts)
      : g_(g), idx_(idx), ord_(idx.ordering()), canonical_only_(opts.prune_with_canonical_only),
        dist_(g.num_vertices(), kInfDist), cnt_(g.num_vertices(), 0), hub_dist_(g.num_vertices(), kInfDist) {
    queue_.reserve(g.num_vertices());
  }

  void plain_forward(VertexId v) {
    load_hub(LabelSide::kOut, v);
    start(v);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId w = queue_[head];
      auto d = prune_dist(LabelSide::kIn, w);
      if (d < dist_[w]) continue;
      idx_.append(LabelSide::kIn, w, {v, dist_[w], cnt_[w], d > dist_[w]});
      expand(v, w, g_.out_neighbors(w));
    }
    finish(LabelSide::kOut, v);
  }

  void plain_backward(VertexId v) {
    load_hub(LabelSide::kIn, v);
    start(v);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId w = queue_[head];
      auto d = prune_dist(LabelSide::kOut, w);
      if (d < dist_[w]) continue;
      idx_.append(LabelSide::kOut, w, {v, dist_[w], cnt_[w], d > dist_[w]});
      expand(v, w, g_.in_neighbors(w));
    }
    finish(LabelSide::kIn, v);
  }

  // IN hub; every dequeued vertex is an IN vertex and labels its couple too.
  void couple_forward(VertexId v) {
    load_hub(LabelSide::kOut, v);
    start(v);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId w = queue_[head];
      auto d = prune_dist(LabelSide::kIn, w);
      if (d < dist_[w]) continue;
      bool canonical = d > dist_[w];
      idx_.append(LabelSide::kIn, w, {v, dist_[w], cnt_[w], canonical});
      VertexId wc = couple_of(w);
      reach(wc, dist_[w] + 1, cnt_[w]);
      idx_.append(LabelSide::kIn, wc, {v, dist_[wc], cnt_[wc], canonical});
      expand(v, wc, g_.out_neighbors(wc));
    }
    finish(LabelSide::kOut, v);
  }

  // IN hub; apart from the hub itself every dequeued vertex is an OUT vertex.
  void couple_backward(VertexId v) {
    load_hub(LabelSide::kIn, v);
    start(v);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId w = queue_[head];
      if (w == v) {
        idx_.append(LabelSide::kOut, v, {v, 0, 1, true});
        expand(v, v, g_.in_neighbors(v));
        continue;
      }
      auto d = prune_dist(LabelSide::kOut, w);
      if (d < dist_[w]) continue;
      bool canonical = d > dist_[w];
      idx_.append(LabelSide::kOut, w, {v, dist_[w], cnt_[w], canonical});
      if (w == couple_of(v)) continue;  // closed a cycle back to the hub
      VertexId wc = couple_of(w);
      reach(wc, dist_[w] + 1, cnt_[w]);
      idx_.append(LabelSide::kOut, wc, {v, dist_[wc], cnt_[wc], canonical});
      expand(v, wc, g_.in_neighbors(wc));
    }
    finish(LabelSide::kIn, v);
  }

  void self_only(VertexId v) {
    idx_.append(LabelSide::kIn, v, {v, 0, 1, true});
    idx_.append(LabelSide::kOut, v, {v, 0, 1, true});
  }

 private:
  bool usable(const LabelEntry& e) const { return !canonical_only_ || e.canonical; }

  // hub_dist_ holds the hub's label on the opposite side of the pass
  void load_hub(LabelSide side, VertexId v) {
    for (const auto& e : idx_.label(side, v))
      if (usable(e)) hub_dist_[e.hub] = e.dist;
  }

  std::uint32_t prune_dist(LabelSide side, VertexId w) const {
    std::uint32_t best = kInfDist;
    for (const auto& e : idx_.label(side, w)) {
      if (!usable(e) || hub_dist_[e.hub] == kInfDist) continue;
      best = std::min(best, hub_dist_[e.hub] + e.dist);
    }
    return best;
  }

  void start(VertexId v) {
    queue_.clear();
    visited_.clear();
    reach(v, 0, 1);
    queue_.push_back(v);
  }

  void reach(VertexId w, std::uint32_t d, Count c) {
    dist_[w] = d;
    cnt_[w] = c;
    visited_.push_back(w);
  }

  void expand(VertexId hub, VertexId w, std::span<const VertexId> nbrs) {
    const auto next = dist_[w] + 1;
    for (VertexId u : nbrs) {
      if (dist_[u] == kInfDist) {
        if (!ord_.precedes(hub, u)) continue;
        reach(u, next, cnt_[w]);
        queue_.push_back(u);
      } else if (dist_[u] == next) {
        cnt_[u] = sat_add(cnt_[u], cnt_[w]);
      }
    }
  }

  void finish(LabelSide side, VertexId v) {
    for (VertexId w : visited_) {
      dist_[w] = kInfDist;
      cnt_[w] = 0;
    }
    for (const auto& e : idx_.label(side, v)) hub_dist_[e.hub] = kInfDist;
  }

  const DirectedGraph& g_;
  LabelIndex& idx_;
  const VertexOrdering& ord_;
  bool canonical_only_;
  std::vector<std::uint32_t> dist_;
  std::vector<Count> cnt_;
  std::vector<std::uint32_t> hub_dist_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> visited_;
};

void check_ordering(const DirectedGraph& g, const VertexOrdering& ord) {
  if (ord.size() != g.num_vertices()) throw Error("ordering size does not match graph");
}

}  // namespace

LabelIndex build_hpspc(const DirectedGraph& g, const VertexOrdering& ord, const BuildOptions& opts) {
  check_ordering(g, ord);
  LabelIndex idx(IndexKind::kPlain, ord);
  Builder b(g, idx, opts);
  for (VertexId v : ord.order()) {
    b.plain_forward(v);
    b.plain_backward(v);
  }
  return idx;
}

LabelIndex build_csc(const BipartiteGraph& gb, const VertexOrdering& ord, const BuildOptions& opts) {
  check_ordering(gb.base(), ord);
  for (std::uint32_t r = 0; r + 1 < ord.size(); r += 2) {
    if (!is_in_vertex(ord.at_rank(r)) || ord.at_rank(r + 1) != couple_of(ord.at_rank(r)))
      throw Error("bipartite ordering must place each couple pair consecutively, in-vertex first");
  }
  LabelIndex idx(IndexKind::kBipartite, ord);
  Builder b(gb.base(), idx, opts);
  for (VertexId v : ord.order()) {
    if (is_in_vertex(v)) {
      b.couple_forward(v);
      b.couple_backward(v);
    } else {
      b.self_only(v);
    }
  }
  return idx;
}

LabelIndex build_csc_without_skipping(const BipartiteGraph& gb, const VertexOrdering& ord) {
  return build_hpspc(gb.base(), ord);
}

}  // namespace csc
