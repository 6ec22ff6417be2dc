#include <gtest/gtest.h>

#include <sstream>

#include "csc/builder.hpp"
#include "csc/query.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace csc;
using csc::testing::example_graph;
using csc::testing::random_graph;
using csc::testing::triangle;

namespace {

// CSC keeps what the cover constraint mandates on G_b, minus entries whose
// hub is an OUT vertex labelling some other vertex.
oracle::LabelSets expected_csc(const BipartiteGraph& gb, const VertexOrdering& ord) {
  auto sets = oracle::expected_labels(gb.base(), ord);
  for (VertexId v = 0; v < sets.in.size(); ++v) {
    std::erase_if(sets.in[v], [&](const LabelEntry& e) { return !is_in_vertex(e.hub) && e.hub != v; });
    std::erase_if(sets.out[v], [&](const LabelEntry& e) { return !is_in_vertex(e.hub) && e.hub != v; });
  }
  return sets;
}

void expect_labels(const LabelIndex& idx, const oracle::LabelSets& want) {
  for (VertexId v = 0; v < idx.num_vertices(); ++v) {
    EXPECT_EQ(idx.in_label(v), want.in[v]) << "in-label of " << v;
    EXPECT_EQ(idx.out_label(v), want.out[v]) << "out-label of " << v;
  }
}

std::string bytes_of(const LabelIndex& idx) {
  std::ostringstream out;
  save_index(out, idx);
  return out.str();
}

}  // namespace

TEST(BuildHpspc, ExampleMatchesReferenceLabels) {
  auto lg = example_graph();
  auto idx = build_hpspc(lg.graph, compute_ordering(lg.graph));
  for (const auto& [v, labels] : csc::testing::reference_labels()) {
    VertexId id = lg.dict.at(std::to_string(v));
    EXPECT_EQ(csc::testing::as_reference(idx.in_label(id), lg.dict), labels.in) << "L_in(v" << v << ")";
    EXPECT_EQ(csc::testing::as_reference(idx.out_label(id), lg.dict), labels.out) << "L_out(v" << v << ")";
  }
}

TEST(BuildHpspc, Triangle) {
  auto idx = build_hpspc(triangle(), compute_ordering(triangle()));
  ASSERT_NE(idx.find(LabelSide::kIn, 1, 0), nullptr);
  EXPECT_EQ(*idx.find(LabelSide::kIn, 1, 0), (LabelEntry{0, 1, 1, true}));
  EXPECT_EQ(*idx.find(LabelSide::kIn, 2, 0), (LabelEntry{0, 2, 1, true}));
  EXPECT_EQ(*idx.find(LabelSide::kIn, 2, 1), (LabelEntry{1, 1, 1, true}));
}

TEST(BuildHpspc, EdgelessGraphHasOnlySelfEntries) {
  DirectedGraph g(5);
  auto idx = build_hpspc(g, compute_ordering(g));
  for (VertexId v = 0; v < 5; ++v) {
    EXPECT_EQ(idx.in_label(v), (LabelList{{v, 0, 1, true}}));
    EXPECT_EQ(idx.out_label(v), (LabelList{{v, 0, 1, true}}));
  }
}

TEST(BuildHpspc, MatchesCoverConstraintOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_graph(seed);
    auto ord = compute_ordering(g);
    expect_labels(build_hpspc(g, ord), oracle::expected_labels(g, ord));
  }
}

TEST(BuildCsc, ExampleCycleLabels) {
  auto lg = example_graph();
  auto gb = bipartite_convert(lg.graph);
  auto idx = build_csc(gb, compute_ordering(gb));
  VertexId v1 = lg.dict.at("1"), v4 = lg.dict.at("4"), v7 = lg.dict.at("7");

  EXPECT_EQ(idx.in_label(in_vertex(v7)),
            (LabelList{{in_vertex(v1), 4, 2, true}, {in_vertex(v7), 0, 1, true}}));
  const auto& out = idx.out_label(out_vertex(v7));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(std::make_tuple(out[0].hub, out[0].dist, out[0].count), std::make_tuple(in_vertex(v1), 7u, Count{1}));
  EXPECT_EQ(std::make_tuple(out[1].hub, out[1].dist, out[1].count), std::make_tuple(in_vertex(v7), 11u, Count{1}));
  EXPECT_EQ(std::make_tuple(out[2].hub, out[2].dist, out[2].count), std::make_tuple(out_vertex(v7), 0u, Count{1}));

  // shortest v7i -> v4i paths reach v4i both with and without v1
  const auto* nc = idx.find(LabelSide::kIn, in_vertex(v4), in_vertex(v7));
  ASSERT_NE(nc, nullptr);
  EXPECT_EQ(nc->dist, 10u);
  EXPECT_EQ(nc->count, 1u);
  EXPECT_FALSE(nc->canonical);
}

TEST(BuildCsc, CanonicalSplit) {
  auto lg = example_graph();
  auto gb = bipartite_convert(lg.graph);
  auto ord = compute_ordering(gb);
  auto idx = build_csc(gb, ord);
  oracle::AllPairs ap(gb.base());
  for (auto side : {LabelSide::kIn, LabelSide::kOut}) {
    for (VertexId v = 0; v < idx.num_vertices(); ++v) {
      for (const auto& e : idx.label(side, v)) {
        auto full = side == LabelSide::kIn ? ap.count(e.hub, v) : ap.count(v, e.hub);
        // canonical entries count every shortest path, the rest only a subset
        EXPECT_EQ(e.canonical, e.count == full);
        EXPECT_LE(e.count, full);
      }
    }
  }
}

TEST(BuildCsc, Triangle) {
  auto gb = bipartite_convert(triangle());
  auto idx = build_csc(gb, compute_ordering(gb));
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(sccnt_csc(idx, gb, v), QueryResult::of(3, 1));
}

TEST(BuildCsc, MatchesCoverConstraintOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto gb = bipartite_convert(random_graph(seed));
    auto ord = compute_ordering(gb);
    expect_labels(build_csc(gb, ord), expected_csc(gb, ord));
  }
}

TEST(BuildCsc, RejectsSplitCouples) {
  auto gb = bipartite_convert(triangle());
  EXPECT_THROW(build_csc(gb, VertexOrdering({0, 2, 1, 3, 4, 5})), Error);
  EXPECT_THROW(build_csc(gb, VertexOrdering({1, 0, 2, 3, 4, 5})), Error);
}

TEST(BuildCsc, SkippingAgreesWithReferenceBuild) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto gb = bipartite_convert(random_graph(seed));
    auto ord = compute_ordering(gb);
    auto fast = build_csc(gb, ord);
    auto ref = build_csc_without_skipping(gb, ord);
    const auto n = gb.num_original_vertices();
    for (VertexId u = 0; u < n; ++u)
      for (VertexId w = 0; w < n; ++w)
        ASSERT_EQ(spcnt(fast, out_vertex(u), in_vertex(w)), spcnt(ref, out_vertex(u), in_vertex(w)))
            << "seed " << seed << " pair " << u << "," << w;
  }
}

// Pruning with every entry instead of canonical ones only changes nothing.
TEST(BuildOptions, CanonicalOnlyPruningIsEquivalent) {
  BuildOptions all{false};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_graph(seed);
    auto ord = compute_ordering(g);
    EXPECT_EQ(build_hpspc(g, ord), build_hpspc(g, ord, all));
    auto gb = bipartite_convert(g);
    auto bord = compute_ordering(gb);
    EXPECT_EQ(build_csc(gb, bord), build_csc(gb, bord, all));
  }
}

TEST(Build, Deterministic) {
  auto g = random_graph(5);
  auto gb = bipartite_convert(g);
  EXPECT_EQ(bytes_of(build_hpspc(g, compute_ordering(g))), bytes_of(build_hpspc(g, compute_ordering(g))));
  EXPECT_EQ(bytes_of(build_csc(gb, compute_ordering(gb))), bytes_of(build_csc(gb, compute_ordering(gb))));
}

// Dropping any single entry of a fresh index changes some answer.
TEST(Build, EveryEntryIsNeeded) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = random_graph(seed, 16);
    auto gb = bipartite_convert(g);
    for (bool bip : {false, true}) {
      const auto& graph = bip ? gb.base() : g;
      auto idx = bip ? build_csc(gb, compute_ordering(gb)) : build_hpspc(g, compute_ordering(g));
      oracle::AllPairs ap(graph);
      const auto n = graph.num_vertices();
      for (auto side : {LabelSide::kIn, LabelSide::kOut}) {
        for (VertexId v = 0; v < n; ++v) {
          for (const auto e : idx.label(side, v)) {
            auto copy = idx;
            copy.erase(side, v, e.hub);
            bool broken = false;
            for (VertexId s = 0; s < n && !broken; ++s)
              for (VertexId t = 0; t < n && !broken; ++t) broken = spcnt(copy, s, t) != ap.result(s, t);
            EXPECT_TRUE(broken) << "seed " << seed << (bip ? " csc" : " hpspc") << " entry hub " << e.hub
                                << " of vertex " << v;
          }
        }
      }
    }
  }
}
