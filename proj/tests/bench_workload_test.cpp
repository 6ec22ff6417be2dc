#include <gtest/gtest.h>

#include <sstream>

#include "csc/bench.hpp"
#include "csc/builder.hpp"
#include "csc/workload.hpp"
#include "fixtures.hpp"

using namespace csc;
using csc::testing::example_graph;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t fields(const std::string& line) { return std::count(line.begin(), line.end(), ',') + 1; }

std::size_t parse_error_line(const std::string& text, const VertexDictionary& dict) {
  std::istringstream in(text);
  try {
    parse_workload(in, dict);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Workload, ParseAndWrite) {
  auto lg = example_graph();
  std::istringstream in("# churn\n- 7 8\n\n+ 7 8\n+ 9 4\n");
  auto ups = parse_workload(in, lg.dict);
  ASSERT_EQ(ups.size(), 3u);
  EXPECT_EQ(ups[0], (EdgeUpdate{false, lg.dict.at("7"), lg.dict.at("8")}));
  EXPECT_EQ(ups[2], (EdgeUpdate{true, lg.dict.at("9"), lg.dict.at("4")}));
  std::ostringstream out;
  write_workload(out, ups, lg.dict);
  EXPECT_EQ(out.str(), "- 7 8\n+ 7 8\n+ 9 4\n");
}

TEST(Workload, MalformedLinesReportLineNumber) {
  auto lg = example_graph();
  EXPECT_EQ(parse_error_line("+ 1 3\n* 1 3\n", lg.dict), 2u);
  EXPECT_EQ(parse_error_line("+ 1 3\n\n+ 1\n", lg.dict), 3u);
  EXPECT_EQ(parse_error_line("+ 1 3 4\n", lg.dict), 1u);
  EXPECT_EQ(parse_error_line("# c\n- 1 99\n", lg.dict), 2u);
  EXPECT_EQ(parse_error_line("+ 5 5\n", lg.dict), 1u);
}

TEST(Workload, RemoveReinsert) {
  auto g = example_graph().graph;
  auto ups = remove_reinsert_workload(g, 4, 11);
  ASSERT_EQ(ups.size(), 8u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_FALSE(ups[i].insert);
    EXPECT_TRUE(g.has_edge(ups[i].from, ups[i].to));
    EXPECT_TRUE(ups[i + 4].insert);
    EXPECT_EQ(ups[i + 4].from, ups[i].from);
    EXPECT_EQ(ups[i + 4].to, ups[i].to);
  }
  EXPECT_EQ(remove_reinsert_workload(g, 4, 11), ups);
  EXPECT_EQ(remove_reinsert_workload(g, 100, 1).size(), 2 * g.num_edges());
}

TEST(Generators, DeterministicAndSized) {
  EXPECT_EQ(generate_erdos(50, 200, 3), generate_erdos(50, 200, 3));
  EXPECT_NE(generate_erdos(50, 200, 3), generate_erdos(50, 200, 4));
  EXPECT_EQ(generate_erdos(50, 200, 3).num_edges(), 200u);
  EXPECT_EQ(generate_erdos(3, 100, 1).num_edges(), 6u);

  auto ring = generate_chain(10, 15, 2);
  EXPECT_EQ(ring.num_edges(), 15u);
  for (VertexId v = 0; v < 10; ++v) EXPECT_TRUE(ring.has_edge(v, (v + 1) % 10));
}

TEST(Generators, StarCyclesPlantsHubs) {
  auto g = generate_star_cycles(2000, 8000, 5, 4);
  EXPECT_EQ(g.num_edges(), 8000u);
  for (VertexId h = 0; h < 4; ++h) {
    EXPECT_GE(g.out_degree(h), 500u);
    EXPECT_GE(g.in_degree(h), 500u);
  }
  EXPECT_EQ(g, generate_star_cycles(2000, 8000, 5, 4));
  for (auto [u, v] : g.edges()) ASSERT_FALSE(g.has_edge(v, u));
  EXPECT_EQ(generate_star_cycles(1, 10, 1).num_edges(), 0u);
  EXPECT_EQ(generate_star_cycles(5, 100, 1, 3).num_edges(), 10u);
}

TEST(Clusters, RangesCoverDegrees) {
  auto g = generate_star_cycles(1000, 5000, 9, 3);
  auto clusters = degree_clusters(g, 5);
  ASSERT_EQ(clusters.size(), 5u);
  EXPECT_EQ(clusters[0].name, "High");
  EXPECT_EQ(clusters[4].name, "Bottom");
  std::size_t total = 0;
  for (const auto& c : clusters) {
    total += c.vertices.size();
    for (VertexId v : c.vertices) {
      auto d = std::min(g.in_degree(v), g.out_degree(v));
      EXPECT_GE(d, c.degree_lo);
      EXPECT_LE(d, c.degree_hi);
    }
  }
  EXPECT_EQ(total, 1000u);
  for (VertexId h = 0; h < 3; ++h)
    EXPECT_NE(std::find(clusters[0].vertices.begin(), clusters[0].vertices.end(), h), clusters[0].vertices.end());
}

TEST(Clusters, UniformDegreesFallIntoOneBucket) {
  auto g = example_graph().graph;
  auto clusters = degree_clusters(g, 5);
  ASSERT_EQ(clusters.size(), 5u);
  EXPECT_EQ(clusters[4].vertices.size(), 10u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(clusters[i].vertices.empty());
  EXPECT_THROW(degree_clusters(g, 0), Error);
}

TEST(Latency, NearestRankP99) {
  std::vector<double> v;
  for (int i = 1; i <= 200; ++i) v.push_back(i);
  auto s = summarize(v);
  EXPECT_EQ(s.queries, 200u);
  EXPECT_DOUBLE_EQ(s.mean_us, 100.5);
  EXPECT_DOUBLE_EQ(s.p99_us, 198);
  EXPECT_DOUBLE_EQ(summarize({7}).p99_us, 7);
  EXPECT_EQ(summarize({}).queries, 0u);
}

TEST(Bench, CsvShape) {
  auto lg = example_graph();
  auto gb = bipartite_convert(lg.graph);
  auto csc = build_csc(gb, compute_ordering(gb));
  auto hp = build_hpspc(lg.graph, compute_ordering(lg.graph));
  BenchInputs in{lg.graph, gb, csc, hp};

  BenchConfig cfg;
  cfg.queries = 20;
  auto reports = run_bench(in, cfg);
  std::ostringstream out;
  write_bench_csv(out, reports, cfg);
  auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "cluster,degree_lo,degree_hi,vertices,queries,csc_mean_us,csc_p99_us,hpspc_mean_us,hpspc_p99_us,"
                      "bfs_mean_us,bfs_p99_us");
  for (const auto& l : lines) EXPECT_EQ(fields(l), 11u) << l;
  // empty clusters leave latency blank
  EXPECT_EQ(lines[1].rfind("High,", 0), 0u);
  EXPECT_TRUE(lines[1].ends_with(",0,0,,,,,,")) << lines[1];
  EXPECT_EQ(lines[5].rfind("Bottom,1,1,10,20,", 0), 0u) << lines[5];
}

TEST(Bench, ZeroQueriesWritesHeaderOnly) {
  auto lg = example_graph();
  auto gb = bipartite_convert(lg.graph);
  auto csc = build_csc(gb, compute_ordering(gb));
  auto hp = build_hpspc(lg.graph, compute_ordering(lg.graph));
  BenchConfig cfg;
  cfg.queries = 0;
  cfg.methods = {Method::kCsc};
  std::ostringstream out;
  write_bench_csv(out, run_bench({lg.graph, gb, csc, hp}, cfg), cfg);
  EXPECT_EQ(out.str(), "cluster,degree_lo,degree_hi,vertices,queries,csc_mean_us,csc_p99_us\n");
}
