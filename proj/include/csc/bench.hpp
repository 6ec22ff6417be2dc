#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "csc/query.hpp"

namespace csc {

// Vertices bucketed by min(in-degree, out-degree) into even-width ranges of
// [min, max]. Index 0 is the highest range.
struct DegreeCluster {
  std::string name;
  std::size_t degree_lo = 0;
  std::size_t degree_hi = 0;
  std::vector<VertexId> vertices;
};

std::vector<DegreeCluster> degree_clusters(const DirectedGraph& g, std::size_t k = 5);

struct LatencySummary {
  std::size_t queries = 0;
  double mean_us = 0;
  double p99_us = 0;
};

LatencySummary summarize(std::vector<double> micros);

enum class Method : std::uint8_t { kCsc, kHpspc, kBfs };

struct BenchConfig {
  std::size_t clusters = 5;
  std::size_t queries = 100;  // per cluster, sampled with replacement
  std::uint64_t seed = 1;
  QueryOptions query;
  std::vector<Method> methods{Method::kCsc, Method::kHpspc, Method::kBfs};
};

struct ClusterReport {
  DegreeCluster cluster;
  std::vector<VertexId> sample;
  std::vector<std::pair<Method, LatencySummary>> latency;
};

struct BenchInputs {
  const DirectedGraph& graph;
  const BipartiteGraph& bipartite;
  const LabelIndex& csc;
  const LabelIndex& hpspc;
};

// Each sampled query runs once as warm-up, then once timed.
std::vector<ClusterReport> run_bench(const BenchInputs& in, const BenchConfig& cfg);

// Columns: cluster,degree_lo,degree_hi,vertices,queries, then
// <method>_mean_us,<method>_p99_us per method. No rows when queries = 0.
void write_bench_csv(std::ostream& out, const std::vector<ClusterReport>& reports, const BenchConfig& cfg);

const char* method_name(Method m);

}  // namespace csc
