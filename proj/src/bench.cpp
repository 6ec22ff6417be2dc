#include "csc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

#include "csc/workload.hpp"

namespace csc {

const char* method_name(Method m) {
  switch (m) {
    case Method::kCsc: return "csc";
    case Method::kHpspc: return "hpspc";
    case Method::kBfs: return "bfs";
  }
  return "?";
}

std::vector<DegreeCluster> degree_clusters(const DirectedGraph& g, std::size_t k) {
  if (k == 0) throw Error("cluster count must be positive");
  static const char* kNames[] = {"High", "Mid-high", "Mid-low", "Low", "Bottom"};
  const auto n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = std::min(g.in_degree(v), g.out_degree(v));
  std::size_t lo = n ? *std::min_element(deg.begin(), deg.end()) : 0;
  std::size_t hi = n ? *std::max_element(deg.begin(), deg.end()) : 0;
  const std::size_t span = hi - lo + 1;

  // bucket b (counted from the bottom) holds d with floor((d-lo)*k/span) == b
  std::vector<DegreeCluster> clusters(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t b = k - 1 - i;
    auto& c = clusters[i];
    c.name = k == 5 ? kNames[i] : "cluster" + std::to_string(i);
    c.degree_lo = lo + (b * span + k - 1) / k;
    c.degree_hi = lo + ((b + 1) * span + k - 1) / k - 1;
  }
  for (VertexId v = 0; v < n; ++v) {
    std::size_t b = (deg[v] - lo) * k / span;
    clusters[k - 1 - b].vertices.push_back(v);
  }
  return clusters;
}

LatencySummary summarize(std::vector<double> micros) {
  LatencySummary s;
  s.queries = micros.size();
  if (micros.empty()) return s;
  s.mean_us = std::accumulate(micros.begin(), micros.end(), 0.0) / micros.size();
  std::sort(micros.begin(), micros.end());
  // nearest rank
  auto rank = static_cast<std::size_t>(std::ceil(0.99 * micros.size()));
  s.p99_us = micros[std::max<std::size_t>(rank, 1) - 1];
  return s;
}

namespace {

QueryResult run_query(const BenchInputs& in, Method m, VertexId v, const QueryOptions& opts) {
  switch (m) {
    case Method::kCsc: return sccnt_csc(in.csc, in.bipartite, v, opts);
    case Method::kHpspc: return sccnt_hpspc(in.hpspc, in.graph, v, opts);
    case Method::kBfs: return sccnt_bfs(in.graph, v, opts);
  }
  return {};
}

// keeps results observable so timed calls are not optimised away
volatile Count g_sink = 0;

}  // namespace

std::vector<ClusterReport> run_bench(const BenchInputs& in, const BenchConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  std::vector<ClusterReport> reports;
  Rng rng(cfg.seed);
  for (auto& cluster : degree_clusters(in.graph, cfg.clusters)) {
    ClusterReport rep;
    rep.cluster = std::move(cluster);
    if (!rep.cluster.vertices.empty()) {
      for (std::size_t q = 0; q < cfg.queries; ++q)
        rep.sample.push_back(rep.cluster.vertices[rng.below(rep.cluster.vertices.size())]);
    }
    for (Method m : cfg.methods) {
      for (VertexId v : rep.sample) g_sink = g_sink + run_query(in, m, v, cfg.query).count;
      std::vector<double> micros;
      micros.reserve(rep.sample.size());
      for (VertexId v : rep.sample) {
        auto t0 = Clock::now();
        auto r = run_query(in, m, v, cfg.query);
        auto t1 = Clock::now();
        g_sink = g_sink + r.count;
        micros.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
      }
      rep.latency.emplace_back(m, summarize(std::move(micros)));
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

void write_bench_csv(std::ostream& out, const std::vector<ClusterReport>& reports, const BenchConfig& cfg) {
  out << "cluster,degree_lo,degree_hi,vertices,queries";
  for (Method m : cfg.methods) out << ',' << method_name(m) << "_mean_us," << method_name(m) << "_p99_us";
  out << '\n';
  if (cfg.queries == 0) return;
  auto flags = out.flags();
  out << std::fixed << std::setprecision(3);
  for (const auto& rep : reports) {
    out << rep.cluster.name << ',' << rep.cluster.degree_lo << ',' << rep.cluster.degree_hi << ','
        << rep.cluster.vertices.size() << ',' << rep.sample.size();
    for (const auto& [m, s] : rep.latency) {
      if (s.queries == 0) {
        out << ",,";
      } else {
        out << ',' << s.mean_us << ',' << s.p99_us;
      }
    }
    out << '\n';
  }
  out.flags(flags);
}

}  // namespace csc
