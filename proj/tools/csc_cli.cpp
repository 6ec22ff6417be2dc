// csc: build, query, benchmark and update shortest-cycle counting indexes.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "csc/bench.hpp"
#include "csc/builder.hpp"
#include "csc/maintenance.hpp"
#include "csc/workload.hpp"

namespace {

using namespace csc;
using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

// Edge list, or a binary snapshot when the file starts with its magic.
LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  char magic[4] = {};
  in.read(magic, 4);
  in.clear();
  in.seekg(0);
  LoadedGraph lg = std::string(magic, 4) == "CSCG" ? load_snapshot(in) : load_edge_list(in);
  if (lg.self_loops_dropped || lg.duplicates_dropped)
    std::cerr << "warning: dropped " << lg.self_loops_dropped << " self-loops and " << lg.duplicates_dropped
              << " duplicate edges\n";
  return lg;
}

LabelIndex load_matching_index(const std::string& path, const DirectedGraph& g) {
  auto loaded = load_index_file(path);
  if (loaded.count_overflow) std::cerr << "warning: index holds clamped path counts\n";
  auto expected = loaded.index.bipartite() ? 2 * g.num_vertices() : g.num_vertices();
  if (loaded.index.num_vertices() != expected) throw Error("index was not built for this graph");
  return std::move(loaded.index);
}

std::string format(const QueryResult& r) {
  std::ostringstream ss;
  if (r.length) {
    ss << *r.length;
  } else {
    ss << "none";
  }
  ss << ' ' << r.count;
  if (r.saturated) ss << " saturated";
  return ss.str();
}

std::string bipartite_name(const VertexDictionary& dict, VertexId x) {
  return dict.name(original_of(x)) + (is_in_vertex(x) ? "^i" : "^o");
}

void print_labels(std::ostream& out, const LabelIndex& idx, const VertexDictionary& dict) {
  auto name = [&](VertexId x) { return idx.bipartite() ? bipartite_name(dict, x) : dict.name(x); };
  for (VertexId r = 0; r < idx.num_vertices(); ++r) {
    VertexId v = idx.ordering().at_rank(r);
    for (auto side : {LabelSide::kIn, LabelSide::kOut}) {
      out << (side == LabelSide::kIn ? "L_in(" : "L_out(") << name(v) << ") =";
      for (const auto& e : idx.label(side, v))
        out << " (" << name(e.hub) << ',' << e.dist << ',' << e.count << ')' << (e.canonical ? "" : "*");
      out << '\n';
    }
  }
}

struct GenArgs {
  std::string model = "erdos";
  std::size_t n = 100;
  std::size_t m = 300;
  std::uint64_t seed = 1;
  std::size_t hubs = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  DirectedGraph g;
  if (a.model == "erdos") {
    g = generate_erdos(a.n, a.m, a.seed);
  } else if (a.model == "chain") {
    g = generate_chain(a.n, a.m, a.seed);
  } else if (a.model == "star-cycles") {
    g = generate_star_cycles(a.n, a.m, a.seed, a.hubs);
  } else {
    throw Error("unknown model " + a.model);
  }
  if (a.out.empty()) {
    write_edge_list(std::cout, g);
  } else {
    std::ofstream out(a.out);
    if (!out) throw Error("cannot open " + a.out);
    write_edge_list(out, g);
  }
  return 0;
}

struct BuildArgs {
  std::string graph;
  std::string mode = "csc";
  std::string out;
  bool print = false;
};

int cmd_build(const BuildArgs& a) {
  auto lg = load_graph(a.graph);
  auto t0 = Clock::now();
  LabelIndex idx;
  if (a.mode == "csc") {
    auto gb = bipartite_convert(lg.graph);
    idx = build_csc(gb, compute_ordering(gb));
  } else if (a.mode == "hpspc") {
    idx = build_hpspc(lg.graph, compute_ordering(lg.graph));
  } else {
    throw Error("unknown mode " + a.mode);
  }
  double seconds = micros_since(t0) / 1e6;
  auto info = save_index_file(a.out, idx);
  std::cout << "vertices " << lg.graph.num_vertices() << "\nedges " << lg.graph.num_edges() << "\nbuild_seconds "
            << seconds << "\nentries " << idx.total_entries() << "\nindex_bytes " << info.bytes << '\n';
  if (info.clamped_counts) std::cerr << "warning: " << info.clamped_counts << " counts clamped to 24 bits\n";
  if (a.print) print_labels(std::cout, idx, lg.dict);
  return 0;
}

struct QueryArgs {
  std::string index;
  std::string graph;
  std::string vertex;
  bool all = false;
  std::vector<std::string> pair;
  std::uint32_t min_len = 3;
};

int cmd_query(const QueryArgs& a) {
  auto lg = load_graph(a.graph);
  auto idx = load_matching_index(a.index, lg.graph);
  QueryOptions opts{a.min_len};
  validate(opts);
  BipartiteGraph gb;
  if (idx.bipartite()) gb = bipartite_convert(lg.graph);
  auto sccnt = [&](VertexId v) {
    return idx.bipartite() ? sccnt_csc(idx, gb, v, opts) : sccnt_hpspc(idx, lg.graph, v, opts);
  };

  std::cout << std::fixed << std::setprecision(3);
  if (!a.pair.empty()) {
    VertexId s = lg.dict.at(a.pair[0]), t = lg.dict.at(a.pair[1]);
    auto t0 = Clock::now();
    auto r = spcnt_original(idx, s, t);
    double us = micros_since(t0);
    std::cout << format(r) << "\nlatency_us " << us << '\n';
  } else if (a.all) {
    for (VertexId v = 0; v < lg.graph.num_vertices(); ++v) {
      auto t0 = Clock::now();
      auto r = sccnt(v);
      double us = micros_since(t0);
      std::cout << lg.dict.name(v) << ' ' << format(r) << ' ' << us << '\n';
    }
  } else {
    VertexId v = lg.dict.at(a.vertex);
    auto t0 = Clock::now();
    auto r = sccnt(v);
    double us = micros_since(t0);
    std::cout << format(r) << "\nlatency_us " << us << '\n';
  }
  return 0;
}

int cmd_labels(const std::string& index, const std::string& graph) {
  auto lg = load_graph(graph);
  print_labels(std::cout, load_matching_index(index, lg.graph), lg.dict);
  return 0;
}

struct BenchArgs {
  std::string graph;
  BenchConfig cfg;
  std::string out;
};

int cmd_bench(BenchArgs a) {
  validate(a.cfg.query);
  auto lg = load_graph(a.graph);
  auto gb = bipartite_convert(lg.graph);
  auto t0 = Clock::now();
  auto csc_idx = build_csc(gb, compute_ordering(gb));
  double csc_s = micros_since(t0) / 1e6;
  t0 = Clock::now();
  auto hp_idx = build_hpspc(lg.graph, compute_ordering(lg.graph));
  double hp_s = micros_since(t0) / 1e6;
  std::cerr << "csc build " << csc_s << " s, " << csc_idx.total_entries() << " entries; hpspc build " << hp_s << " s, "
            << hp_idx.total_entries() << " entries\n";

  auto reports = run_bench({lg.graph, gb, csc_idx, hp_idx}, a.cfg);
  if (a.out.empty()) {
    write_bench_csv(std::cout, reports, a.cfg);
  } else {
    std::ofstream out(a.out);
    if (!out) throw Error("cannot open " + a.out);
    write_bench_csv(out, reports, a.cfg);
  }
  return 0;
}

struct UpdateArgs {
  std::string index;
  std::string graph;
  std::string workload;
  std::string strategy = "redundancy";
  std::string out;
  std::string out_graph;
  bool verify = false;
};

int cmd_update(const UpdateArgs& a) {
  auto lg = load_graph(a.graph);
  UpdateConfig cfg;
  if (a.strategy == "redundancy") {
    cfg.strategy = UpdateStrategy::kRedundancy;
  } else if (a.strategy == "minimality") {
    cfg.strategy = UpdateStrategy::kMinimality;
  } else {
    throw Error("unknown strategy " + a.strategy);
  }
  std::ifstream wl(a.workload);
  if (!wl) throw Error("cannot open " + a.workload);
  auto updates = parse_workload(wl, lg.dict);

  DynamicIndex dyn(lg.graph, load_matching_index(a.index, lg.graph));
  auto entries_before = dyn.index().total_entries();
  std::cout << std::fixed << std::setprecision(3);
  std::cout << "op,u,v,applied,time_us,inserted,replaced,accumulated,deleted,cleaned,visited,entries\n";
  UpdateStats total;
  for (const auto& up : updates) {
    auto s = up.insert ? dyn.insert_edge(up.from, up.to, cfg) : dyn.delete_edge(up.from, up.to, cfg);
    total += s;
    std::cout << (up.insert ? '+' : '-') << ',' << lg.dict.name(up.from) << ',' << lg.dict.name(up.to) << ','
              << s.applied << ',' << s.seconds * 1e6 << ',' << s.labels_inserted << ',' << s.labels_replaced << ','
              << s.labels_accumulated << ',' << s.labels_deleted << ',' << s.labels_cleaned << ','
              << s.vertices_visited << ',' << dyn.index().total_entries() << '\n';
  }
  std::cerr << "updates " << updates.size() << ", total " << total.seconds << " s, entries " << entries_before
            << " -> " << dyn.index().total_entries() << '\n';

  if (a.verify) {
    auto fresh = dyn.rebuild();
    DynamicIndex ref(dyn.graph(), fresh);
    bool ok = true;
    for (VertexId v = 0; v < dyn.graph().num_vertices() && ok; ++v) ok = dyn.sccnt(v) == ref.sccnt(v);
    for (VertexId s = 0; s < dyn.graph().num_vertices() && ok; ++s)
      for (VertexId t = 0; t < dyn.graph().num_vertices() && ok; ++t) ok = dyn.spcnt(s, t) == ref.spcnt(s, t);
    std::cerr << "verify " << (ok ? "ok" : "MISMATCH") << ", entries " << dyn.index().total_entries() << " vs rebuild "
              << fresh.total_entries() << '\n';
    if (!ok) return 3;
  }
  if (!a.out.empty()) save_index_file(a.out, dyn.index());
  if (!a.out_graph.empty()) {
    std::ofstream out(a.out_graph);
    if (!out) throw Error("cannot open " + a.out_graph);
    write_edge_list(out, dyn.graph(), &lg.dict);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest-cycle counting index"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a synthetic digraph as an edge list");
  g->add_option("--model", gen.model, "erdos | chain | star-cycles")->check(CLI::IsMember({"erdos", "chain", "star-cycles"}));
  g->add_option("--n", gen.n, "vertex count");
  g->add_option("--m", gen.m, "edge count");
  g->add_option("--seed", gen.seed);
  g->add_option("--hubs", gen.hubs, "planted hubs for star-cycles (0 = n/2500)");
  g->add_option("--out", gen.out, "output path (default stdout)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build an index from an edge list");
  b->add_option("graph", build.graph)->required();
  b->add_option("--mode", build.mode)->check(CLI::IsMember({"csc", "hpspc"}));
  b->add_option("--out", build.out, "index path")->required();
  b->add_flag("--print-labels", build.print);

  QueryArgs query;
  auto* q = app.add_subcommand("query", "Answer SCCnt / SPCnt queries");
  q->add_option("index", query.index)->required();
  q->add_option("graph", query.graph)->required();
  auto* qv = q->add_option("--vertex", query.vertex, "SCCnt of one vertex");
  auto* qa = q->add_flag("--all", query.all, "SCCnt of every vertex");
  auto* qp = q->add_option("--pair", query.pair, "SPCnt s t")->expected(2);
  qv->excludes(qa)->excludes(qp);
  qa->excludes(qp);
  q->add_option("--min-cycle-len", query.min_len)->check(CLI::IsMember({2, 3}));

  std::string labels_index, labels_graph;
  auto* l = app.add_subcommand("labels", "Print every label list");
  l->add_option("index", labels_index)->required();
  l->add_option("graph", labels_graph)->required();

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Latency per degree cluster as CSV");
  be->add_option("graph", bench.graph)->required();
  be->add_option("--clusters", bench.cfg.clusters)->check(CLI::PositiveNumber);
  be->add_option("--queries", bench.cfg.queries);
  be->add_option("--seed", bench.cfg.seed);
  be->add_option("--min-cycle-len", bench.cfg.query.min_cycle_len)->check(CLI::IsMember({2, 3}));
  be->add_option("--out", bench.out, "CSV path (default stdout)");

  UpdateArgs update;
  auto* u = app.add_subcommand("update", "Apply a +/- edge workload to an index");
  u->add_option("index", update.index)->required();
  u->add_option("graph", update.graph)->required();
  u->add_option("workload", update.workload)->required();
  u->add_option("--strategy", update.strategy)->check(CLI::IsMember({"redundancy", "minimality"}));
  u->add_option("--out", update.out, "write the updated index");
  u->add_option("--out-graph", update.out_graph, "write the updated edge list");
  u->add_flag("--verify", update.verify, "compare against a rebuild");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*g) return cmd_gen(gen);
    if (*b) return cmd_build(build);
    if (*q) {
      if (query.vertex.empty() && !query.all && query.pair.empty()) throw Error("one of --vertex, --all, --pair is required");
      return cmd_query(query);
    }
    if (*l) return cmd_labels(labels_index, labels_graph);
    if (*be) return cmd_bench(bench);
    if (*u) return cmd_update(update);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
