#include "csc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "binio.hpp"

namespace csc {

namespace {

bool sorted_insert(std::vector<VertexId>& list, VertexId x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it != list.end() && *it == x) return false;
  list.insert(it, x);
  return true;
}

bool sorted_erase(std::vector<VertexId>& list, VertexId x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it == list.end() || *it != x) return false;
  list.erase(it);
  return true;
}

bool is_unsigned_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
  auto p = s.find_first_not_of('0');
  return p == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(p);
}

bool token_less(const std::string& a, const std::string& b) {
  bool na = is_unsigned_integer(a), nb = is_unsigned_integer(b);
  if (na != nb) return na;
  if (!na) return a < b;
  auto sa = strip_zeros(a), sb = strip_zeros(b);
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

constexpr char kSnapshotMagic[5] = "CSCG";
constexpr std::uint32_t kSnapshotVersion = 1;

}  // namespace

void DirectedGraph::check_ids(VertexId a, VertexId b) const {
  if (a >= num_vertices() || b >= num_vertices()) throw Error("vertex id out of range");
  if (a == b) throw Error("self-loop rejected");
}

bool DirectedGraph::has_edge(VertexId a, VertexId b) const {
  if (a >= num_vertices() || b >= num_vertices()) return false;
  return std::binary_search(out_[a].begin(), out_[a].end(), b);
}

bool DirectedGraph::insert_edge(VertexId a, VertexId b) {
  check_ids(a, b);
  if (!sorted_insert(out_[a], b)) return false;
  sorted_insert(in_[b], a);
  ++m_;
  return true;
}

bool DirectedGraph::delete_edge(VertexId a, VertexId b) {
  check_ids(a, b);
  if (!sorted_erase(out_[a], b)) return false;
  sorted_erase(in_[b], a);
  --m_;
  return true;
}

DirectedGraph DirectedGraph::reversed() const {
  DirectedGraph r;
  r.out_ = in_;
  r.in_ = out_;
  r.m_ = m_;
  return r;
}

std::vector<std::pair<VertexId, VertexId>> DirectedGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> result;
  result.reserve(m_);
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (VertexId w : out_[u]) result.emplace_back(u, w);
  return result;
}

VertexDictionary::VertexDictionary(std::vector<std::string> names) : names_(std::move(names)) {
  ids_.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (!ids_.emplace(names_[v], v).second) throw Error("duplicate vertex name '" + names_[v] + "'");
  }
}

VertexDictionary VertexDictionary::identity(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) names[v] = std::to_string(v);
  return VertexDictionary(std::move(names));
}

VertexId VertexDictionary::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  return it == ids_.end() ? kNoVertex : it->second;
}

VertexId VertexDictionary::at(std::string_view name) const {
  VertexId v = find(name);
  if (v == kNoVertex) throw Error("unknown vertex '" + std::string(name) + "'");
  return v;
}

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string u, v, extra;
    if (!(ss >> u)) continue;
    if (u[0] == '#') continue;
    if (!(ss >> v)) throw ParseError(lineno, "expected two vertex ids");
    if (ss >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    raw.emplace_back(std::move(u), std::move(v));
  }

  std::vector<std::string> names;
  names.reserve(raw.size() * 2);
  for (auto& [u, v] : raw) {
    names.push_back(u);
    names.push_back(v);
  }
  std::sort(names.begin(), names.end(), token_less);
  names.erase(std::unique(names.begin(), names.end()), names.end());

  LoadedGraph result;
  result.dict = VertexDictionary(std::move(names));
  result.graph = DirectedGraph(result.dict.size());
  for (auto& [u, v] : raw) {
    VertexId a = result.dict.find(u), b = result.dict.find(v);
    if (a == b) {
      ++result.self_loops_dropped;
    } else if (!result.graph.insert_edge(a, b)) {
      ++result.duplicates_dropped;
    }
  }
  return result;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g, const VertexDictionary* dict) {
  for (auto [u, w] : g.edges()) {
    if (dict) {
      out << dict->name(u) << ' ' << dict->name(w) << '\n';
    } else {
      out << u << ' ' << w << '\n';
    }
  }
}

void save_snapshot(std::ostream& out, const DirectedGraph& g, const VertexDictionary& dict) {
  if (dict.size() != g.num_vertices()) throw Error("dictionary size does not match graph");
  binio::put_magic(out, kSnapshotMagic);
  binio::put<std::uint32_t>(out, kSnapshotVersion);
  binio::put<std::uint64_t>(out, g.num_vertices());
  binio::put<std::uint64_t>(out, g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.out_neighbors(v);
    binio::put<std::uint32_t>(out, static_cast<std::uint32_t>(nbrs.size()));
    for (VertexId w : nbrs) binio::put<std::uint32_t>(out, w);
  }
  for (const auto& name : dict.names()) {
    binio::put<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
}

LoadedGraph load_snapshot(std::istream& in) {
  binio::expect_magic(in, kSnapshotMagic);
  if (binio::get<std::uint32_t>(in) != kSnapshotVersion) throw FormatError("unsupported snapshot version");
  auto n = binio::get<std::uint64_t>(in);
  auto m = binio::get<std::uint64_t>(in);
  if (n > kNoVertex) throw FormatError("vertex count too large");
  LoadedGraph result;
  result.graph = DirectedGraph(n);
  for (VertexId v = 0; v < n; ++v) {
    auto deg = binio::get<std::uint32_t>(in);
    for (std::uint32_t i = 0; i < deg; ++i) {
      auto w = binio::get<std::uint32_t>(in);
      if (w >= n || w == v || !result.graph.insert_edge(v, w)) throw FormatError("corrupt adjacency");
    }
  }
  if (result.graph.num_edges() != m) throw FormatError("edge count mismatch");
  std::vector<std::string> names(n);
  for (auto& name : names) {
    auto len = binio::get<std::uint32_t>(in);
    name.resize(len);
    if (!in.read(name.data(), len)) throw FormatError("truncated file");
  }
  result.dict = VertexDictionary(std::move(names));
  return result;
}

}  // namespace csc
