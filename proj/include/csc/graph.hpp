#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "csc/types.hpp"

namespace csc {

// Simple directed graph: no self-loops, no parallel edges. Adjacency lists are
// kept sorted so edge tests are logarithmic and snapshots are deterministic.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::size_t n) : out_(n), in_(n) {}

  std::size_t num_vertices() const { return out_.size(); }
  std::size_t num_edges() const { return m_; }

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  std::size_t out_degree(VertexId v) const { return out_[v].size(); }
  std::size_t in_degree(VertexId v) const { return in_[v].size(); }

  bool has_edge(VertexId a, VertexId b) const;

  // false when the edge is already present; throws on self-loops or bad ids
  bool insert_edge(VertexId a, VertexId b);
  // false when the edge is absent
  bool delete_edge(VertexId a, VertexId b);

  DirectedGraph reversed() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  void check_ids(VertexId a, VertexId b) const;

  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::size_t m_ = 0;
};

// Maps external vertex tokens to dense ids and back.
class VertexDictionary {
 public:
  VertexDictionary() = default;
  explicit VertexDictionary(std::vector<std::string> names);

  // dictionary of n vertices named "0".."n-1"
  static VertexDictionary identity(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  // kNoVertex when unknown
  VertexId find(std::string_view name) const;
  VertexId at(std::string_view name) const;  // throws Error when unknown
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const VertexDictionary& a, const VertexDictionary& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
};

struct LoadedGraph {
  DirectedGraph graph;
  VertexDictionary dict;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

// Lines "u v", '#' comments and blank lines allowed. Tokens are remapped to
// dense ids: numerically when every token is an unsigned integer, otherwise
// numeric tokens first, then the rest lexicographically.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const DirectedGraph& g, const VertexDictionary* dict = nullptr);

// Binary snapshot, see docs/FORMATS.md.
void save_snapshot(std::ostream& out, const DirectedGraph& g, const VertexDictionary& dict);
LoadedGraph load_snapshot(std::istream& in);

}  // namespace csc
