#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "csc/graph.hpp"
#include "csc/label.hpp"
#include "csc/workload.hpp"

namespace csc::testing {

inline std::string data_path(const std::string& name) { return std::string(CSC_TEST_DATA_DIR) + "/" + name; }

// Running example, vertices named "1".."10" for v1..v10.
inline LoadedGraph example_graph() { return load_edge_list_file(data_path("example.txt")); }

inline DirectedGraph triangle() {
  DirectedGraph g(3);
  g.insert_edge(0, 1);
  g.insert_edge(1, 2);
  g.insert_edge(2, 0);
  return g;
}

// Reference label lists of the example graph: hub, distance, count with
// hubs as 1-based vertex numbers, in rank order.
using ReferenceEntry = std::tuple<int, std::uint32_t, Count>;
struct ReferenceLabels {
  std::vector<ReferenceEntry> in;
  std::vector<ReferenceEntry> out;
};

inline const std::map<int, ReferenceLabels>& reference_labels() {
  static const std::map<int, ReferenceLabels> t = {
      {1, {{{1, 0, 1}}, {{1, 0, 1}}}},
      {2, {{{1, 6, 2}, {7, 4, 1}, {10, 1, 1}, {2, 0, 1}}, {{1, 6, 1}, {7, 2, 1}, {4, 1, 1}, {2, 0, 1}}}},
      {3, {{{1, 1, 1}, {3, 0, 1}}, {{1, 6, 1}, {7, 2, 1}, {3, 0, 1}}}},
      {4, {{{1, 1, 1}, {7, 5, 1}, {4, 0, 1}}, {{1, 5, 1}, {7, 1, 1}, {4, 0, 1}}}},
      {5, {{{1, 1, 1}, {5, 0, 1}}, {{1, 5, 1}, {7, 1, 1}, {5, 0, 1}}}},
      {6, {{{1, 2, 1}, {3, 1, 1}, {6, 0, 1}}, {{1, 5, 1}, {7, 1, 1}, {6, 0, 1}}}},
      {7, {{{1, 2, 2}, {7, 0, 1}}, {{1, 4, 1}, {7, 0, 1}}}},
      {8, {{{1, 3, 2}, {7, 1, 1}, {8, 0, 1}}, {{1, 3, 1}, {7, 5, 1}, {4, 4, 1}, {10, 2, 1}, {8, 0, 1}}}},
      {9, {{{1, 4, 2}, {7, 2, 1}, {8, 1, 1}, {9, 0, 1}}, {{1, 2, 1}, {7, 4, 1}, {4, 3, 1}, {10, 1, 1}, {9, 0, 1}}}},
      {10, {{{1, 5, 2}, {7, 3, 1}, {10, 0, 1}}, {{1, 1, 1}, {7, 3, 1}, {4, 2, 1}, {10, 0, 1}}}},
  };
  return t;
}

inline std::vector<ReferenceEntry> as_reference(const LabelList& list, const VertexDictionary& dict) {
  std::vector<ReferenceEntry> out;
  for (const auto& e : list) out.emplace_back(std::stoi(dict.name(e.hub)), e.dist, e.count);
  return out;
}

// Random digraph for property sweeps: n in [4, max_n], m in {1.5n, 3n, 6n}.
inline DirectedGraph random_graph(std::uint64_t seed, std::size_t max_n = 64) {
  Rng rng(seed * 7919 + 17);
  std::size_t n = 4 + rng.below(max_n - 3);
  static const double kDensity[] = {1.5, 3.0, 6.0};
  auto m = static_cast<std::size_t>(kDensity[rng.below(3)] * n);
  return generate_erdos(n, m, rng.next());
}

}  // namespace csc::testing
