#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "csc/label.hpp"
#include "csc/ordering.hpp"

namespace csc {

enum class IndexKind : std::uint8_t { kPlain = 0, kBipartite = 1 };
enum class LabelSide : std::uint8_t { kIn = 0, kOut = 1 };

// Per-vertex in/out label lists sorted by hub rank, plus inverted hub lists.
// All mutation goes through this class so the inverted lists stay in sync.
class LabelIndex {
 public:
  LabelIndex() = default;
  LabelIndex(IndexKind kind, VertexOrdering ordering);

  IndexKind kind() const { return kind_; }
  bool bipartite() const { return kind_ == IndexKind::kBipartite; }
  std::size_t num_vertices() const { return ordering_.size(); }
  const VertexOrdering& ordering() const { return ordering_; }

  const LabelList& label(LabelSide side, VertexId v) const { return labels_[idx(side)][v]; }
  const LabelList& in_label(VertexId v) const { return labels_[0][v]; }
  const LabelList& out_label(VertexId v) const { return labels_[1][v]; }
  // vertices whose label on `side` holds hub h, in no particular order
  const std::vector<VertexId>& inverted(LabelSide side, VertexId h) const { return inverted_[idx(side)][h]; }
  const std::vector<VertexId>& inv_in(VertexId h) const { return inverted_[0][h]; }
  const std::vector<VertexId>& inv_out(VertexId h) const { return inverted_[1][h]; }

  const LabelEntry* find(LabelSide side, VertexId v, VertexId hub) const;
  LabelEntry* find(LabelSide side, VertexId v, VertexId hub);

  // Hub must rank below every hub already in the list (build order).
  void append(LabelSide side, VertexId v, const LabelEntry& e);
  // Hub must be absent from the list.
  void insert(LabelSide side, VertexId v, const LabelEntry& e);
  bool erase(LabelSide side, VertexId v, VertexId hub);

  std::size_t total_entries() const;
  void rebuild_inverted();

  // Compares kind, ordering and label lists (canonical flags included).
  friend bool operator==(const LabelIndex& a, const LabelIndex& b);

 private:
  static std::size_t idx(LabelSide side) { return static_cast<std::size_t>(side); }
  LabelList::const_iterator locate(const LabelList& list, VertexId hub) const;

  IndexKind kind_ = IndexKind::kPlain;
  VertexOrdering ordering_;
  std::vector<LabelList> labels_[2];
  std::vector<std::vector<VertexId>> inverted_[2];
};

struct SaveInfo {
  std::size_t bytes = 0;
  std::size_t clamped_counts = 0;
};

// Binary layout documented in docs/FORMATS.md.
SaveInfo save_index(std::ostream& out, const LabelIndex& idx);
SaveInfo save_index_file(const std::string& path, const LabelIndex& idx);

struct LoadedIndex {
  LabelIndex index;
  bool count_overflow = false;  // some counts were clamped when saved
};

LoadedIndex load_index(std::istream& in);
LoadedIndex load_index_file(const std::string& path);

}  // namespace csc
