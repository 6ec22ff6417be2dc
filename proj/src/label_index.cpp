#include "csc/label_index.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "binio.hpp"

namespace csc {

namespace {

constexpr char kIndexMagic[5] = "CSC1";
constexpr std::uint32_t kIndexVersion = 1;
constexpr std::uint32_t kFlagBipartite = 1u << 0;
constexpr std::uint32_t kFlagOverflow = 1u << 1;

void erase_value(std::vector<VertexId>& list, VertexId v) {
  auto it = std::find(list.begin(), list.end(), v);
  if (it != list.end()) {
    *it = list.back();
    list.pop_back();
  }
}

}  // namespace

LabelIndex::LabelIndex(IndexKind kind, VertexOrdering ordering) : kind_(kind), ordering_(std::move(ordering)) {
  for (int s = 0; s < 2; ++s) {
    labels_[s].resize(ordering_.size());
    inverted_[s].resize(ordering_.size());
  }
}

LabelList::const_iterator LabelIndex::locate(const LabelList& list, VertexId hub) const {
  auto r = ordering_.rank(hub);
  return std::lower_bound(list.begin(), list.end(), r,
                          [&](const LabelEntry& e, std::uint32_t rank) { return ordering_.rank(e.hub) < rank; });
}

const LabelEntry* LabelIndex::find(LabelSide side, VertexId v, VertexId hub) const {
  const auto& list = labels_[idx(side)][v];
  auto it = locate(list, hub);
  return it != list.end() && it->hub == hub ? &*it : nullptr;
}

LabelEntry* LabelIndex::find(LabelSide side, VertexId v, VertexId hub) {
  return const_cast<LabelEntry*>(std::as_const(*this).find(side, v, hub));
}

void LabelIndex::append(LabelSide side, VertexId v, const LabelEntry& e) {
  auto& list = labels_[idx(side)][v];
  if (!list.empty() && ordering_.rank(list.back().hub) >= ordering_.rank(e.hub))
    throw Error("label append out of rank order");
  list.push_back(e);
  inverted_[idx(side)][e.hub].push_back(v);
}

void LabelIndex::insert(LabelSide side, VertexId v, const LabelEntry& e) {
  auto& list = labels_[idx(side)][v];
  auto it = locate(list, e.hub);
  if (it != list.end() && it->hub == e.hub) throw Error("duplicate hub in label");
  list.insert(it, e);
  inverted_[idx(side)][e.hub].push_back(v);
}

bool LabelIndex::erase(LabelSide side, VertexId v, VertexId hub) {
  auto& list = labels_[idx(side)][v];
  auto it = locate(list, hub);
  if (it == list.end() || it->hub != hub) return false;
  list.erase(it);
  erase_value(inverted_[idx(side)][hub], v);
  return true;
}

std::size_t LabelIndex::total_entries() const {
  std::size_t total = 0;
  for (int s = 0; s < 2; ++s)
    for (const auto& list : labels_[s]) total += list.size();
  return total;
}

void LabelIndex::rebuild_inverted() {
  for (int s = 0; s < 2; ++s) {
    for (auto& inv : inverted_[s]) inv.clear();
    for (VertexId v = 0; v < labels_[s].size(); ++v)
      for (const auto& e : labels_[s][v]) inverted_[s][e.hub].push_back(v);
  }
}

bool operator==(const LabelIndex& a, const LabelIndex& b) {
  return a.kind_ == b.kind_ && a.ordering_ == b.ordering_ && a.labels_[0] == b.labels_[0] &&
         a.labels_[1] == b.labels_[1];
}

SaveInfo save_index(std::ostream& out, const LabelIndex& idx) {
  const auto n = idx.num_vertices();
  SaveInfo info;
  std::vector<std::uint64_t> words;
  std::vector<bool> canonical;
  words.reserve(idx.total_entries());
  canonical.reserve(idx.total_entries());
  for (auto side : {LabelSide::kIn, LabelSide::kOut}) {
    for (VertexId v = 0; v < n; ++v) {
      for (const auto& e : idx.label(side, v)) {
        auto enc = encode_entry(e);
        info.clamped_counts += enc.clamped;
        words.push_back(enc.word);
        canonical.push_back(e.canonical);
      }
    }
  }

  std::uint32_t flags = 0;
  if (idx.bipartite()) flags |= kFlagBipartite;
  if (info.clamped_counts > 0) flags |= kFlagOverflow;

  auto start = out.tellp();
  binio::put_magic(out, kIndexMagic);
  binio::put<std::uint32_t>(out, kIndexVersion);
  binio::put<std::uint32_t>(out, flags);
  binio::put<std::uint64_t>(out, n);
  for (VertexId v : idx.ordering().order()) binio::put<std::uint32_t>(out, v);
  for (auto side : {LabelSide::kIn, LabelSide::kOut})
    for (VertexId v = 0; v < n; ++v) binio::put<std::uint32_t>(out, static_cast<std::uint32_t>(idx.label(side, v).size()));
  for (auto w : words) binio::put<std::uint64_t>(out, w);
  for (std::size_t i = 0; i < canonical.size(); i += 8) {
    std::uint8_t byte = 0;
    for (std::size_t j = 0; j < 8 && i + j < canonical.size(); ++j) byte |= canonical[i + j] << j;
    binio::put<std::uint8_t>(out, byte);
  }
  if (!out) throw Error("write failed");
  auto end = out.tellp();
  info.bytes = start >= 0 && end >= 0 ? static_cast<std::size_t>(end - start) : 0;
  return info;
}

SaveInfo save_index_file(const std::string& path, const LabelIndex& idx) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path);
  return save_index(out, idx);
}

LoadedIndex load_index(std::istream& in) {
  binio::expect_magic(in, kIndexMagic);
  if (binio::get<std::uint32_t>(in) != kIndexVersion) throw FormatError("unsupported index version");
  auto flags = binio::get<std::uint32_t>(in);
  if (flags & ~(kFlagBipartite | kFlagOverflow)) throw FormatError("unknown index flags");
  auto n = binio::get<std::uint64_t>(in);
  if (n > codec::kHubLimit) throw FormatError("vertex count exceeds codec range");
  if ((flags & kFlagBipartite) && n % 2 != 0) throw FormatError("odd vertex count in bipartite index");

  std::vector<VertexId> order(n);
  for (auto& v : order) v = binio::get<std::uint32_t>(in);
  LoadedIndex result;
  result.count_overflow = flags & kFlagOverflow;
  try {
    result.index = LabelIndex(flags & kFlagBipartite ? IndexKind::kBipartite : IndexKind::kPlain,
                              VertexOrdering(std::move(order)));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  auto& idx = result.index;

  std::vector<std::uint32_t> sizes(2 * n);
  std::uint64_t total = 0;
  for (auto& s : sizes) {
    s = binio::get<std::uint32_t>(in);
    total += s;
  }
  std::vector<LabelEntry> entries(total);
  for (auto& e : entries) {
    e = decode_entry(binio::get<std::uint64_t>(in));
    if (e.hub >= n || e.count == 0) throw FormatError("corrupt label entry");
  }
  for (std::uint64_t i = 0; i < total; i += 8) {
    auto byte = binio::get<std::uint8_t>(in);
    for (std::uint64_t j = 0; j < 8 && i + j < total; ++j) entries[i + j].canonical = (byte >> j) & 1u;
  }

  std::size_t pos = 0;
  try {
    for (auto side : {LabelSide::kIn, LabelSide::kOut}) {
      for (VertexId v = 0; v < n; ++v) {
        for (std::uint32_t k = 0; k < sizes[static_cast<std::size_t>(side) * n + v]; ++k) idx.append(side, v, entries[pos++]);
      }
    }
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("corrupt label list: ") + e.what());
  }
  return result;
}

LoadedIndex load_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return load_index(in);
}

}  // namespace csc
