#include "csc/label.hpp"

#include <string>

namespace csc {

EncodedEntry encode_entry(const LabelEntry& e) {
  if (e.hub >= codec::kHubLimit)
    throw FormatError("hub id " + std::to_string(e.hub) + " does not fit in " + std::to_string(codec::kHubBits) + " bits");
  if (e.dist >= codec::kDistSentinel) throw FormatError("distance " + std::to_string(e.dist) + " does not fit the codec");
  EncodedEntry out;
  std::uint64_t count = e.count;
  if (count > codec::kCountMax) {
    count = codec::kCountMax;
    out.clamped = true;
  }
  out.word = (std::uint64_t{e.hub} << (codec::kDistBits + codec::kCountBits)) |
             (std::uint64_t{e.dist} << codec::kCountBits) | count;
  return out;
}

LabelEntry decode_entry(std::uint64_t word) {
  LabelEntry e;
  e.hub = static_cast<VertexId>(word >> (codec::kDistBits + codec::kCountBits));
  e.dist = static_cast<std::uint32_t>((word >> codec::kCountBits) & codec::kDistSentinel);
  e.count = word & codec::kCountMax;
  if (e.dist == codec::kDistSentinel) throw FormatError("reserved distance in label entry");
  return e;
}

}  // namespace csc
