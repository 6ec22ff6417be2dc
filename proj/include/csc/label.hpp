#pragma once

#include <vector>

#include "csc/types.hpp"

namespace csc {

struct LabelEntry {
  VertexId hub = kNoVertex;
  std::uint32_t dist = 0;
  Count count = 0;
  // false when some shortest hub->vertex path has a higher-ranked vertex
  bool canonical = true;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

using LabelList = std::vector<LabelEntry>;

// 64-bit packed entry: hub in bits 63..41, dist in 40..24, count in 23..0.
namespace codec {
inline constexpr unsigned kHubBits = 23;
inline constexpr unsigned kDistBits = 17;
inline constexpr unsigned kCountBits = 24;
inline constexpr std::uint64_t kHubLimit = 1ull << kHubBits;
inline constexpr std::uint32_t kDistSentinel = (1u << kDistBits) - 1;
inline constexpr std::uint64_t kCountMax = (1ull << kCountBits) - 1;
}  // namespace codec

struct EncodedEntry {
  std::uint64_t word = 0;
  bool clamped = false;  // count did not fit and was stored as codec::kCountMax
};

// Throws FormatError when hub or dist is outside the codec range.
EncodedEntry encode_entry(const LabelEntry& e);
// The canonical flag is not part of the word; decoded entries report true.
LabelEntry decode_entry(std::uint64_t word);

}  // namespace csc
