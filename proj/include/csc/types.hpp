#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace csc {

using VertexId = std::uint32_t;
using Count = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
// "unreached" inside BFS code; distinct from the on-disk distance sentinel
inline constexpr std::uint32_t kInfDist = std::numeric_limits<std::uint32_t>::max();
inline constexpr Count kCountMax = std::numeric_limits<Count>::max();

inline Count sat_add(Count a, Count b) { return a > kCountMax - b ? kCountMax : a + b; }

inline Count sat_mul(Count a, Count b) {
  if (a == 0 || b == 0) return 0;
  return a > kCountMax / b ? kCountMax : a * b;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace csc
