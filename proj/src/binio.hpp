#pragma once

// Little-endian primitives shared by the snapshot and index formats.

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "csc/types.hpp"

namespace csc::binio {

template <typename T>
void put(std::ostream& out, T value) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(value >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) throw FormatError("truncated file");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(buf[i]) << (8 * i);
  return value;
}

inline void put_magic(std::ostream& out, const char (&magic)[5]) { out.write(magic, 4); }

inline void expect_magic(std::istream& in, const char (&magic)[5]) {
  char buf[4];
  if (!in.read(buf, 4)) throw FormatError("truncated file");
  if (std::string(buf, 4) != std::string(magic, 4)) throw FormatError("bad magic, expected " + std::string(magic));
}

}  // namespace csc::binio
