#pragma once

#include <cstdint>

namespace dmm {

// splitmix64 finalizer, used to derive independent stream keys
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t key2(uint64_t a, uint64_t b) { return mix64(mix64(a) ^ (b + 0x632be59bd9b4e019ULL)); }
inline uint64_t key3(uint64_t a, uint64_t b, uint64_t c) { return key2(key2(a, b), c); }

}  // namespace dmm
