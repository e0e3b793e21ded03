#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace ptso {

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <typename Range>
std::size_t hash_range(const Range& range, std::size_t seed = 0) {
  for (const auto& item : range) hash_combine(seed, std::hash<std::decay_t<decltype(item)>>{}(item));
  return seed;
}

}  // namespace ptso
