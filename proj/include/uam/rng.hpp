#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace uam {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream tags. Each stochastic source draws from its own derived stream so
/// that draws never depend on the order other sources were consumed in.
enum class Stream : std::uint64_t {
  Demand = 1,
  Closure = 2,
  Takeoff = 3,
  Policy = 4,
  Genetic = 5,
  Scenario = 6,
};

/// Mixes a base seed with a tag and any number of integer keys.
inline std::uint64_t derive_seed(std::uint64_t seed, Stream tag,
                                 std::initializer_list<std::uint64_t> keys = {}) {
  std::uint64_t h = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(tag)));
  for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
  return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed, Stream tag,
                                std::initializer_list<std::uint64_t> keys = {}) {
  return std::mt19937_64(derive_seed(seed, tag, keys));
}

}  // namespace uam
