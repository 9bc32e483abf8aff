#pragma once

#include <cstdint>
#include <random>

namespace wsnsim {

// Stream ids keep the placement draws and the per-round election draws
// decorrelated when both are derived from the same user seed.
constexpr std::uint32_t kPlacementStream = 1;
constexpr std::uint32_t kElectionStream = 2;

inline std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint32_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream_id};
  return std::mt19937_64(seq);
}

// Uniform double in [0, 1) from 53 random bits. Bit-stable across platforms,
// unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace wsnsim
