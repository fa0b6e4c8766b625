#pragma once

#include <cstdint>
#include <random>

namespace slm {

/// splitmix64 finalizer; decorrelates nearby inputs.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed and a stream id.
/// Serial and parallel consumers of the same (seed, stream) pair see
/// identical values.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master ^ mix64(stream));
}

inline std::mt19937_64 make_engine(std::uint64_t master, std::uint64_t stream) {
    return std::mt19937_64(derive_seed(master, stream));
}

// Fixed stream ids for per-simulation draws; trial k uses stream k directly.
inline constexpr std::uint64_t kStreamPhaseVectors = 0xfeed0001u;
inline constexpr std::uint64_t kStreamShiftTable = 0xfeed0002u;

}  // namespace slm
