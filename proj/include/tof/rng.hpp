#pragma once

// Counter-based per-stream RNG: stream i of seed S starts at
// mix(S + i * GAMMA) and draws successive values mix(state + j * GAMMA).
// Streams are decorrelated by the finalizer, so trajectory i never shares
// raw draws with trajectory i+1, and any subset of streams can be generated
// independently; parallel and serial runs are bit-identical by construction.

#include <cstdint>

namespace tof {

inline constexpr std::uint64_t rng_gamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Splitmix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += rng_gamma;
        return splitmix64_mix(state);
    }

    // uniform on (0, 1]: the +1 keeps log() finite.
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }
};

inline Splitmix64 rng_stream(std::uint64_t seed, std::uint64_t index) {
    return Splitmix64{splitmix64_mix(seed + index * rng_gamma)};
}

}  // namespace tof
