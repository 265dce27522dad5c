#pragma once

#include <cstdint>

namespace mero::util {

/// splitmix64 step; the workhorse behind every deterministic stream here.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97f4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Hash a value with a salt (pure, no state).
inline std::uint64_t hash_mix(std::uint64_t value, std::uint64_t salt) {
    std::uint64_t s = value ^ (salt * 0x9E3779B97f4A7C15ull);
    return splitmix64(s);
}

/// Map 64 bits to (0, 1).
inline double to_unit(std::uint64_t bits) { return (double(bits >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace mero::util
