#pragma once

#include <cstdint>
#include <cstring>
#include <random>
#include <string>
#include <vector>

namespace calabilab {

/// FNV-1a over raw bytes; used for state fingerprints and the conventions hash.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::vector<double>& v, std::uint64_t seed = 0xcbf29ce484222325ull) {
    return fnv1a(v.data(), v.size() * sizeof(double), seed);
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 0xcbf29ce484222325ull) {
    return fnv1a(s.data(), s.size(), seed);
}

std::string hex64(std::uint64_t v);

/// Deterministic RNG; all randomized inputs take explicit seeds.
using Rng = std::mt19937_64;

} // namespace calabilab
