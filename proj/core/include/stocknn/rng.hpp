#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace stocknn::rng {

// Stream tags keep the per-ticker seed streams for the two trial arms
// disjoint: the control draw must never depend on how many numbers the
// network initialization consumed.
inline constexpr std::uint64_t kNetworkStream = 0x6e6574776f726b31ull;
inline constexpr std::uint64_t kControlStream = 0x636f6e74726f6c31ull;

// FNV-1a, used instead of std::hash because the ticker -> seed mapping has
// to be stable across builds and standard libraries.
constexpr std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : text) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// splitmix64 finalizer; mixes related inputs into unrelated seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-ticker, per-stream seed. Depends only on (master, ticker, stream), so
// editing the universe never perturbs other tickers' results.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view ticker,
                                    std::uint64_t stream) {
    return splitmix64(splitmix64(master ^ stream) ^ fnv1a64(ticker));
}

// Uniform double in [0, 1) built directly from the top 53 bits of the
// generator output. std::uniform_real_distribution is implementation
// defined; this keeps results reproducible across standard libraries.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform double in [-bound, bound).
inline double uniform_symmetric(std::mt19937_64& gen, double bound) {
    return (2.0 * uniform_unit(gen) - 1.0) * bound;
}

// Fair coin from the high bit.
inline int coin(std::mt19937_64& gen) {
    return static_cast<int>(gen() >> 63);
}

}  // namespace stocknn::rng
