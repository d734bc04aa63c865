#pragma once

#include <cstdint>

namespace forestconc {

// Counter-based generator: every output is a pure function of
// (seed, stream, trial, index), so trials can be evaluated in any order or on
// any number of workers with identical results.

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t trial, std::uint64_t index) {
    std::uint64_t x = detail::mix64(seed ^ 0x243f6a8885a308d3ull);
    x = detail::mix64(x ^ stream);
    x = detail::mix64(x ^ trial);
    x = detail::mix64(x ^ index);
    return x;
}

/// Uniform double in [0, 1) keyed by (seed, stream, trial, index).
inline double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t trial, std::uint64_t index) {
    return static_cast<double>(counter_hash(seed, stream, trial, index) >> 11) * 0x1.0p-53;
}

/// Sequential view over one (seed, stream, trial) key, for consumers that
/// need an unbounded number of draws.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
               std::uint64_t first_index = 0)
        : seed_(seed), stream_(stream), trial_(trial), index_(first_index) {}

    std::uint64_t next_u64() { return counter_hash(seed_, stream_, trial_, index_++); }
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // unbiased integer in [0, bound) by rejection
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ull / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t seed_, stream_, trial_, index_;
};

}  // namespace forestconc
