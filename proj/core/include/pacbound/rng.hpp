#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

namespace pacbound {

/// splitmix64 stream. Small, fully specified, and platform independent, so
/// every draw in a report is reproducible bit-for-bit from the config seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Inverse-CDF draw from nonnegative weights (need not be normalized).
    std::size_t categorical(std::span<const double> weights);

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from a root seed and an index path,
/// e.g. (experiment seed, replicate) or (experiment seed, model, beta index).
/// Pure mixing; identical paths always give identical streams.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path);

} // namespace pacbound
