#include "pacbound/rng.hpp"

#include <stdexcept>

namespace pacbound {

std::size_t Rng::categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("categorical: negative weight");
        total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("categorical: zero total weight");
    const double u = next_unit() * total;
    double cum = 0.0;
    std::size_t last = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] == 0.0) continue;
        cum += weights[k];
        last = k;
        if (u < cum) return k;
    }
    return last; // u landed in the rounding gap at the top
}

std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t s = mix(root ^ 0x6a09e667f3bcc909ULL);
    for (std::uint64_t p : path) {
        s = mix(s + 0x9e3779b97f4a7c15ULL * (p + 1));
    }
    return s;
}

} // namespace pacbound
