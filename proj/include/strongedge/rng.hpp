#pragma once

#include <cstdint>
#include <vector>

namespace strongedge {

/// SplitMix64. Self-contained so that seeded runs are byte-identical across
/// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling, bias-free
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// k distinct values from {1..universe}, ascending.
    std::vector<int> sample_colors(int k, int universe);

    /// Derive an independent stream for (seed, index) so batches of trials
    /// are order- and scheduling-independent.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        Rng mix(seed ^ (0x5851f42d4c957f2dULL * (trial + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

inline std::vector<int> Rng::sample_colors(int k, int universe) {
    // partial Fisher-Yates over {1..universe}
    std::vector<int> pool(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::uint64_t j = below(static_cast<std::uint64_t>(universe - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(i) + j]);
        out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strongedge
