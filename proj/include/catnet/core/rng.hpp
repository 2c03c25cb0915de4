#ifndef CATNET_CORE_RNG_HPP
#define CATNET_CORE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace catnet {

// Seeded generator with hand-rolled distributions. mt19937_64 output is fixed
// by the standard, and we avoid std::*_distribution (implementation-defined
// sequences), so identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [0, n), rejection sampled (no modulo bias).
    std::uint64_t bounded(std::uint64_t n);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (cached second value).
    double normal();

    // Derive an independent stream for a named sub-task.
    Rng fork(std::uint64_t stream) {
        return Rng(next() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// k distinct indices drawn uniformly from [0, n), returned sorted ascending.
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n, std::size_t k);

} // namespace catnet

#endif
