#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace ivim {

// Deterministic random source. mt19937_64 state transitions are fully
// specified by the standard; the distributions here are implemented
// explicitly (std::uniform_real_distribution and friends are
// implementation-defined), so streams are reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform on [a, b); returns exactly a when a == b.
    double uniform(double a, double b) {
        return a + uniform01() * (b - a);
    }

    // Box-Muller pair of independent N(0,1) draws. Consumes exactly two
    // engine outputs, so stream positions are easy to reason about.
    std::pair<double, double> gaussian_pair() {
        const double u1 = 1.0 - uniform01(); // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    double gaussian() { return gaussian_pair().first; }

    // splitmix64 step; used to derive independent per-stream seeds from a
    // master seed (partitioned dataset generation, sweep cells, ...).
    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace ivim
