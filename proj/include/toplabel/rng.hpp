#pragma once

#include <cstdint>
#include <vector>

namespace toplabel {

// Deterministic, portable generator: xoshiro256** seeded through splitmix64.
// All derived draws (uniform, normal, gamma, ...) are defined on top of the
// raw 64-bit stream with fixed algorithms, so a seed reproduces the same
// values on any platform. The exact construction is documented in the README.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit mantissa.
    double uniform01();
    double uniform(double lo, double hi);

    // Standard normal via Box-Muller (cosine branch only).
    double normal();

    // Exponential with rate 1.
    double exponential();

    // Gamma(shape, scale=1), Marsaglia-Tsang; shape < 1 handled by boosting.
    double gamma(double shape);

    double beta(double alpha, double beta);

    // Dirichlet(1, ..., 1) over m components: normalized exponentials.
    std::vector<double> dirichlet_uniform(std::size_t m);

private:
    std::uint64_t state_[4];
};

} // namespace toplabel
