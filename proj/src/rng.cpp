#include "toplabel/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace toplabel {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

constexpr double kPi = 3.14159265358979323846;

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_)
        s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double Rng::normal() {
    const double u1 = 1.0 - uniform01(); // (0, 1], keeps log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double Rng::exponential() {
    return -std::log(1.0 - uniform01());
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0))
        throw std::invalid_argument("gamma shape must be positive");
    if (shape < 1.0) {
        const double u = 1.0 - uniform01();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double Rng::beta(double alpha, double beta) {
    const double a = gamma(alpha);
    const double b = gamma(beta);
    return a / (a + b);
}

std::vector<double> Rng::dirichlet_uniform(std::size_t m) {
    std::vector<double> w(m);
    double sum = 0.0;
    for (auto& v : w) {
        v = exponential();
        sum += v;
    }
    if (sum <= 0.0) // all-zero draw has probability zero; guard anyway
        sum = 1.0;
    for (auto& v : w)
        v /= sum;
    return w;
}

} // namespace toplabel
