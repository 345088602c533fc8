#include "biasbench/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace biasbench {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t root_seed, std::string label)
    : root_seed_(root_seed), label_(std::move(label)) {
    base_ = mix64(root_seed_ ^ kGoldenGamma) ^ mix64(fnv1a64(label_) + 0xD1B54A32D192ED03ull);
}

RngStream RngStream::fork(std::string_view child) const {
    std::string sub = label_;
    sub += '/';
    sub += child;
    return RngStream(root_seed_, std::move(sub));
}

std::uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(base_ + counter_ * kGoldenGamma);
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be >= 1");
    const std::uint64_t reject_below = (0ull - bound) % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= reject_below) return r % bound;
    }
}

double sigmoid(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("sigmoid: non-finite input");
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

int sample_bernoulli(double p, RngStream& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_bernoulli: p must lie in [0, 1]");
    return rng.next_unit() < p ? 1 : 0;
}

double sample_gaussian(double mu, double sigma, RngStream& rng) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma) || !std::isfinite(mu)) {
        throw std::invalid_argument("sample_gaussian: mu must be finite and sigma >= 0");
    }
    if (sigma == 0.0) return mu;
    double u, v, s;
    do {
        u = 2.0 * rng.next_unit() - 1.0;
        v = 2.0 * rng.next_unit() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return mu + sigma * u * std::sqrt(-2.0 * std::log(s) / s);
}

int sample_binomial(int k, double p, RngStream& rng) {
    if (k < 1) throw std::invalid_argument("sample_binomial: k must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_binomial: p must lie in [0, 1]");
    int sum = 0;
    for (int i = 0; i < k; ++i) sum += sample_bernoulli(p, rng);
    return sum;
}

}  // namespace biasbench
