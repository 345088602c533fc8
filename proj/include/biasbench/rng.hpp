#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace biasbench {

// Counter-based pseudo-random stream keyed by (root_seed, label).
//
// Every stream is an independent SplitMix64 sequence whose base state is
// derived from the 64-bit root seed and an FNV-1a hash of the label path
// (e.g. "cell/III/measurement_r/gen"). Two streams with the same key always
// produce the same draw sequence, and streams with different labels are
// independent for simulation purposes, so workers can own disjoint streams
// and reproduce a serial run in any order.
//
// The draw at counter i is mix64(base + (i+1) * GOLDEN_GAMMA); nothing about
// the sequence depends on how many sibling streams exist.
class RngStream {
public:
    RngStream(std::uint64_t root_seed, std::string label);

    // Child stream labelled "<label>/<child>". The parent is not advanced.
    RngStream fork(std::string_view child) const;

    std::uint64_t next_u64();

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit();

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling, no bias.
    std::uint64_t next_below(std::uint64_t bound);

    std::uint64_t root_seed() const { return root_seed_; }
    const std::string& label() const { return label_; }

private:
    std::uint64_t root_seed_;
    std::string label_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

// Numerically stable logistic function 1 / (1 + exp(-x)).
// Evaluated branch-per-sign so |x| up to ~1e3 neither overflows nor loses
// the small tail. Throws std::invalid_argument on non-finite input.
double sigmoid(double x);

// One Bernoulli(p) draw; p must lie in [0, 1].
int sample_bernoulli(double p, RngStream& rng);

// One Normal(mu, sigma^2) draw via the Marsaglia polar method; the paired
// deviate is discarded so the draw count per call is data-independent in
// distribution but deterministic for a given stream. sigma == 0 returns mu
// exactly without consuming draws.
double sample_gaussian(double mu, double sigma, RngStream& rng);

// One Binomial(k, p) draw as the sum of k Bernoulli(p) draws; k >= 1.
int sample_binomial(int k, double p, RngStream& rng);

}  // namespace biasbench
