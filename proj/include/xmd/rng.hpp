#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace xmd {

// Deterministic RNG. The transforms below are written out explicitly instead
// of going through std::*_distribution so that every stream of draws is fixed
// by the seed alone, independent of the standard library in use.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t integer(std::uint64_t n) {
        // Rejection sampling keeps the draw unbiased for any n.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % n;
    }

    // Standard normal via Box-Muller; caches the spare deviate.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Derives an independent child stream; used to give each pipeline phase
    // its own draw sequence so one phase cannot perturb another.
    Rng fork(std::uint64_t stream_id) {
        return Rng(gen_() ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace xmd
