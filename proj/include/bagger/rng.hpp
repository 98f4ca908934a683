#pragma once

#include <cstdint>
#include <vector>

namespace bagger {

// PCG32 (O'Neill's pcg32 with stream selection). Fixed here so every dataset,
// noise draw and rollout is reproducible bit-for-bit across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) { reseed(seed, stream); }

    void reseed(uint64_t seed, uint64_t stream = 0) {
        state_ = 0;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }

    // Uniform in (0,1); offset by half an ulp of the 32-bit lattice so
    // log(u) in Box-Muller never sees 0.
    double uniform() { return (static_cast<double>(next_u32()) + 0.5) * 0x1p-32; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, bound) by rejection.
    uint32_t next_below(uint32_t bound) {
        uint32_t threshold = (-bound) % bound;
        for (;;) {
            uint32_t r = next_u32();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via Box-Muller, cosine branch only: exactly two
    // uniform draws are consumed per sample.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    template <typename T>
    void fill_normal(T* out, size_t n) {
        for (size_t i = 0; i < n; ++i) out[i] = static_cast<T>(normal());
    }

    template <typename T>
    std::vector<T> normal_vec(size_t n) {
        std::vector<T> v(n);
        fill_normal(v.data(), n);
        return v;
    }

private:
    uint64_t state_ = 0;
    uint64_t inc_ = 1;
};

}  // namespace bagger
