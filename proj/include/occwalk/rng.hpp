#pragma once

#include <cstdint>
#include <limits>

namespace occwalk {

// SplitMix64 (Steele, Lea, Flood 2014). Used only to derive stream states;
// every output word passes through the full avalanche mix.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ (Blackman, Vigna 2019).
//
// Per-replicate streams are derived by split-mix: the state of stream
// (seed, i) is four SplitMix64 outputs starting from seed + (i+1)*gamma,
// gamma odd, so distinct replicate indices map to distinct derivation
// states and the avalanche mix decorrelates neighbouring seeds. Identical
// (seed, i) reproduces the identical bit stream on any platform: all
// arithmetic is integer, doubles are built from the top 53 bits.
class Xoshiro256pp {
public:
    using result_type = std::uint64_t;

    Xoshiro256pp(std::uint64_t s0, std::uint64_t s1, std::uint64_t s2, std::uint64_t s3)
        : s_{s0, s1, s2, s3} {
        if ((s0 | s1 | s2 | s3) == 0) s_[0] = 0x9e3779b97f4a7c15ULL;  // all-zero state is invalid
    }

    static Xoshiro256pp stream(std::uint64_t base_seed, std::uint64_t replicate_index) {
        SplitMix64 sm{base_seed + (replicate_index + 1) * 0x9e3779b97f4a7c15ULL};
        const std::uint64_t a = sm.next(), b = sm.next(), c = sm.next(), d = sm.next();
        return Xoshiro256pp(a, b, c, d);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on [0,1) with 53 random bits
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// Integer acceptance threshold for P(u64 < threshold) = p, up to 2^-64.
// p >= 1 must be short-circuited by the caller (threshold would wrap).
inline std::uint64_t probability_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(p * 0x1.0p64);
}

}  // namespace occwalk
