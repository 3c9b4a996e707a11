#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace latlip {

// Self-contained generator so that seeded runs are bit-for-bit reproducible
// across platforms and standard library versions. xoshiro256++ core with
// splitmix64 seeding.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& s : s_) s = splitmix64(sm);
    }

    /// Independent stream for a (stream, index) pair derived from one base
    /// seed. Work items seeded this way can run in any order, or in
    /// parallel, and still reproduce the serial result bit-for-bit.
    static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        std::uint64_t sm = seed;
        std::uint64_t a = splitmix64(sm);
        sm ^= 0x5851f42d4c957f2dULL * (stream + 1);
        std::uint64_t b = splitmix64(sm);
        sm ^= 0x14057b7ef767814fULL * (index + 1);
        Rng r(sm ^ a ^ (b << 1));
        return r;
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
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

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Standard normal (Box-Muller; one deviate per call).
    double gaussian() {
        double u1 = 1.0 - uniform01();  // (0,1], keeps log finite
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace latlip
