#ifndef RSCOD_RNG_HPP
#define RSCOD_RNG_HPP

#include <cmath>
#include <cstdint>

namespace rsc {

// splitmix64, used for seeding and for deriving per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    std::uint64_t h = splitmix64(s);
    return splitmix64(s) ^ h;
}

// xoshiro256** by Blackman & Vigna; platform-independent 64-bit generator.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed = 1) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift rejection-free bound is fine for simulation use
        return (std::uint64_t)(((__uint128_t)next() * n) >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // standard normal via the polar method (sqrt/log only)
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double k = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * k;
        have_spare_ = true;
        return u * k;
    }

    double gaussian(double mean, double variance) {
        return mean + std::sqrt(variance) * gaussian();
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace rsc

#endif
