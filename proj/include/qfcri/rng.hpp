#ifndef QFCRI_RNG_HPP
#define QFCRI_RNG_HPP

#include <cstdint>

namespace qfcri {

/// SplitMix64 step; used to expand seeds and to hash stream coordinates.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derive an independent stream seed from (base, a, b, c). Pure function of
/// its arguments, so parallel consumers can derive seeds in any order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = base;
    std::uint64_t h = splitmix64(s);
    s ^= a * 0xD1B54A32D192ED03ULL;
    h ^= splitmix64(s);
    s ^= b * 0x8CB92BA72F3D8DD7ULL;
    h ^= splitmix64(s);
    s ^= c * 0xEB44ACCAB455D165ULL;
    h ^= splitmix64(s);
    return h;
}

/// xoshiro256++ by Blackman & Vigna. Deterministic and portable: the
/// sequence depends only on the 64-bit seed, not on the standard library.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform draw strictly inside (0,1): ((x >> 11) + 0.5) * 2^-53.
    /// Never returns 0 or 1, so Q(u) stays inside the model's domain.
    double uniform_open01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

} // namespace qfcri

#endif // QFCRI_RNG_HPP
