#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace mdraw {

/// Identifies one reproducible random stream: one stream per Monte Carlo
/// replicate. Identical (seed, stream_id) reproduce identical draws
/// bit-for-bit regardless of which worker executes the replicate.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

/// xoshiro256** seeded by a counter-based splitmix64 expansion of
/// (seed, stream_id). Stream derivation does not depend on any global
/// state, so replicates can be generated in any order on any thread.
class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(RngStream id) {
        std::uint64_t st = id.seed;
        const std::uint64_t seed_hash = detail::splitmix64(st);
        st = seed_hash ^ (id.stream_id * 0xD1B54A32D192ED03ULL + 0x8BB84B93962EEFCDULL);
        for (auto& w : state_) w = detail::splitmix64(st);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5ULL, 7) * 9ULL;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in (0, 1], 53-bit resolution.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via the Marsaglia polar method; the spare draw is
    /// cached so consecutive calls consume the stream deterministically.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace mdraw
