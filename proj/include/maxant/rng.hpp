#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace maxant {

/// Splittable counter-seeded random stream. Each (seed, stream_id) pair
/// names an independent substream; identical pairs replay the identical
/// sample sequence regardless of what other streams were consumed.
///
/// State is xoshiro256** initialized through a splitmix64 chain over
/// (seed, stream_id), so the output does not depend on the platform's
/// library distributions.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : seed_(seed), stream_id_(stream_id) {
        std::uint64_t x = splitmix(seed);
        x = splitmix(x ^ (stream_id + 0x9e3779b97f4a7c15ULL));
        for (auto& w : state_) {
            x = splitmix(x);
            w = x;
        }
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Child stream keyed by (seed, mix(stream_id, tag)).
    RngStream substream(std::uint64_t tag) const noexcept {
        return RngStream(seed_, splitmix(stream_id_ ^ splitmix(tag)));
    }

    std::uint64_t next_u64() noexcept {
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

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal N(0,1) via Box-Muller; pairs are cached.
    double gauss() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double z0, z1;
        gauss_pair(z0, z1);
        spare_ = z1;
        have_spare_ = true;
        return z0;
    }

    /// Circularly-symmetric complex Gaussian CN(0,1): E[|z|^2] = 1.
    std::complex<double> cnormal() noexcept {
        double z0, z1;
        gauss_pair(z0, z1);
        return {z0 * kInvSqrt2, z1 * kInvSqrt2};
    }

private:
    static constexpr double kInvSqrt2 = 0.7071067811865475244;

    static std::uint64_t splitmix(std::uint64_t x) noexcept {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    void gauss_pair(double& z0, double& z1) noexcept {
        // u1 in (0,1] so the log is finite
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        z0 = r * std::cos(theta);
        z1 = r * std::sin(theta);
    }

    std::uint64_t state_[4];
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace maxant
