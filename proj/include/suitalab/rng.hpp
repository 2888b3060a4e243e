#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "suitalab/cvec.hpp"

namespace suitalab::rng {

// Philox 4x64 with 10 rounds: a stateless counter-based generator, so
// parallel shards keyed by (seed, shard) reproduce the serial stream exactly.
struct Philox4x64 {
    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                              std::array<std::uint64_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

private:
    static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
        unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        hi = static_cast<std::uint64_t>(p >> 64);
        lo = static_cast<std::uint64_t>(p);
    }
    static std::array<std::uint64_t, 4> single_round(const std::array<std::uint64_t, 4>& c,
                                                     const std::array<std::uint64_t, 2>& k) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

// Buffered stream of uniforms/gaussians over one (seed, stream) key.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream)
        : key_{seed, stream}, counter_{0, 0, 0, 0}, idx_(4), have_gauss_(false) {}

    std::uint64_t next_u64() {
        if (idx_ == 4) {
            buf_ = Philox4x64::block(counter_, key_);
            // 256-bit little-endian counter increment
            if (++counter_[0] == 0 && ++counter_[1] == 0 && ++counter_[2] == 0) ++counter_[3];
            idx_ = 0;
        }
        return buf_[idx_++];
    }

    // [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double uniform_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double gaussian() {
        if (have_gauss_) {
            have_gauss_ = false;
            return spare_gauss_;
        }
        double u1 = uniform_open();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_gauss_ = r * std::sin(a);
        have_gauss_ = true;
        return r * std::cos(a);
    }

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_;
    std::array<std::uint64_t, 4> buf_{};
    int idx_;
    bool have_gauss_;
    double spare_gauss_ = 0.0;
};

// Uniform direction on the unit sphere of C^n (= S^{2n-1}).
inline CVec unit_direction(CounterStream& rs, int n) {
    CVec v(n);
    double s;
    do {
        for (int i = 0; i < n; ++i) v[i] = cdouble{rs.gaussian(), rs.gaussian()};
        s = v.norm();
    } while (s == 0.0);
    return cdouble{1.0 / s, 0.0} * v;
}

// Uniform sample in the radius-R ball of C^n: Gaussian direction plus the
// radial inverse CDF r = R * u^{1/(2n)}.
inline CVec ball_point(CounterStream& rs, int n, double radius) {
    CVec v = unit_direction(rs, n);
    double u = rs.uniform();
    double r = radius * std::pow(u, 1.0 / (2.0 * n));
    return cdouble{r, 0.0} * v;
}

}  // namespace suitalab::rng
