#include "suitalab/indicatrix.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "suitalab/errors.hpp"
#include "suitalab/parallel.hpp"
#include "suitalab/rng.hpp"

namespace suitalab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kShardSize = 1 << 16;

// Purpose tags keep the direction streams disjoint from the sample streams.
constexpr std::uint64_t kPurposeSamples = 0x01ULL << 56;
constexpr std::uint64_t kPurposeBoundDirs = 0x02ULL << 56;
constexpr std::uint64_t kPurposeRadialDirs = 0x03ULL << 56;

// Fixed key for direction sampling, so bounding radii and radial distances
// depend only on (oracle, n_dirs).
constexpr std::uint64_t kDirectionSeed = 0x5D1742A4B8F0C3E9ULL;

double ball_volume_2n(int n, double radius) {
    double v = 1.0;
    for (int k = 1; k <= n; ++k) v *= kPi / k;
    return v * std::pow(radius, 2.0 * n);
}
}  // namespace

nlohmann::json VolumeEstimate::to_json() const {
    return {{"value", value},
            {"std_error", std_error},
            {"samples", samples},
            {"seed", seed},
            {"bounding_radius", bounding_radius}};
}

VolumeEstimate VolumeEstimate::from_json(const nlohmann::json& j) {
    VolumeEstimate e;
    e.value = j.at("value").get<double>();
    e.std_error = j.at("std_error").get<double>();
    e.samples = j.at("samples").get<std::int64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.bounding_radius = j.at("bounding_radius").get<double>();
    return e;
}

double bounding_radius(const MetricOracle& oracle, int n_dirs, double safety_factor) {
    if (n_dirs <= 0) throw std::invalid_argument("bounding_radius: n_dirs must be positive");
    rng::CounterStream rs(kDirectionSeed, kPurposeBoundDirs);
    double min_tau = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_dirs; ++i) {
        CVec w = rng::unit_direction(rs, oracle.dim());
        double t = oracle(w);
        if (t <= 0.0)
            throw capability_error("bounding_radius: metric vanishes in a sampled direction; "
                                   "indicatrix unbounded");
        min_tau = std::min(min_tau, t);
    }
    return safety_factor / min_tau;
}

VolumeEstimate mc_volume(const MetricOracle& oracle, std::int64_t N, std::uint64_t seed) {
    if (N <= 0) throw std::invalid_argument("mc_volume: sample count must be positive");
    double radius = bounding_radius(oracle);
    int n = oracle.dim();
    double box = ball_volume_2n(n, radius);

    std::int64_t shards = (N + kShardSize - 1) / kShardSize;
    std::vector<std::int64_t> hits(shards, 0);
    parallel_for(shards, [&](std::int64_t s) {
        std::int64_t lo = s * kShardSize;
        std::int64_t hi = std::min(N, lo + kShardSize);
        rng::CounterStream rs(seed, kPurposeSamples | static_cast<std::uint64_t>(s));
        std::int64_t count = 0;
        for (std::int64_t i = lo; i < hi; ++i) {
            CVec v = rng::ball_point(rs, n, radius);
            if (oracle.below_unit(v)) ++count;
        }
        hits[s] = count;
    });
    std::int64_t total = 0;
    for (std::int64_t s = 0; s < shards; ++s) total += hits[s];

    double frac = static_cast<double>(total) / static_cast<double>(N);
    VolumeEstimate est;
    est.value = frac * box;
    est.std_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(N));
    est.samples = N;
    est.seed = seed;
    est.bounding_radius = radius;
    return est;
}

double radial_distance(const MetricOracle& o1, const MetricOracle& o2, int n_dirs) {
    if (n_dirs <= 0) throw std::invalid_argument("radial_distance: n_dirs must be positive");
    if (o1.dim() != o2.dim()) throw std::invalid_argument("radial_distance: dimension mismatch");
    rng::CounterStream rs(kDirectionSeed, kPurposeRadialDirs);
    double sup = 0.0;
    for (int i = 0; i < n_dirs; ++i) {
        CVec w = rng::unit_direction(rs, o1.dim());
        double t1 = o1(w);
        double t2 = o2(w);
        if (t1 <= 0.0 || t2 <= 0.0)
            throw capability_error("radial_distance: metric vanishes in a sampled direction");
        sup = std::max(sup, std::abs(1.0 / t1 - 1.0 / t2));
    }
    return sup;
}

bool sandwich_check(const Ellipsoid2C& inner, const VolumeEstimate& mc,
                    const Ellipsoid2C& outer) {
    double vin = inner.volume();
    double vout = outer.volume();
    if (vin > vout) return false;  // malformed bounds
    return vin <= mc.value + 3.0 * mc.std_error && mc.value - 3.0 * mc.std_error <= vout;
}

}  // namespace suitalab
