#pragma once

#include <cstdint>

#include <json.hpp>

#include "suitalab/metric.hpp"

namespace suitalab {

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;  // binomial standard error scaled by the box volume
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    double bounding_radius = 0.0;

    nlohmann::json to_json() const;
    static VolumeEstimate from_json(const nlohmann::json& j);
};

// Radius R with indicatrix(oracle) contained in the ball of radius R:
// safety_factor / min of tau over sampled unit directions.  Deterministic in
// (oracle, n_dirs).
double bounding_radius(const MetricOracle& oracle, int n_dirs = 2048,
                       double safety_factor = 1.25);

// Monte Carlo Lebesgue measure of the indicatrix {v : tau(v) < 1}: uniform
// samples in the bounding ball, estimate = hit fraction times ball volume.
// Fixed shard layout keyed by (seed, shard), so parallel and serial runs are
// bit-identical.
VolumeEstimate mc_volume(const MetricOracle& oracle, std::int64_t N, std::uint64_t seed);

// Sup over sampled unit directions of |1/tau1 - 1/tau2|: the distance of the
// radial functions of the two balanced indicatrices.  For star-shaped sets
// this lower-bounds the Hausdorff distance and is the reported proxy.
double radial_distance(const MetricOracle& o1, const MetricOracle& o2, int n_dirs = 4096);

// True iff vol(inner) <= mc + 3 sigma and mc - 3 sigma <= vol(outer)
// (and the bounds are ordered).
bool sandwich_check(const Ellipsoid2C& inner, const VolumeEstimate& mc,
                    const Ellipsoid2C& outer);

}  // namespace suitalab
