#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "suitalab/bergman.hpp"
#include "suitalab/domain.hpp"
#include "suitalab/indicatrix.hpp"
#include "suitalab/metric.hpp"

namespace suitalab {

enum class MetricTag { kobayashi, caratheodory };

std::string metric_tag_name(MetricTag tag);

struct Method {
    enum class Type { exact, mc };
    Type type = Type::exact;
    std::int64_t N = 1'000'000;
    std::uint64_t seed = 0;

    static Method exact() { return Method{}; }
    static Method mc(std::int64_t N, std::uint64_t seed) {
        return Method{Type::mc, N, seed};
    }
};

// F = K_D(z) * lambda(indicatrix), with the kernel exact and the volume
// either exact or Monte Carlo; F_error = kernel * volume std error.
struct SuitaResult {
    double kernel = 0.0;
    std::optional<double> exact_volume;
    std::optional<VolumeEstimate> mc_estimate;
    double F = 0.0;
    double F_error = 0.0;
    MetricTag tau = MetricTag::kobayashi;
    std::string notes;

    double volume_value() const;
    double volume_sigma() const;
    nlohmann::json to_json() const;
};

// Supported exactly: Ball(n) at any interior z, Egg(mu) at 0, Siegel(n) at
// any interior z (tau = k or c everywhere).  Egg points (0,p), p != 0 carry
// no point value; use egg_f_bounds.  Unsupported combinations raise
// capability_error listing what is available.
SuitaResult suita_invariant(const DomainSpec& spec, const CVec& z, MetricTag tau,
                            const Method& method);

// Closed-form bounds for F on the egg segment {(0, p)}, 0 < mu < 1/2:
//   upper = (1/mu)(1-p^{2mu})/(1-p^2) - (1-mu)/(2mu) (1-p^{2mu})
//   lower = p^{2-2mu}/(2mu^3) ((1-p^{2mu})/(1-p^2))^3 (1+mu+p^2-mu p^2)
// p = 0 is allowed for the upper bound only (lower degenerates to 0).
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    double mu = 0.0;
    double p = 0.0;
};

BoundPair egg_f_bounds(double mu, double p);

// Checks an egg-segment Monte Carlo result against the closed-form bracket.
struct ConsistencyReport {
    double mu, p;
    double lower, upper;
    double F, F_sigma;
    bool lower_ok;  // lower <= F + 3 sigma
    bool upper_ok;  // F - 3 sigma <= upper
    bool passed() const { return lower_ok && upper_ok; }
};

ConsistencyReport bound_consistency(double mu, double p, const SuitaResult& mc_result);

// 1 - 3 sigma <= F <= C^n + 3 sigma with C = 4 on convex domains (ball, egg
// with mu >= 1/2); marked inapplicable otherwise.  Callers certifying
// C-convexity of a non-convex spec may pass c_convex = true for C = 16.
struct ConvexBoundReport {
    bool applicable = false;
    double C = 4.0;
    double lower = 1.0;
    double upper = 16.0;
    bool passed = false;
    std::string note;
};

ConvexBoundReport convex_bound_check(const DomainSpec& spec, const CVec& z,
                                     const SuitaResult& result, bool c_convex = false);

// Rows of the approach-to-boundary table: exact F with error for ball-like
// domains, closed-form brackets for eggs.
struct BoundaryScanRow {
    double dist = 0.0;
    std::optional<double> F;
    std::optional<double> F_err;
    std::optional<double> F_lower;
    std::optional<double> F_upper;
};

std::vector<BoundaryScanRow> boundary_limit_scan(const DomainSpec& spec, const CVec& target,
                                                 const std::vector<CVec>& points, MetricTag tau,
                                                 const Method& method);

// One row of the representative-segment table for an egg.
struct SegmentScanRow {
    double mu, p;
    double kernel;
    std::optional<double> vol_lower;
    double vol_upper;
    std::optional<double> F_lower;
    double F_upper;
};

std::vector<SegmentScanRow> segment_scan(double mu, const std::vector<double>& ps);

// header: mu,p,kernel,vol_lower,vol_upper,F_lower,F_upper
void write_segment_csv(std::ostream& os, const std::vector<SegmentScanRow>& rows,
                       const nlohmann::json& config);

// header: dist,F,F_err (exact rows) or dist,F_lower,F_upper (bracket rows)
void write_boundary_csv(std::ostream& os, const std::vector<BoundaryScanRow>& rows,
                        const nlohmann::json& config);

// Documentation-level report over the representative segment: which values
// are certified by the brackets, and whether certified values away from 1
// rule out a boundary limit at the non-strongly-pseudoconvex points (every
// neighborhood of such a point meets every orbit, hence attains all values
// of F on the segment).
struct OrbitReport {
    double mu = 0.0;
    bool supported = false;       // false for mu >= 1/2 (convex case not computed here)
    bool contains_one = true;     // F = 1 at the origin
    double upper_at_origin_limit = 0.0;  // (1+mu)/(2mu), the p -> 0 limit of the upper bound
    double sup_lower = 0.0;
    double sup_lower_p = 0.0;
    bool certified_above_one = false;  // some lower bound strictly exceeds 1
    std::string summary;

    nlohmann::json to_json() const;
};

OrbitReport orbit_value_note(double mu, const std::vector<double>& ps);

}  // namespace suitalab
