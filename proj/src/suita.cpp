#include "suitalab/suita.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "suitalab/errors.hpp"
#include "suitalab/io.hpp"

namespace suitalab {

namespace {
constexpr double kPi = std::numbers::pi;

MetricOracle model_oracle(const DomainSpec& spec, const CVec& z, MetricTag tau) {
    auto kind = (tau == MetricTag::kobayashi) ? MetricOracle::Kind::kobayashi
                                              : MetricOracle::Kind::caratheodory;
    switch (spec.variant()) {
        case DomainSpec::Variant::ball:
            return MetricOracle::ball_at(z, kind);
        case DomainSpec::Variant::siegel:
            return MetricOracle::siegel_at(z, kind);
        case DomainSpec::Variant::egg: {
            if (z.norm() != 0.0)
                throw capability_error(
                    "metric oracle: egg metrics are exact at the origin only; points (0, p) "
                    "carry closed-form brackets via egg_f_bounds");
            return MetricOracle::gauge(spec);
        }
        default:
            throw capability_error("metric oracle: unsupported domain variant");
    }
}
}  // namespace

std::string metric_tag_name(MetricTag tag) {
    return tag == MetricTag::kobayashi ? "k" : "c";
}

double SuitaResult::volume_value() const {
    if (exact_volume) return *exact_volume;
    if (mc_estimate) return mc_estimate->value;
    return 0.0;
}

double SuitaResult::volume_sigma() const {
    return mc_estimate ? mc_estimate->std_error : 0.0;
}

nlohmann::json SuitaResult::to_json() const {
    nlohmann::json j;
    j["kernel"] = kernel;
    if (exact_volume) j["indicatrix_volume"] = *exact_volume;
    if (mc_estimate) j["indicatrix_volume_mc"] = mc_estimate->to_json();
    j["F"] = F;
    j["F_error"] = F_error;
    j["tau"] = metric_tag_name(tau);
    j["notes"] = notes;
    return j;
}

SuitaResult suita_invariant(const DomainSpec& spec, const CVec& z, MetricTag tau,
                            const Method& method) {
    if (z.dim() != spec.dim())
        throw std::invalid_argument("suita_invariant: point dimension mismatch");
    if (!spec.contains(z)) throw std::domain_error("suita_invariant: point outside the domain");

    SuitaResult res;
    res.tau = tau;

    double kernel = 0.0;
    std::string kernel_note;
    switch (spec.variant()) {
        case DomainSpec::Variant::ball:
            kernel = kernel_ball(spec.dim(), z);
            kernel_note = "kernel=ball_closed_form";
            break;
        case DomainSpec::Variant::siegel:
            kernel = kernel_siegel(spec.dim(), z);
            kernel_note = "kernel=siegel_closed_form";
            break;
        case DomainSpec::Variant::egg: {
            if (std::abs(z[0]) != 0.0)
                throw capability_error(
                    "suita_invariant: egg supported on the axis only; available combinations: "
                    "ball (any z), siegel (any z), egg at the origin; egg at (0, p) is reported "
                    "as a bracket by egg_f_bounds");
            if (std::abs(z[1]) != 0.0)
                throw capability_error(
                    "suita_invariant: egg points (0, p) with p != 0 have no exact indicatrix; "
                    "use egg_f_bounds for the closed-form bracket");
            kernel = kernel_egg_axis(spec.mu(), 0.0);
            kernel_note = "kernel=egg_axis_closed_form";
            break;
        }
        default:
            throw capability_error(
                "suita_invariant: unsupported domain; available: ball, siegel, egg(origin)");
    }
    res.kernel = kernel;

    MetricOracle oracle = model_oracle(spec, z, tau);
    if (method.type == Method::Type::exact) {
        std::optional<double> vol;
        if (spec.variant() == DomainSpec::Variant::egg)
            vol = spec.volume();  // indicatrix at a Reinhardt origin is the domain itself
        else
            vol = oracle.exact_indicatrix_volume();
        if (!vol)
            throw capability_error(
                "suita_invariant: no exact indicatrix volume for this combination; use mc");
        res.exact_volume = *vol;
        res.F = kernel * *vol;
        res.F_error = 0.0;
        res.notes = kernel_note + ";volume=exact";
    } else {
        VolumeEstimate est = mc_volume(oracle, method.N, method.seed);
        res.mc_estimate = est;
        res.F = kernel * est.value;
        res.F_error = kernel * est.std_error;
        res.notes = kernel_note + ";volume=mc";
    }
    return res;
}

BoundPair egg_f_bounds(double mu, double p) {
    if (!(mu > 0.0 && mu < 0.5))
        throw capability_error("egg_f_bounds: requires 0 < mu < 1/2");
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("egg_f_bounds: p must lie in [0, 1)");
    double p2mu = std::pow(p, 2.0 * mu);
    double upper = (1.0 / mu) * (1.0 - p2mu) / (1.0 - p * p) -
                   (1.0 - mu) / (2.0 * mu) * (1.0 - p2mu);
    double lower = 0.0;
    if (p > 0.0) {
        double ratio = (1.0 - p2mu) / (1.0 - p * p);
        lower = std::pow(p, 2.0 - 2.0 * mu) / (2.0 * mu * mu * mu) * ratio * ratio * ratio *
                (1.0 + mu + p * p - mu * p * p);
    }
    return BoundPair{lower, upper, mu, p};
}

ConsistencyReport bound_consistency(double mu, double p, const SuitaResult& mc_result) {
    BoundPair b = egg_f_bounds(mu, p);
    ConsistencyReport rep{};
    rep.mu = mu;
    rep.p = p;
    rep.lower = b.lower;
    rep.upper = b.upper;
    rep.F = mc_result.F;
    rep.F_sigma = mc_result.F_error;
    rep.lower_ok = b.lower <= rep.F + 3.0 * rep.F_sigma;
    rep.upper_ok = rep.F - 3.0 * rep.F_sigma <= b.upper;
    return rep;
}

ConvexBoundReport convex_bound_check(const DomainSpec& spec, const CVec& z,
                                     const SuitaResult& result, bool c_convex) {
    ConvexBoundReport rep;
    bool convex = spec.variant() == DomainSpec::Variant::ball ||
                  (spec.variant() == DomainSpec::Variant::egg && spec.mu() >= 0.5);
    (void)z;
    if (convex) {
        rep.applicable = true;
        rep.C = 4.0;
    } else if (c_convex) {
        rep.applicable = true;
        rep.C = 16.0;
    } else {
        rep.applicable = false;
        rep.note = "convexity hypothesis not met; sandwich inapplicable";
        return rep;
    }
    double n = spec.dim();
    rep.upper = std::pow(rep.C, n);
    double sigma = result.F_error;
    rep.passed = (1.0 - 3.0 * sigma <= result.F) && (result.F <= rep.upper + 3.0 * sigma);
    return rep;
}

std::vector<BoundaryScanRow> boundary_limit_scan(const DomainSpec& spec, const CVec& target,
                                                 const std::vector<CVec>& points, MetricTag tau,
                                                 const Method& method) {
    std::vector<BoundaryScanRow> rows;
    rows.reserve(points.size());
    for (const auto& z : points) {
        BoundaryScanRow row;
        row.dist = dist(z, target);
        if (spec.variant() == DomainSpec::Variant::egg && z.norm() > 0.0) {
            if (std::abs(z[0]) != 0.0 || std::abs(std::imag(z[1])) != 0.0 || z[1].real() <= 0.0)
                throw capability_error("boundary_limit_scan: egg points must lie on (0, p), p > 0");
            BoundPair b = egg_f_bounds(spec.mu(), z[1].real());
            row.F_lower = b.lower;
            row.F_upper = b.upper;
        } else {
            SuitaResult r = suita_invariant(spec, z, tau, method);
            row.F = r.F;
            row.F_err = r.F_error;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<SegmentScanRow> segment_scan(double mu, const std::vector<double>& ps) {
    std::vector<SegmentScanRow> rows;
    rows.reserve(ps.size());
    for (double p : ps) {
        SegmentScanRow row{};
        row.mu = mu;
        row.p = p;
        row.kernel = kernel_egg_axis(mu, p);
        Ellipsoid2C outer = wu_outer_ellipsoid(mu, p);
        row.vol_upper = outer.volume();
        BoundPair b = egg_f_bounds(mu, p);
        row.F_upper = b.upper;
        if (p > 0.0) {
            Ellipsoid2C inner = inscribed_ellipsoid(mu, p);
            row.vol_lower = inner.volume();
            row.F_lower = b.lower;
        }
        rows.push_back(row);
    }
    return rows;
}

void write_segment_csv(std::ostream& os, const std::vector<SegmentScanRow>& rows,
                       const nlohmann::json& config) {
    CsvWriter csv(os, config,
                  {"mu", "p", "kernel", "vol_lower", "vol_upper", "F_lower", "F_upper"});
    for (const auto& r : rows)
        csv.row({r.mu, r.p, r.kernel, r.vol_lower, r.vol_upper, r.F_lower, r.F_upper});
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryScanRow>& rows,
                        const nlohmann::json& config) {
    bool bracket = !rows.empty() && rows.front().F_lower.has_value();
    if (bracket) {
        CsvWriter csv(os, config, {"dist", "F_lower", "F_upper"});
        for (const auto& r : rows) csv.row({r.dist, r.F_lower, r.F_upper});
    } else {
        CsvWriter csv(os, config, {"dist", "F", "F_err"});
        for (const auto& r : rows) csv.row({r.dist, r.F, r.F_err});
    }
}

nlohmann::json OrbitReport::to_json() const {
    nlohmann::json j;
    j["mu"] = mu;
    j["supported"] = supported;
    j["contains_one"] = contains_one;
    j["upper_at_origin_limit"] = upper_at_origin_limit;
    j["sup_lower"] = sup_lower;
    j["sup_lower_p"] = sup_lower_p;
    j["certified_above_one"] = certified_above_one;
    j["summary"] = summary;
    return j;
}

OrbitReport orbit_value_note(double mu, const std::vector<double>& ps) {
    if (!(mu > 0.0)) throw std::invalid_argument("orbit_value_note: mu must be positive");
    OrbitReport rep;
    rep.mu = mu;
    if (mu >= 0.5) {
        rep.supported = false;
        rep.summary =
            "convex egg: exact closed forms exist elsewhere and are not computed by this tool";
        return rep;
    }
    rep.supported = true;
    rep.contains_one = true;  // F = 1 at the origin of any complete Reinhardt domain
    rep.upper_at_origin_limit = (1.0 + mu) / (2.0 * mu);
    double sup_lower = 0.0, sup_lower_p = 0.0;
    for (double p : ps) {
        if (!(p > 0.0)) continue;
        BoundPair b = egg_f_bounds(mu, p);
        if (b.lower > sup_lower) {
            sup_lower = b.lower;
            sup_lower_p = p;
        }
    }
    rep.sup_lower = sup_lower;
    rep.sup_lower_p = sup_lower_p;
    rep.certified_above_one = sup_lower > 1.0 + 1e-9;
    std::ostringstream os;
    os << "Values of F on the representative segment are attained in every neighborhood of a "
          "non-strongly-pseudoconvex boundary point; F(origin) = 1 exactly. ";
    if (rep.certified_above_one) {
        os << "The bracket certifies F > 1 near p = " << sup_lower_p
           << " (lower bound " << sup_lower
           << "), so the boundary limit cannot exist at those points.";
    } else {
        os << "No bracket on the scanned grid certifies a value away from 1 "
              "(sup of lower bounds: "
           << sup_lower << "); non-existence of the limit is suggested by the upper bounds near "
              "p = 0 but not proven by bracket arithmetic alone.";
    }
    rep.summary = os.str();
    return rep;
}

}  // namespace suitalab
