#include "suitalab/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "suitalab/errors.hpp"
#include "suitalab/indicatrix.hpp"
#include "suitalab/io.hpp"

namespace suitalab {

namespace {

// Outward unit normal at a boundary point: nu = conj(grad rho)/|grad rho| as
// a real vector in C^n.
CVec outward_normal(const DomainSpec& spec, const CVec& zeta) {
    CVec g = spec.gradient(zeta);
    double gn = g.norm();
    if (!(gn > 0.0)) throw capability_error("outward_normal: vanishing gradient");
    CVec nu(g.dim());
    for (int i = 0; i < g.dim(); ++i) nu[i] = std::conj(g[i]) / gn;
    return nu;
}

// Nearest boundary point to an interior point of a model domain.  Ball:
// radial projection.  Egg: supported for points (0, t) near (0, 1), where the
// nearest point is (0, 1) itself as long as the endpoint is optimal; when an
// off-axis circle of equidistant boundary points is closer, the nearest point
// is not unique and the step is rejected.
CVec nearest_boundary_point(const DomainSpec& spec, const CVec& p) {
    switch (spec.variant()) {
        case DomainSpec::Variant::ball: {
            double r = p.norm();
            if (!(r > 0.0))
                throw capability_error("nearest_boundary_point: ambiguous at the center");
            return cdouble{1.0 / r, 0.0} * p;
        }
        case DomainSpec::Variant::egg: {
            if (std::abs(p[0]) != 0.0 || std::abs(std::imag(p[1])) != 0.0 || p[1].real() <= 0.0)
                throw capability_error(
                    "nearest_boundary_point: egg supported on the axis (0, t), t > 0 only");
            double t = p[1].real();
            double mu = spec.mu();
            // distance^2 to boundary points (x, s), x^2 = 1 - s^{2 mu}:
            // g(s) = 1 - s^{2 mu} + (s - t)^2 on (0, 1]; endpoint s = 1 is the
            // minimum iff g'(s) < 0 throughout, i.e. s - t - mu s^{2mu-1} < 0.
            double endpoint = (1.0 - t) * (1.0 - t);
            const int grid = 4096;
            for (int i = 1; i < grid; ++i) {
                double s = static_cast<double>(i) / grid;
                double g = 1.0 - std::pow(s, 2.0 * mu) + (s - t) * (s - t);
                if (g < endpoint - 1e-12)
                    throw capability_error(
                        "nearest_boundary_point: nearest point not unique at this distance "
                        "(off-axis circle closer than (0,1)); use a smaller approach step");
            }
            CVec zeta(2);
            zeta[1] = 1.0;
            return zeta;
        }
        default:
            throw capability_error("nearest_boundary_point: ball and egg only");
    }
}

void require_ball(const ScalingSequence& seq, const char* who) {
    if (seq.spec.variant() != DomainSpec::Variant::ball)
        throw capability_error(std::string(who) +
                               ": exact pullback data exists for ball sequences only");
}

const ScalingStep& step_at(const ScalingSequence& seq, int j) {
    for (const auto& s : seq.steps)
        if (s.j == j) return s;
    throw std::out_of_range("scaling: no step with this index");
}

}  // namespace

ScalingSequence build_sequence(const DomainSpec& spec, const CVec& p0, int count, double rate) {
    if (!(rate > 0.0 && rate < 1.0))
        throw std::invalid_argument("build_sequence: rate must lie in (0, 1)");
    if (count < 1) throw std::invalid_argument("build_sequence: count must be >= 1");
    if (std::abs(spec.defining_value(p0)) > 1e-10)
        throw std::invalid_argument("build_sequence: p0 must lie on the boundary");
    if (!(levi_min_eigenvalue(spec, p0) > 1e-10))
        throw capability_error("build_sequence: p0 is not strongly pseudoconvex");

    ScalingSequence seq{spec, p0, rate, {}};
    CVec nu = outward_normal(spec, p0);
    for (int j = 1; j <= count; ++j) {
        double step = std::pow(rate, j);
        CVec p_j = p0 - cdouble{step, 0.0} * nu;
        if (!spec.contains(p_j))
            throw capability_error("build_sequence: approach point escaped the domain");
        CVec zeta_j = nearest_boundary_point(spec, p_j);
        PinchukData norm = pinchuk_normalize(spec, zeta_j);
        CVec image = norm.normalization(p_j);
        // phi_j(p_j) = ('0, -delta_j) exactly; delta_j is the normal distance
        double delta_j = -image.last().real();
        if (!(delta_j > 0.0) || image.prime().norm() > 1e-10 ||
            std::abs(image.last().imag()) > 1e-10)
            throw std::logic_error("build_sequence: normalization did not map p_j to ('0, -d)");
        HoloMap T_j = HoloMap::dilation(delta_j, spec.dim());
        HoloMap composite = HoloMap::compose({norm.normalization, T_j});
        seq.steps.push_back(ScalingStep{j, p_j, zeta_j, delta_j, norm.normalization, T_j,
                                        composite});
    }
    return seq;
}

bool scaled_contains(const ScalingSequence& seq, int j, const CVec& z) {
    const ScalingStep& s = step_at(seq, j);
    return seq.spec.contains(s.composite.inverse()(z));
}

MetricOracle scaled_metric(const ScalingSequence& seq, int j, const CVec& z, MetricTag tau) {
    require_ball(seq, "scaled_metric");
    const ScalingStep& s = step_at(seq, j);
    HoloMap back = s.composite.inverse();
    auto kind = (tau == MetricTag::kobayashi) ? MetricOracle::Kind::kobayashi
                                              : MetricOracle::Kind::caratheodory;
    MetricOracle base = MetricOracle::ball_at(back(z), kind);
    return pullback_metric(base, back, z);
}

double scaled_kernel(const ScalingSequence& seq, int j, const CVec& z) {
    require_ball(seq, "scaled_kernel");
    const ScalingStep& s = step_at(seq, j);
    KernelOracle oracle =
        KernelOracle::pullback(s.composite.inverse(), KernelOracle::closed_form(seq.spec));
    return oracle(z);
}

SuitaResult scaled_invariants(const ScalingSequence& seq, int j, MetricTag tau,
                              const Method& method) {
    require_ball(seq, "scaled_invariants");
    CVec p_star(seq.spec.dim());
    p_star[seq.spec.dim() - 1] = -1.0;

    SuitaResult res;
    res.tau = tau;
    res.kernel = scaled_kernel(seq, j, p_star);
    MetricOracle oracle = scaled_metric(seq, j, p_star, tau);
    if (method.type == Method::Type::exact) {
        auto vol = oracle.exact_indicatrix_volume();
        if (!vol)
            throw capability_error("scaled_invariants: pulled-back indicatrix is not an ellipsoid");
        res.exact_volume = *vol;
        res.F = res.kernel * *vol;
        res.F_error = 0.0;
        res.notes = "kernel=pullback;volume=ellipsoid";
    } else {
        VolumeEstimate est = mc_volume(oracle, method.N, method.seed);
        res.mc_estimate = est;
        res.F = res.kernel * est.value;
        res.F_error = res.kernel * est.std_error;
        res.notes = "kernel=pullback;volume=mc";
    }
    return res;
}

std::vector<ConvergenceReportRow> convergence_report(const ScalingSequence& seq, MetricTag tau,
                                                     std::int64_t N, std::uint64_t seed,
                                                     int n_dirs) {
    require_ball(seq, "convergence_report");
    int n = seq.spec.dim();
    CVec p_star(n);
    p_star[n - 1] = -1.0;
    double limit_kernel = kernel_siegel(n, p_star);
    MetricOracle limit_metric = MetricOracle::siegel_at(p_star);

    std::vector<ConvergenceReportRow> rows;
    rows.reserve(seq.steps.size());
    for (const auto& s : seq.steps) {
        SuitaResult r = scaled_invariants(seq, s.j, tau, Method::mc(N, seed + s.j));
        ConvergenceReportRow row;
        row.j = s.j;
        row.delta = s.delta_j;
        row.kernel = r.kernel;
        row.kernel_err_abs = std::abs(r.kernel - limit_kernel);
        row.vol = r.mc_estimate->value;
        row.vol_sigma = r.mc_estimate->std_error;
        row.F = r.F;
        row.F_sigma = r.F_error;
        row.radial_dist =
            radial_distance(scaled_metric(seq, s.j, p_star, tau), limit_metric, n_dirs);
        rows.push_back(row);
    }
    return rows;
}

void write_report_csv(std::ostream& os, const std::vector<ConvergenceReportRow>& rows,
                      const nlohmann::json& config) {
    CsvWriter csv(os, config,
                  {"j", "delta", "kernel", "kernel_err_abs", "vol", "vol_sigma", "F", "F_sigma",
                   "radial_dist"});
    for (const auto& r : rows)
        csv.row({static_cast<double>(r.j), r.delta, r.kernel, r.kernel_err_abs, r.vol,
                 r.vol_sigma, r.F, r.F_sigma, r.radial_dist});
}

}  // namespace suitalab
