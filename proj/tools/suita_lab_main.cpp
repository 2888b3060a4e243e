#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suitalab/bergman.hpp"
#include "suitalab/domain.hpp"
#include "suitalab/errors.hpp"
#include "suitalab/indicatrix.hpp"
#include "suitalab/io.hpp"
#include "suitalab/metric.hpp"
#include "suitalab/scaling.hpp"
#include "suitalab/suita.hpp"

namespace {

using namespace suitalab;

constexpr const char* kToolVersion = "0.1.0";

// "0,-1" or "0.1+0.2i,3-4i": one complex coordinate per comma-separated token
CVec parse_point(const std::string& text) {
    std::vector<cdouble> coords;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw CLI::ValidationError("point", "empty coordinate in '" + text + "'");
        double re = 0.0, im = 0.0;
        std::size_t pos = 0;
        re = std::stod(tok, &pos);
        if (pos < tok.size()) {
            std::string rest = tok.substr(pos);
            if (rest.back() == 'i' || rest.back() == 'j') {
                rest.pop_back();
                im = rest.empty() || rest == "+" ? 1.0 : (rest == "-" ? -1.0 : std::stod(rest));
            } else {
                throw CLI::ValidationError("point", "cannot parse coordinate '" + tok + "'");
            }
        }
        coords.emplace_back(re, im);
    }
    CVec z(static_cast<int>(coords.size()));
    for (int i = 0; i < z.dim(); ++i) z[i] = coords[i];
    return z;
}

// "a:step:b" inclusive grid, or a plain comma list
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::stringstream ss(text);
        std::string a, s, b;
        std::getline(ss, a, ':');
        std::getline(ss, s, ':');
        std::getline(ss, b, ':');
        double lo = std::stod(a), step = std::stod(s), hi = std::stod(b);
        if (!(step > 0.0)) throw CLI::ValidationError("grid", "step must be positive");
        for (double x = lo; x <= hi + 0.5 * step; x += step) out.push_back(x);
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

DomainSpec make_domain(const std::string& name, int n, double mu) {
    if (name == "ball") return DomainSpec::ball(n);
    if (name == "egg") return DomainSpec::egg(mu);
    if (name == "siegel") return DomainSpec::siegel(n);
    throw CLI::ValidationError("domain", "unknown domain '" + name + "'");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
}

struct EvalArgs {
    std::string domain = "ball";
    int n = 2;
    double mu = 0.25;
    std::string z = "0,0";
    std::string tau = "k";
    std::string method = "exact";
    std::int64_t N = 1'000'000;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_eval(const EvalArgs& a) {
    DomainSpec spec = make_domain(a.domain, a.n, a.mu);
    CVec z = parse_point(a.z);
    MetricTag tau = a.tau == "c" ? MetricTag::caratheodory : MetricTag::kobayashi;

    nlohmann::json config{{"tool_version", kToolVersion}, {"command", "eval"}, {"domain", a.domain}, {"z", a.z},
                          {"tau", a.tau},      {"method", a.method}};
    if (a.domain == "egg") config["mu"] = a.mu;

    // Egg points (0, p), p != 0: closed-form bracket instead of a point value.
    if (spec.variant() == DomainSpec::Variant::egg && z.norm() > 0.0) {
        if (std::abs(z[0]) != 0.0 || std::abs(std::imag(z[1])) != 0.0 || z[1].real() <= 0.0)
            throw capability_error(
                "eval: egg evaluation is available at the origin and on the segment (0, p), "
                "p in (0, 1), only");
        double p = z[1].real();
        BoundPair b = egg_f_bounds(a.mu, p);
        nlohmann::json j{{"config", config},
                         {"kernel", kernel_egg_axis(a.mu, p)},
                         {"F_lower", b.lower},
                         {"F_upper", b.upper},
                         {"bracket", true}};
        write_text(a.out, j.dump(2) + "\n");
        return 0;
    }

    Method method = Method::exact();
    if (a.method == "mc") {
        if (!a.seed) throw CLI::ValidationError("--seed", "required for stochastic runs");
        method = Method::mc(a.N, *a.seed);
        config["N"] = a.N;
        config["seed"] = *a.seed;
    }
    SuitaResult r = suita_invariant(spec, z, tau, method);
    nlohmann::json j = r.to_json();
    j["config"] = config;
    write_text(a.out, j.dump(2) + "\n");
    return 0;
}

struct EggBoundsArgs {
    std::string mu = "0.1,0.2,0.3,0.4,0.49";
    std::string p = "0.05:0.05:0.95";
    std::string out;
};

int run_egg_bounds(const EggBoundsArgs& a) {
    std::vector<double> mus = parse_grid(a.mu);
    std::vector<double> ps = parse_grid(a.p);
    nlohmann::json config{{"tool_version", kToolVersion}, {"command", "egg-bounds"}, {"mu", a.mu}, {"p", a.p}};
    std::vector<SegmentScanRow> rows;
    for (double mu : mus) {
        for (double p : ps) {
            if (!(mu > 0.0 && mu < 0.5)) {
                // hypothesis fails: bounds inapplicable, kernel still defined
                SegmentScanRow r{};
                r.mu = mu;
                r.p = p;
                r.kernel = kernel_egg_axis(mu, p);
                r.vol_upper = std::numeric_limits<double>::quiet_NaN();
                r.F_upper = std::numeric_limits<double>::quiet_NaN();
                rows.push_back(r);
                continue;
            }
            auto scan = segment_scan(mu, {p});
            rows.push_back(scan.front());
        }
    }
    std::ostringstream os;
    CsvWriter csv(os, config,
                  {"mu", "p", "kernel", "vol_lower", "vol_upper", "F_lower", "F_upper"});
    for (const auto& r : rows) {
        auto opt = [](double x) -> std::optional<double> {
            return std::isnan(x) ? std::nullopt : std::optional<double>(x);
        };
        csv.row({r.mu, r.p, r.kernel, r.vol_lower, opt(r.vol_upper), r.F_lower, opt(r.F_upper)});
    }
    write_text(a.out, os.str());
    return 0;
}

struct ScalingArgs {
    std::string domain = "ball";
    double mu = 0.25;
    std::string p0 = "0,1";
    double rate = 0.5;
    int j_max = 15;
    std::int64_t N = 1'000'000;
    std::optional<std::uint64_t> seed;
    int n_dirs = 4096;
    std::string tau = "k";
    std::string out;
};

int run_scaling(const ScalingArgs& a) {
    if (!a.seed) throw CLI::ValidationError("--seed", "required for stochastic runs");
    DomainSpec spec = make_domain(a.domain, 2, a.mu);
    ScalingSequence seq = build_sequence(spec, parse_point(a.p0), a.j_max, a.rate);
    MetricTag tau = a.tau == "c" ? MetricTag::caratheodory : MetricTag::kobayashi;
    auto rows = convergence_report(seq, tau, a.N, *a.seed, a.n_dirs);

    nlohmann::json config{{"tool_version", kToolVersion}, {"command", "scaling-run"}, {"domain", a.domain}, {"p0", a.p0},
                          {"rate", a.rate},           {"j_max", a.j_max},   {"N", a.N},
                          {"seed", *a.seed},          {"n_dirs", a.n_dirs}, {"tau", a.tau}};
    std::ostringstream os;
    write_report_csv(os, rows, config);
    write_text(a.out, os.str());
    return 0;
}

struct RamadanovArgs {
    std::string family = "inflate-ball";
    int j_max = 50;
    std::string w = "0,0";
    double tol = 1e-3;
    std::string out;
};

int run_ramadanov(const RamadanovArgs& a) {
    DomainSpec ball = DomainSpec::ball(2);
    KernelOracle limit = KernelOracle::closed_form(ball);
    std::vector<std::pair<int, KernelOracle>> seq;
    RamadanovOptions opts;
    opts.tolerance = a.tol;
    if (a.family == "inflate-ball") {
        // Omega_j = (1 + 1/j) ball; map onto the ball is division by the factor
        for (int j = 1; j <= a.j_max; ++j) {
            double r = 1.0 + 1.0 / j;
            seq.emplace_back(j, KernelOracle::pullback(
                                    HoloMap::homothety(CVec::zero(2), 1.0 / r), limit));
        }
        opts.omega0 = KernelOracle::pullback(HoloMap::homothety(CVec::zero(2), 2.0), limit);
    } else if (a.family == "translate-ball") {
        // Omega_j = ball + v/j with v = (0, 1); rows start at j = 2 so the
        // default w = 0 is interior
        CVec v(2);
        v[1] = 1.0;
        for (int j = 2; j <= a.j_max; ++j) {
            CVec shift = cdouble{-1.0 / j, 0.0} * v;
            seq.emplace_back(j, KernelOracle::pullback(HoloMap::translation(shift), limit));
        }
        opts.omega0 = KernelOracle::pullback(HoloMap::homothety(CVec::zero(2), 1.0 / 0.4), limit);
    } else {
        throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
    }
    ConvergenceTable table = ramadanov_run(seq, limit, parse_point(a.w), opts);

    nlohmann::json config{{"tool_version", kToolVersion}, {"command", "ramadanov"}, {"family", a.family}, {"j_max", a.j_max},
                          {"w", a.w},               {"tol", a.tol}};
    std::ostringstream os;
    table.write_csv(os, config);
    write_text(a.out, os.str());
    if (!table.converged || !table.bound_satisfied) {
        std::cerr << "ramadanov: convergence checks failed (final abs_err "
                  << format_double(table.final_abs_err) << ")\n";
        return 1;
    }
    return 0;
}

struct IndicatrixArgs {
    std::string oracle = "ball";
    std::string z = "0,0";
    double mu = 0.25;
    double p = 0.5;
    std::int64_t N = 1'000'000;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_indicatrix(const IndicatrixArgs& a) {
    if (!a.seed) throw CLI::ValidationError("--seed", "required for stochastic runs");
    MetricOracle oracle = [&] {
        if (a.oracle == "ball") return MetricOracle::ball_at(parse_point(a.z));
        if (a.oracle == "siegel") return MetricOracle::siegel_at(parse_point(a.z));
        if (a.oracle == "egg-gauge") return MetricOracle::gauge(DomainSpec::egg(a.mu));
        if (a.oracle == "wu")
            return MetricOracle::ellipsoid(wu_outer_ellipsoid(a.mu, a.p),
                                           MetricOracle::Provenance::outer_bound);
        if (a.oracle == "inscribed")
            return MetricOracle::ellipsoid(inscribed_ellipsoid(a.mu, a.p),
                                           MetricOracle::Provenance::inner_bound);
        throw CLI::ValidationError("--oracle", "unknown oracle '" + a.oracle + "'");
    }();
    VolumeEstimate est = mc_volume(oracle, a.N, *a.seed);
    nlohmann::json config{{"tool_version", kToolVersion}, {"command", "indicatrix"}, {"oracle", a.oracle}, {"z", a.z},
                          {"mu", a.mu},              {"p", a.p},           {"N", a.N},
                          {"seed", *a.seed}};
    nlohmann::json j = est.to_json();
    j["config"] = config;
    write_text(a.out, j.dump(2) + "\n");
    return 0;
}

struct SegmentScanArgs {
    double mu = 0.25;
    std::string p = "0.05:0.05:0.95";
    std::string out;
    std::string report_out;
};

int run_segment_scan(const SegmentScanArgs& a) {
    std::vector<double> ps = parse_grid(a.p);
    auto rows = segment_scan(a.mu, ps);
    nlohmann::json config{{"tool_version", kToolVersion}, {"command", "segment-scan"}, {"mu", a.mu}, {"p", a.p}};
    std::ostringstream os;
    write_segment_csv(os, rows, config);
    write_text(a.out, os.str());

    OrbitReport rep = orbit_value_note(a.mu, ps);
    nlohmann::json rj = rep.to_json();
    rj["config"] = config;
    if (a.report_out.empty())
        std::cerr << rj.dump(2) << "\n";
    else
        write_text(a.report_out, rj.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Bergman kernels, invariant metrics and the product "
                 "F = K * indicatrix volume on model domains in C^2"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate F at a point");
    eval->add_option("--domain", ev.domain, "ball|egg|siegel")->required();
    eval->add_option("--n", ev.n, "complex dimension (ball/siegel)");
    eval->add_option("--mu", ev.mu, "egg exponent");
    eval->add_option("--z", ev.z, "point, comma-separated complex coordinates")->required();
    eval->add_option("--tau", ev.tau, "metric: k|c");
    eval->add_option("--method", ev.method, "exact|mc");
    eval->add_option("--N", ev.N, "Monte Carlo sample count");
    eval->add_option("--seed", ev.seed, "RNG seed (required for mc)");
    eval->add_option("--out", ev.out, "output file (default stdout)");

    EggBoundsArgs eb;
    auto* eggb = app.add_subcommand("egg-bounds", "closed-form F brackets over a (mu, p) grid");
    eggb->add_option("--mu", eb.mu, "mu grid (comma list or a:step:b)");
    eggb->add_option("--p", eb.p, "p grid (comma list or a:step:b)");
    eggb->add_option("--out", eb.out, "output CSV (default stdout)");

    ScalingArgs sc;
    auto* scal = app.add_subcommand("scaling-run", "boundary scaling convergence report");
    scal->add_option("--domain", sc.domain, "ball (exact pullbacks) ");
    scal->add_option("--mu", sc.mu, "egg exponent (geometry-only sequences)");
    scal->add_option("--p0", sc.p0, "boundary target point");
    scal->add_option("--rate", sc.rate, "approach rate in (0,1)");
    scal->add_option("--j-max", sc.j_max, "number of steps");
    scal->add_option("--N", sc.N, "Monte Carlo samples per step");
    scal->add_option("--seed", sc.seed, "RNG seed (required)");
    scal->add_option("--n-dirs", sc.n_dirs, "directions for the radial distance");
    scal->add_option("--tau", sc.tau, "metric: k|c");
    scal->add_option("--out", sc.out, "output CSV (default stdout)");

    RamadanovArgs ra;
    auto* ram = app.add_subcommand("ramadanov", "kernel stability along a domain sequence");
    ram->add_option("--family", ra.family, "inflate-ball|translate-ball");
    ram->add_option("--j-max", ra.j_max, "last index");
    ram->add_option("--w", ra.w, "evaluation point");
    ram->add_option("--tol", ra.tol, "final absolute error tolerance");
    ram->add_option("--out", ra.out, "output CSV (default stdout)");

    IndicatrixArgs ind;
    auto* indi = app.add_subcommand("indicatrix", "Monte Carlo indicatrix volume");
    indi->add_option("--oracle", ind.oracle, "ball|siegel|egg-gauge|wu|inscribed");
    indi->add_option("--z", ind.z, "base point (ball/siegel oracles)");
    indi->add_option("--mu", ind.mu, "egg exponent");
    indi->add_option("--p", ind.p, "segment parameter (ellipsoid oracles)");
    indi->add_option("--N", ind.N, "sample count");
    indi->add_option("--seed", ind.seed, "RNG seed (required)");
    indi->add_option("--out", ind.out, "output JSON (default stdout)");

    SegmentScanArgs ss;
    auto* seg = app.add_subcommand("segment-scan", "representative-segment table and orbit note");
    seg->add_option("--mu", ss.mu, "egg exponent (0 < mu < 1/2)");
    seg->add_option("--p", ss.p, "p grid");
    seg->add_option("--out", ss.out, "output CSV (default stdout)");
    seg->add_option("--report-out", ss.report_out, "orbit report JSON (default stderr)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(ev);
        if (eggb->parsed()) return run_egg_bounds(eb);
        if (scal->parsed()) return run_scaling(sc);
        if (ram->parsed()) return run_ramadanov(ra);
        if (indi->parsed()) return run_indicatrix(ind);
        if (seg->parsed()) return run_segment_scan(ss);
    } catch (const suitalab::capability_error& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
