#include "suitalab/bergman.hpp"

#include <cmath>
#include <numbers>

#include "suitalab/errors.hpp"
#include "suitalab/io.hpp"

namespace suitalab {

namespace {
constexpr double kPi = std::numbers::pi;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}
}  // namespace

double kernel_ball(int n, const CVec& z) {
    if (z.dim() != n) throw std::invalid_argument("kernel_ball: dimension mismatch");
    double r2 = z.norm_sq();
    if (r2 >= 1.0) throw std::domain_error("kernel_ball: point outside the unit ball");
    return factorial(n) / std::pow(kPi, n) * std::pow(1.0 - r2, -(n + 1.0));
}

double kernel_egg_axis(double mu, double p) {
    if (!(mu > 0.0)) throw std::invalid_argument("kernel_egg_axis: mu must be positive");
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("kernel_egg_axis: p must lie in [0, 1)");
    double w = 1.0 - p * p;
    return (mu - 1.0) / (kPi * kPi * mu) / (w * w) + 2.0 / (kPi * kPi * mu) / (w * w * w);
}

double kernel_siegel(int n, const CVec& z) {
    if (z.dim() != n) throw std::invalid_argument("kernel_siegel: dimension mismatch");
    double rho = 2.0 * z.last().real();
    for (int i = 0; i < n - 1; ++i) rho += std::norm(z[i]);
    if (rho >= 0.0) throw std::domain_error("kernel_siegel: point outside the domain");
    return factorial(n) / std::pow(kPi, n) * std::pow(-rho, -(n + 1.0));
}

double log_moment(const DomainSpec& spec, int a1, int a2) {
    // m_alpha = integral over the domain of |z1|^{2 a1} |z2|^{2 a2}.
    switch (spec.variant()) {
        case DomainSpec::Variant::ball:
            // pi^2 a1! a2! / (a1 + a2 + 2)!
            return 2.0 * std::log(kPi) + std::lgamma(a1 + 1.0) + std::lgamma(a2 + 1.0) -
                   std::lgamma(a1 + a2 + 3.0);
        case DomainSpec::Variant::egg: {
            // radial reduction to a Beta integral:
            // pi^2/(a2+1) * Gamma(a1+1) Gamma((a2+1)/mu + 1) / Gamma(a1 + (a2+1)/mu + 2)
            double s = (a2 + 1.0) / spec.mu();
            return 2.0 * std::log(kPi) - std::log(a2 + 1.0) + std::lgamma(a1 + 1.0) +
                   std::lgamma(s + 1.0) - std::lgamma(a1 + s + 2.0);
        }
        default:
            throw capability_error("log_moment: bounded complete Reinhardt variants only");
    }
}

SeriesValue reinhardt_kernel(const DomainSpec& spec, const CVec& z, int max_degree) {
    if (spec.variant() != DomainSpec::Variant::ball && spec.variant() != DomainSpec::Variant::egg)
        throw capability_error("reinhardt_kernel: bounded complete Reinhardt variants only");
    if (spec.dim() != 2 || z.dim() != 2)
        throw std::invalid_argument("reinhardt_kernel: implemented in C^2");
    if (!spec.contains(z)) throw std::domain_error("reinhardt_kernel: point outside the domain");
    if (max_degree < 0) throw std::invalid_argument("reinhardt_kernel: negative degree");

    double l1 = std::log(std::abs(z[0]));  // -inf at 0 is fine below
    double l2 = std::log(std::abs(z[1]));
    double sum = 0.0;
    double last_degree_sum = 0.0;
    for (int deg = 0; deg <= max_degree; ++deg) {
        double dsum = 0.0;
        for (int a1 = 0; a1 <= deg; ++a1) {
            int a2 = deg - a1;
            if (a1 > 0 && std::abs(z[0]) == 0.0) continue;
            if (a2 > 0 && std::abs(z[1]) == 0.0) continue;
            double lt = -log_moment(spec, a1, a2);
            if (a1 > 0) lt += 2.0 * a1 * l1;
            if (a2 > 0) lt += 2.0 * a2 * l2;
            dsum += std::exp(lt);
        }
        sum += dsum;
        last_degree_sum = dsum;
    }
    SeriesValue out;
    out.value = sum;
    out.last_increment_ratio = (sum > 0.0) ? last_degree_sum / sum : 0.0;
    out.converged = out.last_increment_ratio <= 1e-3;
    return out;
}

KernelOracle KernelOracle::closed_form(const DomainSpec& spec) {
    switch (spec.variant()) {
        case DomainSpec::Variant::ball: {
            int n = spec.dim();
            return KernelOracle(n, [n](const CVec& z) { return kernel_ball(n, z); });
        }
        case DomainSpec::Variant::egg: {
            double mu = spec.mu();
            return KernelOracle(2, [mu](const CVec& z) {
                if (std::abs(z[0]) != 0.0)
                    throw capability_error(
                        "kernel oracle: egg closed form is available on the axis (0, z2) only");
                return kernel_egg_axis(mu, std::abs(z[1]));
            });
        }
        case DomainSpec::Variant::siegel: {
            int n = spec.dim();
            return KernelOracle(n, [n](const CVec& z) { return kernel_siegel(n, z); });
        }
        case DomainSpec::Variant::scaled: {
            KernelOracle base = closed_form(spec.base());
            return pullback(spec.to_base(), base);
        }
    }
    throw std::logic_error("KernelOracle: unreachable");
}

KernelOracle KernelOracle::reinhardt_series(const DomainSpec& spec, int max_degree) {
    return KernelOracle(spec.dim(), [spec, max_degree](const CVec& z) {
        return reinhardt_kernel(spec, z, max_degree).value;
    });
}

KernelOracle KernelOracle::pullback(const HoloMap& to_base, const KernelOracle& base) {
    if (to_base.dim() != base.dim())
        throw std::invalid_argument("KernelOracle::pullback: dimension mismatch");
    return KernelOracle(base.dim(), [to_base, base](const CVec& z) {
        double d = std::norm(to_base.jacobian_det(z));
        return base(to_base(z)) * d;
    });
}

double KernelOracle::operator()(const CVec& z) const {
    if (z.dim() != n_) throw std::invalid_argument("KernelOracle: dimension mismatch");
    return eval_(z);
}

ConvergenceTable ramadanov_run(const std::vector<std::pair<int, KernelOracle>>& sequence,
                               const KernelOracle& limit, const CVec& w,
                               const RamadanovOptions& opts) {
    ConvergenceTable table;
    double limit_value = limit(w);
    double bound = opts.omega0 ? (*opts.omega0)(w) : 0.0;
    for (const auto& [j, oracle] : sequence) {
        double kj = oracle(w);
        ConvergenceRow row{j, kj, limit_value, std::abs(kj - limit_value)};
        if (opts.omega0 && kj > bound + 1e-12) table.bound_satisfied = false;
        table.rows.push_back(row);
    }
    if (!table.rows.empty()) {
        table.final_abs_err = table.rows.back().abs_err;
        table.converged = table.final_abs_err <= opts.tolerance;
    }
    return table;
}

void ConvergenceTable::write_csv(std::ostream& os, const nlohmann::json& config) const {
    CsvWriter csv(os, config, {"j", "kernel", "limit", "abs_err"});
    for (const auto& r : rows)
        csv.row({static_cast<double>(r.j), r.kernel, r.limit, r.abs_err});
}

}  // namespace suitalab
