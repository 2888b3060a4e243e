#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "suitalab/cvec.hpp"
#include "suitalab/domain.hpp"
#include "suitalab/holomap.hpp"

namespace suitalab {

// Diagonal Bergman kernel of the unit ball: n!/pi^n (1 - |z|^2)^{-(n+1)}.
double kernel_ball(int n, const CVec& z);

// Diagonal kernel of the egg E_{2mu} at the axis point (0, p), 0 <= p < 1:
//   (mu-1)/(pi^2 mu) (1-p^2)^{-2} + 2/(pi^2 mu) (1-p^2)^{-3}.
double kernel_egg_axis(double mu, double p);

// Diagonal kernel of {2 Re z_n + |'z|^2 < 0}: n!/pi^n (-rho(z))^{-(n+1)},
// which agrees with pulling kernel_ball back through the Cayley transform.
double kernel_siegel(int n, const CVec& z);

struct SeriesValue {
    double value = 0.0;
    double last_increment_ratio = 0.0;  // last degree's increment / partial sum
    bool converged = true;
    operator double() const { return value; }
};

// Monomial-series kernel on a bounded complete Reinhardt domain:
// sum over |alpha| <= max_degree of |z^alpha|^2 / m_alpha, with moments
// m_alpha from the closed-form radial (Beta-function) reduction.  Flagged
// non-converged when the final degree contributes more than 1e-3 of the sum.
SeriesValue reinhardt_kernel(const DomainSpec& spec, const CVec& z, int max_degree);

// log m_alpha for the implemented Reinhardt domains (ball, egg).
double log_moment(const DomainSpec& spec, int a1, int a2);

// An evaluable diagonal-kernel oracle K_D(.).
class KernelOracle {
public:
    static KernelOracle closed_form(const DomainSpec& spec);
    static KernelOracle reinhardt_series(const DomainSpec& spec, int max_degree);
    // K_{D'}(z) = K_D(psi(z)) |det psi'(z)|^2 for a biholomorphism psi: D' -> D.
    static KernelOracle pullback(const HoloMap& to_base, const KernelOracle& base);

    double operator()(const CVec& z) const;
    int dim() const { return n_; }

private:
    KernelOracle(int n, std::function<double(const CVec&)> f) : n_(n), eval_(std::move(f)) {}
    int n_;
    std::function<double(const CVec&)> eval_;
};

struct ConvergenceRow {
    int j;
    double kernel;
    double limit;
    double abs_err;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    double final_abs_err = 0.0;
    bool converged = false;       // final_abs_err <= tolerance
    bool bound_satisfied = true;  // K_j(w) <= K_{Omega_0}(w) for all rows

    // header: j,kernel,limit,abs_err
    void write_csv(std::ostream& os, const nlohmann::json& config) const;
};

struct RamadanovOptions {
    double tolerance = 1e-3;
    // Kernel oracle of a relatively compact subdomain of the limit; when set,
    // every row must satisfy K_j(w) <= K_{Omega_0}(w) (inclusion reverses
    // kernels).
    std::optional<KernelOracle> omega0;
};

// Kernel stability along a sequence of domains shrinking onto a limit:
// tabulates K_{Omega_j}(w) against the limit kernel at w.
ConvergenceTable ramadanov_run(const std::vector<std::pair<int, KernelOracle>>& sequence,
                               const KernelOracle& limit, const CVec& w,
                               const RamadanovOptions& opts = {});

}  // namespace suitalab
