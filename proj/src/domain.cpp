#include "suitalab/domain.hpp"

#include <cmath>
#include <numbers>

#include "suitalab/errors.hpp"

namespace suitalab {

namespace {
constexpr double kPi = std::numbers::pi;
}

struct DomainSpec::ScaledData {
    DomainSpec base;
    HoloMap to_base;
};

DomainSpec DomainSpec::ball(int n) {
    if (n < 1) throw std::invalid_argument("ball: dimension must be >= 1");
    return DomainSpec(Variant::ball, n, 0.0);
}

DomainSpec DomainSpec::egg(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("egg: exponent mu must be positive");
    return DomainSpec(Variant::egg, 2, mu);
}

DomainSpec DomainSpec::siegel(int n) {
    if (n < 1) throw std::invalid_argument("siegel: dimension must be >= 1");
    return DomainSpec(Variant::siegel, n, 0.0);
}

DomainSpec DomainSpec::scaled(const DomainSpec& base, const HoloMap& to_base) {
    if (base.dim() != to_base.dim())
        throw std::invalid_argument("scaled: map and base dimension mismatch");
    DomainSpec d(Variant::scaled, base.dim(), 0.0);
    d.scaled_ = std::make_shared<ScaledData>(ScaledData{base, to_base});
    return d;
}

double DomainSpec::mu() const {
    if (variant_ != Variant::egg) throw std::logic_error("mu: not an egg domain");
    return mu_;
}

bool DomainSpec::bounded() const {
    switch (variant_) {
        case Variant::ball:
        case Variant::egg:
            return true;
        case Variant::siegel:
            return false;
        case Variant::scaled:
            return scaled_->base.bounded();
    }
    return false;
}

const DomainSpec& DomainSpec::base() const {
    if (variant_ != Variant::scaled) throw std::logic_error("base: not a scaled domain");
    return scaled_->base;
}

const HoloMap& DomainSpec::to_base() const {
    if (variant_ != Variant::scaled) throw std::logic_error("to_base: not a scaled domain");
    return scaled_->to_base;
}

void DomainSpec::check_dim(const CVec& z) const {
    if (z.dim() != n_) throw std::invalid_argument("DomainSpec: point dimension mismatch");
}

bool DomainSpec::contains(const CVec& z) const {
    if (variant_ == Variant::scaled) {
        check_dim(z);
        return scaled_->base.contains(scaled_->to_base(z));
    }
    return defining_value(z) < 0.0;
}

double DomainSpec::defining_value(const CVec& z) const {
    check_dim(z);
    switch (variant_) {
        case Variant::ball:
            return z.norm_sq() - 1.0;
        case Variant::egg:
            return std::norm(z[0]) + std::pow(std::abs(z[1]), 2.0 * mu_) - 1.0;
        case Variant::siegel: {
            double s = 2.0 * z.last().real();
            for (int i = 0; i < n_ - 1; ++i) s += std::norm(z[i]);
            return s;
        }
        case Variant::scaled:
            return scaled_->base.defining_value(scaled_->to_base(z));
    }
    throw std::logic_error("DomainSpec: unreachable");
}

double DomainSpec::volume() const {
    switch (variant_) {
        case Variant::ball: {
            // pi^n / n!
            double v = 1.0;
            for (int k = 1; k <= n_; ++k) v *= kPi / k;
            return v;
        }
        case Variant::egg:
            return kPi * kPi * mu_ / (mu_ + 1.0);
        case Variant::siegel:
            throw capability_error("volume: the unbounded domain has infinite volume");
        case Variant::scaled:
            throw capability_error("volume: no closed form for scaled domains");
    }
    throw std::logic_error("DomainSpec: unreachable");
}

double DomainSpec::inscribed_radius() const {
    switch (variant_) {
        case Variant::ball:
            return 1.0;
        case Variant::egg: {
            if (mu_ >= 1.0) return 1.0;  // the unit ball is contained in the egg
            // largest r with r^2 + r^{2 mu} <= 1: any sphere point satisfies
            // |v1|^2 + |v2|^{2 mu} <= r^2 + r^{2 mu}
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double g = mid * mid + std::pow(mid, 2.0 * mu_) - 1.0;
                (g < 0.0 ? lo : hi) = mid;
            }
            return lo;
        }
        default:
            throw capability_error("inscribed radius: bounded Reinhardt variants only");
    }
}

double DomainSpec::minkowski_gauge(const CVec& v) const {
    check_dim(v);
    if (variant_ != Variant::ball && variant_ != Variant::egg)
        throw capability_error("minkowski_gauge: bounded complete Reinhardt variants only");
    double vn = v.norm();
    if (vn == 0.0) return 0.0;
    if (variant_ == Variant::ball) return vn;

    // Bracket [eps, |v|/r_in]: t -> defining_value(v/t) decreases from
    // positive (far outside) to negative (inside the inscribed ball).
    double hi = vn / inscribed_radius();
    while (defining_value(cdouble{1.0 / hi, 0.0} * v) >= 0.0) hi *= 2.0;
    double lo = hi * 1e-18;
    while (defining_value(cdouble{1.0 / lo, 0.0} * v) <= 0.0) lo *= 0.5;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double g = defining_value(cdouble{1.0 / mid, 0.0} * v);
        if (g > 0.0)
            lo = mid;
        else if (g < 0.0)
            hi = mid;
        else
            return mid;
    }
    return 0.5 * (lo + hi);
}

CVec DomainSpec::gradient(const CVec& z) const {
    check_dim(z);
    CVec g(n_);
    switch (variant_) {
        case Variant::ball:
            for (int i = 0; i < n_; ++i) g[i] = std::conj(z[i]);
            return g;
        case Variant::egg: {
            g[0] = std::conj(z[0]);
            double a = std::abs(z[1]);
            if (a == 0.0) {
                if (mu_ < 1.0)
                    throw capability_error("gradient: egg defining function not differentiable at z2 = 0");
                g[1] = 0.0;
            } else {
                g[1] = mu_ * std::pow(a, 2.0 * mu_ - 2.0) * std::conj(z[1]);
            }
            return g;
        }
        case Variant::siegel:
            for (int i = 0; i < n_ - 1; ++i) g[i] = std::conj(z[i]);
            g[n_ - 1] = 1.0;
            return g;
        case Variant::scaled:
            throw capability_error("gradient: not provided for scaled domains");
    }
    throw std::logic_error("DomainSpec: unreachable");
}

CMat DomainSpec::holomorphic_hessian(const CVec& z) const {
    check_dim(z);
    CMat h(n_);
    switch (variant_) {
        case Variant::ball:
        case Variant::siegel:
            return h;  // zero: defining functions have no pure holomorphic quadratic part
        case Variant::egg: {
            double a = std::abs(z[1]);
            if (a == 0.0) {
                if (mu_ < 1.0)
                    throw capability_error("holomorphic_hessian: egg degenerate at z2 = 0");
                return h;
            }
            h.at(1, 1) = mu_ * (mu_ - 1.0) * std::pow(a, 2.0 * mu_ - 4.0) *
                         std::conj(z[1]) * std::conj(z[1]);
            return h;
        }
        case Variant::scaled:
            throw capability_error("holomorphic_hessian: not provided for scaled domains");
    }
    throw std::logic_error("DomainSpec: unreachable");
}

CMat DomainSpec::hermitian_hessian(const CVec& z) const {
    check_dim(z);
    switch (variant_) {
        case Variant::ball:
            return CMat::identity(n_);
        case Variant::egg: {
            CMat h(n_);
            h.at(0, 0) = 1.0;
            double a = std::abs(z[1]);
            if (a == 0.0) {
                if (mu_ < 1.0)
                    throw capability_error("hermitian_hessian: egg degenerate at z2 = 0");
                h.at(1, 1) = (mu_ == 1.0) ? 1.0 : 0.0;
            } else {
                h.at(1, 1) = mu_ * mu_ * std::pow(a, 2.0 * (mu_ - 1.0));
            }
            return h;
        }
        case Variant::siegel: {
            CMat h(n_);
            for (int i = 0; i < n_ - 1; ++i) h.at(i, i) = 1.0;
            return h;
        }
        case Variant::scaled:
            throw capability_error("hermitian_hessian: not provided for scaled domains");
    }
    throw std::logic_error("DomainSpec: unreachable");
}

std::string DomainSpec::name() const {
    switch (variant_) {
        case Variant::ball:
            return "ball";
        case Variant::egg:
            return "egg";
        case Variant::siegel:
            return "siegel";
        case Variant::scaled:
            return "scaled(" + scaled_->base.name() + ")";
    }
    return "?";
}

nlohmann::json DomainSpec::to_json() const {
    switch (variant_) {
        case Variant::ball:
            return {{"variant", "ball"}, {"n", n_}};
        case Variant::egg:
            return {{"variant", "egg"}, {"n", n_}, {"mu", mu_}};
        case Variant::siegel:
            return {{"variant", "siegel"}, {"n", n_}};
        case Variant::scaled:
            throw capability_error("to_json: scaled domains are in-memory only");
    }
    throw std::logic_error("DomainSpec: unreachable");
}

DomainSpec DomainSpec::from_json(const nlohmann::json& j) {
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "ball") return ball(j.at("n").get<int>());
    if (variant == "egg") return egg(j.at("mu").get<double>());
    if (variant == "siegel") return siegel(j.at("n").get<int>());
    throw std::invalid_argument("DomainSpec::from_json: unknown variant " + variant);
}

}  // namespace suitalab
