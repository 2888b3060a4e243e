#include "suitalab/metric.hpp"

#include <cmath>
#include <numbers>

#include "suitalab/errors.hpp"

namespace suitalab {

namespace {
constexpr double kPi = std::numbers::pi;

// Kobayashi form of the ball at z: Q = I/(1-|z|^2) + z z*/(1-|z|^2)^2.
CMat ball_form(const CVec& z) {
    double r2 = z.norm_sq();
    if (r2 >= 1.0) throw std::domain_error("kobayashi_ball: point outside the unit ball");
    double c1 = 1.0 / (1.0 - r2);
    double c2 = c1 * c1;
    int n = z.dim();
    CMat q(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) q.at(i, j) = c2 * z[i] * std::conj(z[j]);
        q.at(i, i) += c1;
    }
    return q;
}

double ball_volume_2n(int n) {
    double v = 1.0;
    for (int k = 1; k <= n; ++k) v *= kPi / k;
    return v;
}
}  // namespace

double Ellipsoid2C::volume() const {
    if (!(A > 0.0) || !(B > 0.0))
        throw std::invalid_argument("Ellipsoid2C: semi-axes must be positive");
    return 0.5 * kPi * kPi * A * B;
}

double ellipsoid_volume(const Ellipsoid2C& e) { return e.volume(); }

Ellipsoid2C wu_outer_ellipsoid(double mu, double p) {
    if (!(mu > 0.0)) throw std::invalid_argument("wu_outer_ellipsoid: mu must be positive");
    if (!(p >= 0.0 && p < 1.0))
        throw std::domain_error("wu_outer_ellipsoid: p must lie in [0, 1)");
    double w = 1.0 - p * p;
    return Ellipsoid2C{1.0 - std::pow(p, 2.0 * mu), w * w};
}

Ellipsoid2C inscribed_ellipsoid(double mu, double p) {
    if (!(mu > 0.0 && mu < 0.5))
        throw capability_error("inscribed_ellipsoid: requires 0 < mu < 1/2");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("inscribed_ellipsoid: p must lie in (0, 1); p = 0 degenerates");
    double a = 1.0 - std::pow(p, 2.0 * mu);
    double b = a * a * std::pow(p, 2.0 - 2.0 * mu) / (mu * mu);
    return Ellipsoid2C{a, b};
}

double kobayashi_ball(const CVec& z, const CVec& v) {
    double r2 = z.norm_sq();
    if (r2 >= 1.0) throw std::domain_error("kobayashi_ball: point outside the unit ball");
    double c1 = 1.0 / (1.0 - r2);
    double ip = std::abs(hermitian_dot(z, v));
    return std::sqrt(v.norm_sq() * c1 + ip * ip * c1 * c1);
}

double kobayashi_siegel(const CVec& z, const CVec& v) {
    HoloMap psi = HoloMap::cayley(z.dim());
    CVec w = psi(z);
    if (w.norm_sq() >= 1.0) throw std::domain_error("kobayashi_siegel: point outside the domain");
    return kobayashi_ball(w, psi.jacobian(z) * v);
}

double caratheodory_model(const DomainSpec& spec, const CVec& z, const CVec& v) {
    switch (spec.variant()) {
        case DomainSpec::Variant::ball:
            return kobayashi_ball(z, v);
        case DomainSpec::Variant::siegel:
            return kobayashi_siegel(z, v);
        default:
            throw capability_error(
                "caratheodory_model: supported on the ball and its unbounded realization only");
    }
}

MetricOracle MetricOracle::from_form(const CVec& base_point, const CMat& q, Kind kind,
                                     Provenance prov) {
    MetricOracle o;
    o.base_point_ = base_point;
    o.kind_ = kind;
    o.provenance_ = prov;
    o.form_ = q;
    o.eval_ = [q](const CVec& v) { return std::sqrt(std::max(0.0, hermitian_form_value(q, v))); };
    o.in_unit_ = [q](const CVec& v) { return hermitian_form_value(q, v) < 1.0; };
    return o;
}

MetricOracle MetricOracle::ball_at(const CVec& z, Kind kind) {
    return from_form(z, ball_form(z), kind, Provenance::exact);
}

MetricOracle MetricOracle::siegel_at(const CVec& z, Kind kind) {
    HoloMap psi = HoloMap::cayley(z.dim());
    CVec w = psi(z);
    if (w.norm_sq() >= 1.0)
        throw std::domain_error("MetricOracle::siegel_at: point outside the domain");
    CMat m = psi.jacobian(z);
    CMat q = m.adjoint() * ball_form(w) * m;
    return from_form(z, q, kind, Provenance::exact);
}

MetricOracle MetricOracle::gauge(const DomainSpec& spec) {
    if (!spec.bounded() || (spec.variant() != DomainSpec::Variant::ball &&
                            spec.variant() != DomainSpec::Variant::egg))
        throw capability_error("MetricOracle::gauge: bounded complete Reinhardt variants only");
    if (spec.variant() == DomainSpec::Variant::ball)
        return from_form(CVec::zero(spec.dim()), CMat::identity(spec.dim()), Kind::gauge,
                         Provenance::exact);
    MetricOracle o;
    o.base_point_ = CVec::zero(spec.dim());
    o.kind_ = Kind::gauge;
    o.provenance_ = Provenance::exact;
    o.eval_ = [spec](const CVec& v) { return spec.minkowski_gauge(v); };
    o.in_unit_ = [spec](const CVec& v) { return spec.defining_value(v) < 0.0; };
    return o;
}

MetricOracle MetricOracle::ellipsoid(const Ellipsoid2C& e, Provenance prov) {
    if (!(e.A > 0.0) || !(e.B > 0.0))
        throw std::invalid_argument("MetricOracle::ellipsoid: semi-axes must be positive");
    CMat q(2);
    q.at(0, 0) = 1.0 / e.A;
    q.at(1, 1) = 1.0 / e.B;
    return from_form(CVec::zero(2), q, Kind::ellipsoid_bound, prov);
}

MetricOracle MetricOracle::custom(const CVec& base_point, Kind kind, Provenance prov,
                                  std::function<double(const CVec&)> eval) {
    MetricOracle o;
    o.base_point_ = base_point;
    o.kind_ = kind;
    o.provenance_ = prov;
    o.eval_ = eval;
    o.in_unit_ = [eval](const CVec& v) { return eval(v) < 1.0; };
    return o;
}

MetricOracle MetricOracle::scaled(const MetricOracle& base, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("MetricOracle::scaled: factor must be positive");
    MetricOracle o;
    o.base_point_ = base.base_point_;
    o.kind_ = base.kind_;
    o.provenance_ = base.provenance_;
    auto eval = base.eval_;
    o.eval_ = [eval, c](const CVec& v) { return c * eval(v); };
    o.in_unit_ = [eval, c](const CVec& v) { return c * eval(v) < 1.0; };
    if (base.form_) {
        CMat q = *base.form_;
        for (int i = 0; i < q.dim(); ++i)
            for (int j = 0; j < q.dim(); ++j) q.at(i, j) *= c * c;
        o.form_ = q;
    }
    return o;
}

std::optional<double> MetricOracle::exact_indicatrix_volume() const {
    if (!form_) return std::nullopt;
    cdouble d = form_->det();
    if (!(d.real() > 0.0)) return std::nullopt;
    return ball_volume_2n(form_->dim()) / d.real();
}

MetricOracle pullback_metric(const MetricOracle& base, const HoloMap& map, const CVec& z) {
    if (map.dim() != base.dim())
        throw std::invalid_argument("pullback_metric: dimension mismatch");
    CVec image = map(z);
    if (dist(image, base.base_point()) > 1e-8)
        throw std::invalid_argument("pullback_metric: base oracle must sit at map(z)");
    CMat m = map.jacobian(z);
    if (base.hermitian_form()) {
        CMat q = m.adjoint() * (*base.hermitian_form()) * m;
        return MetricOracle::from_form(z, q, base.kind(), base.provenance());
    }
    return MetricOracle::custom(z, base.kind(), base.provenance(),
                                [base, m](const CVec& v) { return base(m * v); });
}

}  // namespace suitalab
