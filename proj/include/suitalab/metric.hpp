#pragma once

#include <functional>
#include <optional>
#include <string>

#include "suitalab/cvec.hpp"
#include "suitalab/domain.hpp"
#include "suitalab/holomap.hpp"

namespace suitalab {

// Coordinate-aligned complex ellipsoid {|v1|^2/A + |v2|^2/B < 1} in C^2.
struct Ellipsoid2C {
    double A;
    double B;
    double volume() const;
};

double ellipsoid_volume(const Ellipsoid2C& e);

// Outer bound of the Kobayashi indicatrix of E_{2mu} at (0, p): the Wu
// ellipsoid, A = 1 - p^{2mu}, B = (1 - p^2)^2.
Ellipsoid2C wu_outer_ellipsoid(double mu, double p);

// Inner bound (0 < mu < 1/2, 0 < p < 1):
// A = 1 - p^{2mu}, B = (1 - p^{2mu})^2 p^{2-2mu} / mu^2.
Ellipsoid2C inscribed_ellipsoid(double mu, double p);

// Kobayashi metric of the unit ball,
//   k(z,v)^2 = |v|^2/(1-|z|^2) + |<z,v>|^2/(1-|z|^2)^2,
// and of the Siegel-type domain via the Cayley transform.
double kobayashi_ball(const CVec& z, const CVec& v);
double kobayashi_siegel(const CVec& z, const CVec& v);

// On the ball and its unbounded realization the Caratheodory metric equals
// the Kobayashi metric; no other domains are supported.
double caratheodory_model(const DomainSpec& spec, const CVec& z, const CVec& v);

// A positively homogeneous infinitesimal metric v -> tau(z, v) frozen at one
// base point; the unit sub-level set is the indicatrix.  Immutable; safe to
// evaluate concurrently.
class MetricOracle {
public:
    enum class Kind { kobayashi, caratheodory, gauge, ellipsoid_bound };
    enum class Provenance { exact, outer_bound, inner_bound };

    static MetricOracle ball_at(const CVec& z, Kind kind = Kind::kobayashi);
    static MetricOracle siegel_at(const CVec& z, Kind kind = Kind::kobayashi);
    // Minkowski-gauge metric of a bounded complete Reinhardt domain at 0.
    static MetricOracle gauge(const DomainSpec& spec);
    static MetricOracle ellipsoid(const Ellipsoid2C& e, Provenance prov);
    // tau(v) = sqrt(v* Q v) for Hermitian positive definite Q.
    static MetricOracle from_form(const CVec& base_point, const CMat& q, Kind kind,
                                  Provenance prov);
    // Arbitrary evaluator (test synthesis, interpolating oracles).
    static MetricOracle custom(const CVec& base_point, Kind kind, Provenance prov,
                               std::function<double(const CVec&)> eval);
    // Scaled metric c * tau (same base point).
    static MetricOracle scaled(const MetricOracle& base, double c);

    double operator()(const CVec& v) const { return eval_(v); }
    // tau(v) < 1; gauge oracles answer by the defining inequality.
    bool below_unit(const CVec& v) const { return in_unit_(v); }

    const CVec& base_point() const { return base_point_; }
    int dim() const { return base_point_.dim(); }
    Kind kind() const { return kind_; }
    Provenance provenance() const { return provenance_; }

    // Present when tau(v) = sqrt(v* Q v); the indicatrix is then the exact
    // ellipsoid {v* Q v < 1} with volume (pi^n/n!) / det Q.
    const std::optional<CMat>& hermitian_form() const { return form_; }
    std::optional<double> exact_indicatrix_volume() const;

private:
    MetricOracle() = default;
    CVec base_point_;
    Kind kind_ = Kind::kobayashi;
    Provenance provenance_ = Provenance::exact;
    std::function<double(const CVec&)> eval_;
    std::function<bool(const CVec&)> in_unit_;
    std::optional<CMat> form_;
};

// Pullback oracle at z through a biholomorphism onto the base oracle's
// domain: v -> base(map(z), dmap(z) v).  The base oracle must sit at map(z).
MetricOracle pullback_metric(const MetricOracle& base, const HoloMap& map, const CVec& z);

}  // namespace suitalab
