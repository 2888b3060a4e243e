#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "suitalab/cvec.hpp"
#include "suitalab/holomap.hpp"

namespace suitalab {

// Model domains: the unit ball B^n, egg domains
// E_{2mu} = {|z1|^2 + |z2|^{2mu} < 1} in C^2, the unbounded ball realization
// D = {2 Re z_n + |'z|^2 < 0}, and biholomorphic images of these.
class DomainSpec {
public:
    enum class Variant { ball, egg, siegel, scaled };

    static DomainSpec ball(int n);
    static DomainSpec egg(double mu);
    static DomainSpec siegel(int n);
    // Image domain: membership of z equals base membership of to_base(z).
    static DomainSpec scaled(const DomainSpec& base, const HoloMap& to_base);

    Variant variant() const { return variant_; }
    int dim() const { return n_; }
    double mu() const;
    bool bounded() const;
    const DomainSpec& base() const;
    const HoloMap& to_base() const;

    // Strict defining inequality: boundary points are outside.
    bool contains(const CVec& z) const;
    // Negative inside, zero on the boundary, positive outside.
    double defining_value(const CVec& z) const;
    // Lebesgue volume in real dimension 2n (bounded variants only).
    double volume() const;
    // The unique t >= 0 with v/t on the boundary (0 for v = 0); bounded
    // complete Reinhardt variants only.  Bisection to 1e-12.
    double minkowski_gauge(const CVec& v) const;

    // Second-order data of the defining function (closed forms).
    CVec gradient(const CVec& z) const;              // d rho / d z_i
    CMat holomorphic_hessian(const CVec& z) const;   // d^2 rho / dz_i dz_j
    CMat hermitian_hessian(const CVec& z) const;     // d^2 rho / dz_i d conj(z_j)

    std::string name() const;
    nlohmann::json to_json() const;
    static DomainSpec from_json(const nlohmann::json& j);

private:
    DomainSpec(Variant v, int n, double mu) : variant_(v), n_(n), mu_(mu) {}
    void check_dim(const CVec& z) const;
    double inscribed_radius() const;

    Variant variant_;
    int n_;
    double mu_ = 0.0;
    struct ScaledData;  // base spec + biholomorphism, defined out of line
    std::shared_ptr<const ScaledData> scaled_;
};

}  // namespace suitalab
