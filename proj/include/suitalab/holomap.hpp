#pragma once

#include <memory>
#include <vector>

#include <json.hpp>

#include "suitalab/cvec.hpp"

namespace suitalab {

// Holomorphic self-maps of C^n used by the boundary-scaling pipeline:
// affine maps, the Cayley transform and its inverse, anisotropic dilations
// T(z) = ('z/sqrt(d), z_n/d), quadric shears z_n -> z_n + 'z^T C 'z, and
// compositions.  Maps are immutable values exposing evaluation, the complex
// Jacobian, its determinant, and a closed-form inverse.
class HoloMap {
public:
    enum class Variant { identity, affine, cayley, cayley_inverse, dilation, quadric, composition };

    static HoloMap identity(int n);
    // z -> A z + b, A invertible
    static HoloMap affine(const CMat& linear, const CVec& offset);
    static HoloMap translation(const CVec& offset);
    // v -> r (v - q) + q, the homothety with center q and ratio r > 0
    static HoloMap homothety(const CVec& q, double r);
    static HoloMap cayley(int n);
    static HoloMap cayley_inverse(int n);
    static HoloMap dilation(double delta, int n);
    // z_n -> z_n + sum_{i,j < n-1} C_ij z_i z_j over the 'z block (C symmetric)
    static HoloMap quadric_shear(const CMat& tangent_coeffs, int n);
    // maps applied left to right: compose({f, g}) sends z to g(f(z))
    static HoloMap compose(std::vector<HoloMap> maps);

    CVec operator()(const CVec& z) const;
    CMat jacobian(const CVec& z) const;
    cdouble jacobian_det(const CVec& z) const;
    HoloMap inverse() const;

    int dim() const;
    Variant variant() const;

    nlohmann::json to_json() const;
    static HoloMap from_json(const nlohmann::json& j);

private:
    struct Node;
    explicit HoloMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Point forms of the Cayley transform (Siegel domain onto the unit ball and
// back); pole at z_n = 1 resp. w_n = -1.
CVec cayley(const CVec& z);
CVec cayley_inverse(const CVec& w);

}  // namespace suitalab
