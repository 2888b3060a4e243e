#pragma once

#include "suitalab/cvec.hpp"
#include "suitalab/domain.hpp"
#include "suitalab/holomap.hpp"

namespace suitalab {

// Second-order normalization at a strongly pseudoconvex boundary point zeta:
// the composition of the translation zeta -> 0, a unitary rotation sending
// the outward normal to the Re z_n axis, the quadric shear removing pure-'z
// holomorphic second-order terms, and the tangential linear change making the
// Levi block of the Hermitian part the identity.  In the resulting
// coordinates a defining function expands as
//     2 Re(z_n + Q(z)) + H(z) + o(|z|^2)
// with Q('z, 0) == 0 and H('z, 0) == |'z|^2.
struct PinchukData {
    CVec boundary_point;     // zeta on the boundary
    HoloMap normalization;   // sends zeta to the origin
    CMat hermitian_form;     // H in normalized coordinates, upper-left block = I
    CMat quadric_form;       // Q in normalized coordinates ('z block is zero)
    double rho_scale;        // normalized rho = (rho o inverse map) / rho_scale
};

PinchukData pinchuk_normalize(const DomainSpec& spec, const CVec& zeta);

// Normalized defining value at z: (rho o normalization^{-1})(z) / rho_scale.
double normalized_defining_value(const DomainSpec& spec, const PinchukData& data, const CVec& z);

// Smallest eigenvalue of the Levi form restricted to the complex tangent
// space at a boundary point (positive iff strongly pseudoconvex there).
double levi_min_eigenvalue(const DomainSpec& spec, const CVec& zeta);

}  // namespace suitalab
