#pragma once

#include <vector>

#include "suitalab/domain.hpp"
#include "suitalab/holomap.hpp"
#include "suitalab/normalization.hpp"
#include "suitalab/suita.hpp"

namespace suitalab {

// One step of the boundary-scaling pipeline: interior point p_j, its nearest
// boundary point zeta_j, the normalization phi_j at zeta_j, the distance
// delta_j = dist(phi_j(p_j), boundary of phi_j(D)), and the dilation T_j.
// The composite T_j o phi_j sends p_j to ('0, -1).
struct ScalingStep {
    int j = 0;
    CVec p_j;
    CVec zeta_j;
    double delta_j = 0.0;
    HoloMap phi_j;
    HoloMap T_j;
    HoloMap composite;
};

struct ScalingSequence {
    DomainSpec spec;
    CVec p0;  // strongly pseudoconvex boundary target
    double rate = 0.5;
    std::vector<ScalingStep> steps;
};

// Interior sequence p_j = p0 - rate^j * nu(p0) along the inward normal;
// requires a strongly pseudoconvex p0 (ball anywhere, egg at (0, 1)) and a
// unique nearest boundary point at every step.
ScalingSequence build_sequence(const DomainSpec& spec, const CVec& p0, int count, double rate);

// Membership in the scaled domain D_j = composite_j(D).
bool scaled_contains(const ScalingSequence& seq, int j, const CVec& z);

// Kernel, metric and F of the scaled domain at p* = ('0, -1), computed by
// pulling the ball data back through the composite map (ball sequences only).
SuitaResult scaled_invariants(const ScalingSequence& seq, int j, MetricTag tau,
                              const Method& method);

// Metric oracle of D_j at an interior point z (ball sequences only).
MetricOracle scaled_metric(const ScalingSequence& seq, int j, const CVec& z, MetricTag tau);

// Kernel value K_{D_j}(z) via the transformation rule (ball sequences only).
double scaled_kernel(const ScalingSequence& seq, int j, const CVec& z);

struct ConvergenceReportRow {
    int j = 0;
    double delta = 0.0;
    double kernel = 0.0;
    double kernel_err_abs = 0.0;
    double vol = 0.0;
    double vol_sigma = 0.0;
    double F = 0.0;
    double F_sigma = 0.0;
    double radial_dist = 0.0;
};

// Full per-step report at p*: kernel against the limit kernel, Monte Carlo
// indicatrix volume, F with error, and the radial distance between the
// scaled and limit indicatrices.
std::vector<ConvergenceReportRow> convergence_report(const ScalingSequence& seq, MetricTag tau,
                                                     std::int64_t N, std::uint64_t seed,
                                                     int n_dirs = 4096);

// header: j,delta,kernel,kernel_err_abs,vol,vol_sigma,F,F_sigma,radial_dist
void write_report_csv(std::ostream& os, const std::vector<ConvergenceReportRow>& rows,
                      const nlohmann::json& config);

}  // namespace suitalab
