"""Bergman kernels, invariant metrics, indicatrix volumes and the invariant
F = K * lambda(indicatrix) on model domains in C^2."""

from ._suitalab import (
    CapabilityError,
    DomainSpec,
    Ellipsoid2C,
    MetricOracle,
    ScalingSequence,
    __version__,
    ball_metric,
    bounding_radius,
    build_sequence,
    cayley,
    cayley_inverse,
    convergence_report,
    egg_f_bounds,
    ellipsoid_metric,
    ellipsoid_volume,
    gauge_metric,
    inscribed_ellipsoid,
    kernel_ball,
    kernel_egg_axis,
    kernel_siegel,
    kobayashi_ball,
    kobayashi_siegel,
    mc_volume,
    orbit_value_note,
    radial_distance,
    reinhardt_kernel,
    scaled_contains,
    scaled_invariants,
    segment_scan,
    siegel_metric,
    suita_invariant,
    wu_outer_ellipsoid,
)

__all__ = [
    "CapabilityError",
    "DomainSpec",
    "Ellipsoid2C",
    "MetricOracle",
    "ScalingSequence",
    "__version__",
    "ball_metric",
    "bounding_radius",
    "build_sequence",
    "cayley",
    "cayley_inverse",
    "convergence_report",
    "egg_f_bounds",
    "ellipsoid_metric",
    "ellipsoid_volume",
    "gauge_metric",
    "inscribed_ellipsoid",
    "kernel_ball",
    "kernel_egg_axis",
    "kernel_siegel",
    "kobayashi_ball",
    "kobayashi_siegel",
    "mc_volume",
    "orbit_value_note",
    "radial_distance",
    "reinhardt_kernel",
    "scaled_contains",
    "scaled_invariants",
    "segment_scan",
    "siegel_metric",
    "suita_invariant",
    "wu_outer_ellipsoid",
]
