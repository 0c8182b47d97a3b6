"""Certification of piecewise-linear homeomorphisms as bi-Lipschitz
quasi-isometries, plus the explicit cone and disc-swap constructions."""

from ._core import (
    AnalyticMap,
    Complex,
    Error,
    MapUnderTest,
    Simplex,
    SimplicialMap,
    barycentric_coordinates,
    bound_check,
    certify,
    clip_segment,
    commutator_series,
    compose,
    degeneracy_measure,
    dihedral_angle,
    disc_swap_complexes,
    disc_swap_map,
    disc_swap_vertex_map,
    divergent_sequence,
    equivalence_gap,
    identity_map,
    load_analytic,
    load_complex,
    load_map,
    n1_constant,
    point_from_barycentric,
    prop31_bound,
    qi_constants,
    sample_distortion,
    save_analytic,
    save_complex,
    save_map,
    triangle_inequality_check,
    vertex_ratio_bound,
    witness_discs,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticMap",
    "Complex",
    "Error",
    "MapUnderTest",
    "Simplex",
    "SimplicialMap",
    "barycentric_coordinates",
    "bound_check",
    "certify",
    "clip_segment",
    "commutator_series",
    "compose",
    "degeneracy_measure",
    "dihedral_angle",
    "disc_swap_complexes",
    "disc_swap_map",
    "disc_swap_vertex_map",
    "divergent_sequence",
    "equivalence_gap",
    "identity_map",
    "load_analytic",
    "load_complex",
    "load_map",
    "n1_constant",
    "point_from_barycentric",
    "prop31_bound",
    "qi_constants",
    "sample_distortion",
    "save_analytic",
    "save_complex",
    "save_map",
    "triangle_inequality_check",
    "vertex_ratio_bound",
    "witness_discs",
]
