"""Exact lozenge-tiling counts for halved hexagons with two ferns removed.

Closed-form evaluators sit next to independent tiling counters so every
formula can be checked against brute force on small parameters.
"""
from .counting import (CapacityError, count_tilings, count_tilings_determinant,
                       enumerate_tilings)
from .families import (boundary_audit, build_halved, build_hexagon, build_proctor,
                       build_quartered, build_symmetric, halved_layout, halved_sides)
from .ferns import Fern, as_fern, fern_sums, partial_sum, plus_one
from .formulas import (FAMILIES, QUARTERED_KINDS, SYMMETRIC_KINDS, ParameterError, Params,
                       halved_count, halved_count_ratio_form, macmahon, proctor_count,
                       proctor_weighted_count, quartered_count, symmetric_count,
                       symmetric_factorization)
from .lattice import Down, Region, TriCell, Up, is_balanced, region_from_json, region_to_json
from .products import (DomainError, PoleError, hyperfactorial, hyperfactorial_skip, pochhammer,
                       pochhammer_skip, product_T, product_V)
from .render import render, render_ascii, render_svg
from .verify import (ParameterGrid, VerificationRecord, algebraic_identity_fuzz,
                     base_split_check, factorization_check, kuo_check, kuo_placement,
                     recurrence_check, sweep)

__all__ = [
    "CapacityError", "count_tilings", "count_tilings_determinant", "enumerate_tilings",
    "boundary_audit", "build_halved", "build_hexagon", "build_proctor", "build_quartered",
    "build_symmetric", "halved_layout", "halved_sides",
    "Fern", "as_fern", "fern_sums", "partial_sum", "plus_one",
    "FAMILIES", "QUARTERED_KINDS", "SYMMETRIC_KINDS", "ParameterError", "Params",
    "halved_count", "halved_count_ratio_form", "macmahon", "proctor_count",
    "proctor_weighted_count", "quartered_count", "symmetric_count", "symmetric_factorization",
    "Down", "Region", "TriCell", "Up", "is_balanced", "region_from_json", "region_to_json",
    "DomainError", "PoleError", "hyperfactorial", "hyperfactorial_skip", "pochhammer",
    "pochhammer_skip", "product_T", "product_V",
    "render", "render_ascii", "render_svg",
    "ParameterGrid", "VerificationRecord", "algebraic_identity_fuzz", "base_split_check",
    "factorization_check", "kuo_check", "kuo_placement", "recurrence_check", "sweep",
]
