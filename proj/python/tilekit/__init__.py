"""Exact-arithmetic toolkit for k-fold translative tilings by centrally
symmetric convex polygons.

All coordinates cross the boundary as exact rational strings ("p/q", the
denominator omitted when 1); nothing is ever rounded.
"""

from ._tilekit import (
    Lattice,
    Polygon,
    TilekitError,
    TranslateSet,
    case_lattices,
    check_bolle,
    classify,
    gen_decagon,
    gen_hexagon,
    gen_octagon1,
    gen_octagon2,
    gen_parallelogram,
    lattice_from_json,
    multiplicity_at,
    polygon_from_json,
    render_svg,
    translates_from_json,
    verify_k_fold,
    vertex_identity,
    wheels_at,
)

__all__ = [
    "Lattice",
    "Polygon",
    "TilekitError",
    "TranslateSet",
    "case_lattices",
    "check_bolle",
    "classify",
    "gen_decagon",
    "gen_hexagon",
    "gen_octagon1",
    "gen_octagon2",
    "gen_parallelogram",
    "lattice_from_json",
    "multiplicity_at",
    "polygon_from_json",
    "render_svg",
    "translates_from_json",
    "verify_k_fold",
    "vertex_identity",
    "wheels_at",
]

__version__ = "0.1.0"
