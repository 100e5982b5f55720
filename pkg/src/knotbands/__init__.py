"""Exact arithmetic for disk-band spanning surfaces of knots.

Band surfaces with explicit half-twist, attachment, and crossing data;
their framings, Gordon-Litherland and Seifert pairings; classical
concordance invariants computed over Q; and mechanical screens for
sliceness of cable boundaries on zero-framed punctured Klein bottles.
"""

from .algebra import (
    AbelianInvariants,
    LaurentPoly,
    det_int,
    det_laurent,
    fp_abelian_invariants,
    inertia,
    signature_exact,
    smith_normal_form,
)
from .bandform import (
    Band,
    BandSurface,
    GammaCurve,
    MultipleBoundaryError,
    NormalFormError,
    NotOrientableError,
    RouteEvent,
    SurfaceShape,
    boundary_connect_sum,
    boundary_walk,
    core_route,
    core_writhe,
    framing,
    gamma_curve,
    gl_form,
    interleave_data,
    klein_bottle_for_cables,
    mirror_core,
    mobius_band,
    seifert_matrix,
    shape,
    surgery_shape,
    validate_surface,
    zero_framing_stabilize,
)
from .diagram import (
    Crossing,
    CrossingList,
    NonclassicalCrossingError,
    connected_sum,
    linking_number,
    mirror,
    reverse,
    writhe,
)
from .invariants import (
    DEFAULT_SAMPLES,
    Omega,
    SignatureSample,
    SigmaSquaredEntry,
    SigmaSquaredReport,
    alexander,
    alexander_cable2,
    alexander_satellite,
    arf,
    determinant_knot,
    levine_tristram,
    sigma_function,
    sigma_satellite,
    sigma_squared_compare,
    signature,
    torus2_alexander,
)
from .obstruct import (
    ObstructionReport,
    TestResult,
    VerifyProperty,
    VerifySummary,
    cable_concordance_check,
    determinant_mod8_check,
    genus_framing_check,
    random_band_surface,
    random_core,
    random_normal_form,
    random_unimodular,
    slice_obstruction_report,
    verify_paper,
)
from .presets import PresetKnot, get_preset, preset_names

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "Band",
    "BandSurface",
    "Crossing",
    "CrossingList",
    "DEFAULT_SAMPLES",
    "GammaCurve",
    "LaurentPoly",
    "MultipleBoundaryError",
    "NonclassicalCrossingError",
    "NormalFormError",
    "NotOrientableError",
    "ObstructionReport",
    "Omega",
    "PresetKnot",
    "RouteEvent",
    "SigmaSquaredEntry",
    "SigmaSquaredReport",
    "SignatureSample",
    "SurfaceShape",
    "TestResult",
    "VerifyProperty",
    "VerifySummary",
    "alexander",
    "alexander_cable2",
    "alexander_satellite",
    "arf",
    "boundary_connect_sum",
    "boundary_walk",
    "cable_concordance_check",
    "connected_sum",
    "core_route",
    "core_writhe",
    "det_int",
    "det_laurent",
    "determinant_knot",
    "determinant_mod8_check",
    "fp_abelian_invariants",
    "framing",
    "gamma_curve",
    "genus_framing_check",
    "gl_form",
    "inertia",
    "interleave_data",
    "klein_bottle_for_cables",
    "levine_tristram",
    "linking_number",
    "mirror",
    "mirror_core",
    "mobius_band",
    "random_band_surface",
    "random_core",
    "random_normal_form",
    "random_unimodular",
    "reverse",
    "seifert_matrix",
    "shape",
    "sigma_function",
    "sigma_satellite",
    "sigma_squared_compare",
    "signature",
    "signature_exact",
    "slice_obstruction_report",
    "smith_normal_form",
    "surgery_shape",
    "torus2_alexander",
    "validate_surface",
    "verify_paper",
    "writhe",
    "zero_framing_stabilize",
    "get_preset",
    "preset_names",
]
