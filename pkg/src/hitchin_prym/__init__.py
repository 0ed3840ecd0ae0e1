"""Exact integer invariants of Hitchin-system abelianization.

Given a split reductive group (a Cartan type plus a character-lattice
choice) and a curve genus, the package computes the combinatorics of the
spectral cover, the dimension of the generalized Prym variety through
Weyl-group character theory, and the injectivity/fiber-size analysis of
the abelianization map.  All arithmetic is exact.
"""

from .errors import (
    EnumerationUnavailableError,
    GenusError,
    GroupSpecError,
    LatticeError,
    StrategyUnavailableError,
    VerificationError,
)
from .root_datum import (
    CartanType,
    LatticeSpec,
    RootDatum,
    build_root_datum,
    coroot,
    derived_group_is_simply_connected,
    parse_group_spec,
    root_admits_unit_pairing,
)
from .weyl import (
    DEFAULT_ENUMERATION_CAP,
    WeylElement,
    WeylGroup,
    fixed_coset_count,
    generate,
    induced_character_values,
    orbit_representative,
    root_orbits,
    weyl_order,
)
from .characters import (
    ClassFunction,
    component_reflection_character,
    h1_character,
    induced_character,
    inner_product,
    lefschetz_character,
    reflection_character,
    regular_character,
    restriction_inner_product,
    trivial_character,
)
from .spectral import CoverStats, cover_stats, spectral_genus
from .prym import (
    DimensionReport,
    moduli_dimension,
    prym_dimension,
    prym_dimension_analytic,
    prym_dimension_enumerated,
)
from .fiber import (
    FiberReport,
    Pgl2FiberCount,
    exceptional_roots,
    fiber_bound,
    injectivity_verdict,
    pgl2_exact_count,
)

__version__ = "1.0.0"

__all__ = [
    "CartanType",
    "ClassFunction",
    "CoverStats",
    "DEFAULT_ENUMERATION_CAP",
    "DimensionReport",
    "EnumerationUnavailableError",
    "FiberReport",
    "GenusError",
    "GroupSpecError",
    "LatticeError",
    "LatticeSpec",
    "Pgl2FiberCount",
    "RootDatum",
    "StrategyUnavailableError",
    "VerificationError",
    "WeylElement",
    "WeylGroup",
    "build_root_datum",
    "component_reflection_character",
    "coroot",
    "cover_stats",
    "derived_group_is_simply_connected",
    "exceptional_roots",
    "fiber_bound",
    "fixed_coset_count",
    "generate",
    "h1_character",
    "induced_character",
    "induced_character_values",
    "injectivity_verdict",
    "inner_product",
    "lefschetz_character",
    "moduli_dimension",
    "orbit_representative",
    "parse_group_spec",
    "pgl2_exact_count",
    "prym_dimension",
    "prym_dimension_analytic",
    "prym_dimension_enumerated",
    "reflection_character",
    "regular_character",
    "restriction_inner_product",
    "root_admits_unit_pairing",
    "root_orbits",
    "spectral_genus",
    "trivial_character",
    "weyl_order",
]
