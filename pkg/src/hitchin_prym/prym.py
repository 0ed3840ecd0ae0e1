"""Dimension of the generalized Prym variety, by two independent routes.

The dimension is half of the multiplicity M of the reflection
representation inside the first cohomology of the spectral cover.  The
closed-form route assembles M from the analytic inner-product table
(Frobenius reciprocity plus the Euler characteristic of the base curve);
the enumeration route computes the same scalar product as a literal sum
over all group elements.  Both must equal the moduli-space dimension
(g - 1) dim G + dim Z(G).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .characters import (
    ClassFunction,
    component_reflection_character,
    h1_character,
    inner_product,
    lefschetz_character,
    reflection_character,
    trivial_character,
)
from .errors import GenusError
from .root_datum import RootDatum
from .spectral import cover_stats
from .weyl import WeylGroup


@dataclass(frozen=True)
class DimensionReport:
    """Hom-space dimension M, the Prym dimension M/2, and the pairings
    behind them, one entry of ``reflection_*`` per Dynkin component."""

    strategy: str
    hom_dim: int
    prym_dim: int
    moduli_dim: int
    triv_lefschetz: int
    reflection_lefschetz: tuple[int, ...]
    triv_h1: int
    reflection_h1: tuple[int, ...]
    strategy_agreement: bool | None = None


def moduli_dimension(datum: RootDatum, genus: int) -> int:
    """(g - 1) dim G + dim Z(G) for stable principal bundles of genus g."""
    if genus < 2:
        raise GenusError(f"genus must be >= 2, got {genus}")
    return (genus - 1) * datum.dim_group + datum.central_rank


def _assemble(datum, genus, strategy, triv_lef, refl_lef) -> DimensionReport:
    triv_h1 = 2 - triv_lef
    refl_h1 = tuple(-v for v in refl_lef)
    hom_dim = datum.central_rank * triv_h1 + sum(refl_h1)
    if hom_dim % 2:
        raise AssertionError("Hom-space dimension must be even")
    report = DimensionReport(
        strategy=strategy,
        hom_dim=hom_dim,
        prym_dim=hom_dim // 2,
        moduli_dim=moduli_dimension(datum, genus),
        triv_lefschetz=triv_lef,
        reflection_lefschetz=tuple(refl_lef),
        triv_h1=triv_h1,
        reflection_h1=refl_h1,
    )
    if report.prym_dim != report.moduli_dim:
        raise AssertionError(
            f"Prym dimension {report.prym_dim} differs from the moduli "
            f"dimension {report.moduli_dim}"
        )
    return report


def prym_dimension_analytic(
    datum: RootDatum, group: WeylGroup, genus: int
) -> DimensionReport:
    """Closed-form route; never needs the element list, so it scales to
    groups far beyond the enumeration cap."""
    cover = cover_stats(datum, group, genus)
    lef = ClassFunction(group, combo=lefschetz_character(group, cover).combo)
    triv = trivial_character(group)
    triv_lef = inner_product(triv, lef)
    refl_lef = [
        inner_product(component_reflection_character(group, i), lef)
        for i in range(len(datum.cartan_type.components))
    ]
    return _assemble(datum, genus, "closed_form", triv_lef, refl_lef)


def prym_dimension_enumerated(
    datum: RootDatum, group: WeylGroup, genus: int
) -> DimensionReport:
    """Brute-force route: every pairing is a full sum over the element list."""
    group.require_enumeration()
    cover = cover_stats(datum, group, genus)
    lef = lefschetz_character(group, cover).materialized()
    h1 = h1_character(group, cover).materialized()
    triv = trivial_character(group).materialized()
    triv_lef = inner_product(triv, lef)
    refl_lef = [
        inner_product(component_reflection_character(group, i).materialized(), lef)
        for i in range(len(datum.cartan_type.components))
    ]
    report = _assemble(datum, genus, "enumeration", triv_lef, refl_lef)
    chi_s = reflection_character(group)
    hom_dim = inner_product(chi_s, h1)
    if hom_dim != report.hom_dim:
        raise AssertionError(
            "full scalar product disagrees with the assembled pairings"
        )
    return report


def prym_dimension(datum: RootDatum, group: WeylGroup, genus: int) -> DimensionReport:
    """Run the closed form, add the enumeration check when available."""
    analytic = prym_dimension_analytic(datum, group, genus)
    if not group.has_enumeration:
        return analytic
    enumerated = prym_dimension_enumerated(datum, group, genus)
    agreement = dimension_reports_agree(analytic, enumerated)
    return replace(
        analytic, strategy="closed_form+enumeration", strategy_agreement=agreement
    )


def dimension_reports_agree(a: DimensionReport, b: DimensionReport) -> bool:
    return (
        a.hom_dim == b.hom_dim
        and a.triv_lefschetz == b.triv_lefschetz
        and a.reflection_lefschetz == b.reflection_lefschetz
        and a.triv_h1 == b.triv_h1
        and a.reflection_h1 == b.reflection_h1
    )
