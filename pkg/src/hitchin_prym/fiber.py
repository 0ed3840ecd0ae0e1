"""Fiber analysis of the abelianization map.

The map from a Hitchin fibre to the generalized Prym variety is injective
when the derived group is simply connected, or when no Dynkin component is
of type B (rank-1 components count as B_1 here), or more generally when
every root admits a character pairing to 1 with its coroot.  When roots
fail that pairing condition the fibre is bounded by a power of two whose
exponent involves the number a of failing positive roots and the degree d
of the pulled-back canonical bundle.  For the adjoint rank-1 group the
exact generic count is known and reported alongside the bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._intmat import content
from .errors import GenusError
from .root_datum import RootDatum, root_admits_unit_pairing
from .weyl import WeylGroup

REASON_SIMPLY_CONNECTED = "simply_connected_derived"
REASON_NO_B_COMPONENT = "no_B_component"
REASON_UNIT_PAIRING = "unit_pairing"
REASON_NOT_GUARANTEED = "not_guaranteed"


@dataclass(frozen=True)
class Pgl2FiberCount:
    """Exact fibre data of the adjoint rank-1 abelianization.

    The Hitchin fibre splits into two connected components (lifts of a
    bundle differ by the parity of the degree); each component maps onto
    the classical Prym variety with generic fibre of order 2^(d-2), while
    the invariant-pullback quotient realizes the full 2^(d-1)."""

    components: int
    per_component_fiber: int
    pullback_degree: int
    invariant_pullback_quotient: int


@dataclass(frozen=True)
class FiberReport:
    """Injectivity verdict and fibre-size bound of the abelianization map.

    ``exceptional_roots`` lists the positive roots with no unit pairing;
    the map is injective exactly when that list is empty.  ``reason``
    refines the verdict: one of the two named sufficient conditions, the
    fallback unit-pairing mechanism, or ``not_guaranteed``."""

    injective: bool
    reason: str
    exceptional_roots: tuple[int, ...]
    exceptional_count: int
    pullback_degree: int
    bound: int
    pgl2: Pgl2FiberCount | None = None


def _is_b_like(family: str, rank: int) -> bool:
    # A1 is B1: its only other roots pair evenly with the coroot
    return family == "B" or (family == "A" and rank == 1)


def injectivity_verdict(datum: RootDatum) -> str:
    """Type-based verdict from the two named sufficient conditions.

    Checked in order: simply connected derived group first, then absence
    of B-type components (with C2 stored as B2 and rank-1 components
    counted as B_1).  ``not_guaranteed`` only means neither named
    condition applies; see :func:`fiber_bound` for the sharper test.
    """
    from .root_datum import derived_group_is_simply_connected

    if derived_group_is_simply_connected(datum):
        return REASON_SIMPLY_CONNECTED
    if not any(_is_b_like(f, r) for f, r in datum.cartan_type.components):
        return REASON_NO_B_COMPONENT
    return REASON_NOT_GUARANTEED


def exceptional_roots(datum: RootDatum) -> tuple[int, ...]:
    """Positive roots without a unit pairing, in canonical index order."""
    return tuple(
        i
        for i in range(datum.num_positive)
        if not root_admits_unit_pairing(datum, i)
    )


def _is_adjoint_rank1(datum: RootDatum) -> bool:
    return (
        datum.cartan_type.components == (("A", 1),)
        and datum.central_rank == 0
        and content(datum.coroots[0]) == 2
    )


def fiber_bound(datum: RootDatum, group: WeylGroup, genus: int) -> FiberReport:
    """Assemble the injectivity verdict and the 2^(a(d-1)) fibre bound.

    The bound collapses to 1 whenever the exceptional set is empty, which
    already happens under either named condition; exact big-integer
    arithmetic throughout.
    """
    if genus < 2:
        raise GenusError(f"genus must be >= 2, got {genus}")
    degree = group.order * (2 * genus - 2)
    failing = exceptional_roots(datum)
    verdict = injectivity_verdict(datum)
    if verdict != REASON_NOT_GUARANTEED:
        if failing:
            raise AssertionError(
                "named injectivity condition holds but some root has no unit pairing"
            )
        injective, reason = True, verdict
    elif not failing:
        injective, reason = True, REASON_UNIT_PAIRING
    else:
        injective, reason = False, REASON_NOT_GUARANTEED
    a = len(failing)
    bound = 1 if injective else 2 ** (a * (degree - 1))
    pgl2 = None
    if _is_adjoint_rank1(datum):
        pgl2 = pgl2_exact_count(genus)
        if pgl2.pullback_degree != degree:
            raise AssertionError("rank-1 pullback degree mismatch")
    return FiberReport(
        injective=injective,
        reason=reason,
        exceptional_roots=failing,
        exceptional_count=a,
        pullback_degree=degree,
        bound=bound,
        pgl2=pgl2,
    )


def pgl2_exact_count(genus: int) -> Pgl2FiberCount:
    """Exact generic fibre of the adjoint rank-1 abelianization map.

    The double cover has pullback degree d = 4g - 4; each of the two
    Hitchin-fibre components has generic fibre 2^(d-2) and the group of
    involution-invariant bundles modulo pullbacks has order 2^(d-1).
    """
    if genus < 2:
        raise GenusError(f"genus must be >= 2, got {genus}")
    degree = 4 * genus - 4
    return Pgl2FiberCount(
        components=2,
        per_component_fiber=2 ** (degree - 2),
        pullback_degree=degree,
        invariant_pullback_quotient=2 ** (degree - 1),
    )
