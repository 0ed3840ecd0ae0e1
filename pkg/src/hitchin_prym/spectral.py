"""Combinatorics of the spectral cover of a genus-g curve.

The cover has |W| sheets, branches over a divisor of degree |R|(2g - 2),
and carries simple ramification at every point above the branch locus.
Only the generic-position counts are computed here; smoothness and
irreducibility of the cover are assumptions, not checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GenusError
from .root_datum import RootDatum
from .weyl import WeylGroup, root_orbits


@dataclass(frozen=True)
class CoverStats:
    """Exact counts attached to the spectral cover.

    ``orbit_counts[j]`` is the number of branch points whose fibre pattern
    matches root orbit j; ``pullback_degree`` is the degree of the pulled
    back canonical bundle, which also equals the number of ramification
    points lying over any single orbit's branch points divided by the
    orbit's positive-root count.
    """

    genus: int
    deg_canonical: int            # 2g - 2
    branch_count: int             # |R| (2g - 2)
    orbit_counts: tuple[int, ...]  # |R_j| (2g - 2) per orbit
    branch_fiber_size: int        # |W| / 2 (0 for the identity cover)
    ramification_divisor_size: int  # |W| (2g - 2), per positive root
    spectral_genus: int           # 1 + |W| (g - 1) (1 + |R+|)
    pullback_degree: int          # |W| (2g - 2)
    weyl_order: int
    num_roots: int
    num_positive: int


def cover_stats(datum: RootDatum, group: WeylGroup, genus: int) -> CoverStats:
    """Branch counts, per-orbit point counts and the genus of the cover.

    For a central torus the cover is the identity and the statistics
    degenerate to the base curve.
    """
    if genus < 2:
        raise GenusError(f"genus must be >= 2, got {genus}")
    deg_k = 2 * genus - 2
    order = group.order
    orbits = root_orbits(group)
    branch_count = datum.num_roots * deg_k
    orbit_counts = tuple(len(orbit) * deg_k for orbit in orbits)
    if sum(orbit_counts) != branch_count:
        raise AssertionError("orbit point counts do not add up to the branch degree")
    return CoverStats(
        genus=genus,
        deg_canonical=deg_k,
        branch_count=branch_count,
        orbit_counts=orbit_counts,
        branch_fiber_size=order // 2,
        ramification_divisor_size=order * deg_k,
        spectral_genus=1 + order * (genus - 1) * (1 + datum.num_positive),
        pullback_degree=order * deg_k,
        weyl_order=order,
        num_roots=datum.num_roots,
        num_positive=datum.num_positive,
    )


def spectral_genus(stats: CoverStats) -> int:
    """Genus of the cover via the Hurwitz count with simple ramification."""
    two_g_minus_2 = stats.weyl_order * stats.deg_canonical * (1 + stats.num_positive)
    if two_g_minus_2 % 2 or 1 + two_g_minus_2 // 2 != stats.spectral_genus:
        raise AssertionError("inconsistent cover statistics")
    return stats.spectral_genus
