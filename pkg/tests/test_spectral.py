"""Spectral cover counts: branch degrees, orbit points, and the cover genus."""

import pytest

from hitchin_prym import (
    GenusError,
    cover_stats,
    h1_character,
    root_orbits,
    spectral_genus,
)
from support import GRID_TYPES, LATTICES, GRID_GENERA, group


def test_a1_genus2_example():
    w = group("A1")
    cov = cover_stats(w.datum, w, 2)
    assert cov.branch_count == 4
    assert cov.orbit_counts == (4,)
    assert cov.branch_fiber_size == 1
    assert cov.spectral_genus == 5
    assert cov.pullback_degree == 4
    assert cov.ramification_divisor_size == 4
    # Euler characteristic cross-check: 2 - 2g~ = chi_L(1)
    assert 2 - 2 * cov.spectral_genus == -8


def test_g2_genus2_example():
    w = group("G2")
    cov = cover_stats(w.datum, w, 2)
    assert cov.branch_count == 24
    assert cov.orbit_counts == (12, 12)
    assert cov.branch_fiber_size == 6
    assert cov.pullback_degree == 24


def test_a2_spectral_genus():
    w = group("A2")
    assert cover_stats(w.datum, w, 2).spectral_genus == 25


def test_torus_cover_is_trivial():
    w = group("", central=1)
    cov = cover_stats(w.datum, w, 3)
    assert cov.branch_count == 0
    assert cov.orbit_counts == ()
    assert cov.spectral_genus == 3
    assert cov.branch_fiber_size == 0
    assert cov.pullback_degree == 2 * 3 - 2


def test_rejects_small_genus():
    w = group("A1")
    with pytest.raises(GenusError):
        cover_stats(w.datum, w, 1)


@pytest.mark.parametrize("name", GRID_TYPES)
@pytest.mark.parametrize("lattice", LATTICES)
@pytest.mark.parametrize("g", GRID_GENERA)
def test_cover_invariants(name, lattice, g):
    w = group(name, lattice)
    d = w.datum
    cov = cover_stats(d, w, g)
    deg_k = 2 * g - 2
    assert cov.deg_canonical == deg_k
    assert cov.branch_count == d.num_roots * deg_k
    assert sum(cov.orbit_counts) == cov.branch_count
    orbits = root_orbits(w)
    for j, orbit in enumerate(orbits):
        assert cov.orbit_counts[j] == len(orbit) * deg_k
    assert cov.branch_fiber_size == w.order // 2
    assert cov.ramification_divisor_size == w.order * deg_k
    assert cov.pullback_degree == w.order * deg_k
    # Hurwitz: 2g~ - 2 = |W|(2g-2) + |R+| |W| (2g-2), all ramification simple
    assert 2 * cov.spectral_genus - 2 == w.order * deg_k * (1 + d.num_positive)
    # total ramification upstairs, counted two ways
    assert cov.branch_count * w.order // 2 == d.num_positive * w.order * deg_k
    assert spectral_genus(cov) == cov.spectral_genus


@pytest.mark.parametrize("name", ["A1", "B2", "B3", "G2"])
@pytest.mark.parametrize("g", [2, 3, 4])
def test_spectral_genus_against_h1(name, g):
    w = group(name)
    cov = cover_stats(w.datum, w, g)
    assert h1_character(w, cov).value_at_identity() == 2 * spectral_genus(cov)
