"""Acceptance suite: one test per criterion, printing one PASS/FAIL line each.

Every check is an exact integer identity (tolerance zero); bounds and
counts use exact big-integer arithmetic.  Run with ``pytest -s`` to see
the per-criterion lines.
"""

import json
import time

import pytest

from hitchin_prym import (
    ClassFunction,
    component_reflection_character,
    cover_stats,
    exceptional_roots,
    fiber_bound,
    h1_character,
    induced_character,
    inner_product,
    lefschetz_character,
    moduli_dimension,
    pgl2_exact_count,
    prym_dimension_analytic,
    prym_dimension_enumerated,
    root_orbits,
    trivial_character,
)
from hitchin_prym.pipeline import run, sweep
from hitchin_prym.schemas import RunSpec
from support import GRID_GENERA, GRID_TYPES, LATTICES, datum, group

ENUM_BOUND = 1152  # covers every rank <= 4 type, F4 included


def _report(number, ok, detail):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_dimension_identity():
    started = time.perf_counter()
    checked = 0
    for name in GRID_TYPES:
        for lattice in LATTICES:
            d = datum(name, lattice)
            w = group(name, lattice, cap=1)  # closed form only
            for g in GRID_GENERA:
                r = prym_dimension_analytic(d, w, g)
                expected = (g - 1) * d.dim_group + d.central_rank
                assert r.prym_dim == expected == moduli_dimension(d, g), (
                    name, lattice, g)
                checked += 1
    elapsed = time.perf_counter() - started
    _report(
        1,
        checked == len(GRID_TYPES) * len(LATTICES) * len(GRID_GENERA)
        and elapsed < 1.0,
        f"dim P == (g-1) dim G + h on {checked} runs in {elapsed:.2f}s",
    )


def test_criterion_2_oracle_agreement():
    started = time.perf_counter()
    checked = 0
    for name in GRID_TYPES:
        for lattice in LATTICES:
            w = group(name, lattice)
            assert w.order <= ENUM_BOUND
            for g in (2, 3):
                analytic = prym_dimension_analytic(w.datum, w, g)
                enumerated = prym_dimension_enumerated(w.datum, w, g)
                assert analytic.hom_dim == enumerated.hom_dim, (name, lattice, g)
                checked += 1
    elapsed = time.perf_counter() - started
    _report(
        2,
        elapsed < 10.0,
        f"enumerated M == closed-form M on {checked} runs in {elapsed:.2f}s",
    )


def test_criterion_3_intermediate_equations():
    checked = 0
    for name in GRID_TYPES:
        for lattice in LATTICES:
            w = group(name, lattice)
            d = w.datum
            orbits = root_orbits(w)
            for g in (2, 3):
                cov = cover_stats(d, w, g)
                lef = lefschetz_character(w, cov).materialized()
                triv = trivial_character(w).materialized()
                assert inner_product(triv, lef) == 2 - 2 * g, (name, lattice, g)
                for i, (_, rank) in enumerate(d.cartan_type.components):
                    in_i = sum(
                        cov.orbit_counts[j]
                        for j in range(len(orbits))
                        if d.component_of_root[orbits[j][0]] == i
                    )
                    lhs = inner_product(
                        component_reflection_character(w, i).materialized(), lef
                    )
                    assert lhs == (2 - 2 * g) * rank - in_i, (name, lattice, g, i)
                checked += 1
    _report(3, True, f"trivial/reflection pairings against L exact on {checked} runs")


def test_criterion_4_frobenius_reciprocity():
    checked = 0
    for name in GRID_TYPES:
        for lattice in LATTICES:
            w = group(name, lattice)
            triv = trivial_character(w).materialized()
            for j in range(len(root_orbits(w))):
                ind = induced_character(w, j).materialized()
                assert inner_product(triv, ind) == 1, (name, lattice, j)
                checked += 1
    _report(4, True, f"<triv, Ind_j> == 1 by full summation on {checked} orbits")


def test_criterion_5_cover_combinatorics():
    checked = 0
    for name in GRID_TYPES:
        for lattice in LATTICES:
            w = group(name, lattice)
            d = w.datum
            orbits = root_orbits(w)
            family = d.cartan_type.components[0][0]
            expected_orbits = 1 if family in "ADE" else 2
            assert len(orbits) == expected_orbits, (name,)
            for g in GRID_GENERA:
                cov = cover_stats(d, w, g)
                assert cov.branch_count == d.num_roots * (2 * g - 2)
                assert sum(cov.orbit_counts) == cov.branch_count
                assert cov.branch_fiber_size == w.order // 2
                h1 = h1_character(w, cov)
                expected_h1 = 2 * (1 + w.order * (g - 1) * (1 + d.num_positive))
                assert h1.value_at_identity() == expected_h1
                assert h1.materialized().values[w.identity_index] == expected_h1
                checked += 1
    _report(5, True, f"branch counts, orbit sums and H1(1) exact on {checked} runs")


def test_criterion_6_injectivity_and_bounds():
    # SL(n), n <= 5
    for n in range(2, 6):
        d = datum(f"A{n - 1}")
        r = fiber_bound(d, group(f"A{n - 1}"), 2)
        assert r.injective and r.exceptional_count == 0 and r.bound == 1, (n,)
    # adjoint D4
    r = fiber_bound(datum("D4", "adjoint"), group("D4", "adjoint"), 2)
    assert r.injective and r.exceptional_count == 0
    # adjoint B_l: the exceptional set is exactly the short positive roots
    for l in (2, 3, 4):
        d = datum(f"B{l}", "adjoint")
        failing = exceptional_roots(d)
        shorts = tuple(
            i for i in range(d.num_positive) if d.root_norm(i) == 1
        )
        assert failing == shorts and len(failing) == l, (l,)
    # PGl(2) exact counts
    for g in GRID_GENERA:
        r = fiber_bound(datum("A1", "adjoint"), group("A1", "adjoint"), g)
        assert r.pullback_degree == 4 * g - 4
        assert r.bound == 2 ** (4 * g - 5)
        counts = pgl2_exact_count(g)
        assert counts.per_component_fiber == 2 ** (4 * g - 6)
        assert counts.invariant_pullback_quotient == 2 ** (4 * g - 5)
        assert r.pgl2 == counts
    _report(6, True, "SL(n)/D4 injective, adjoint B_l short-root sets, PGl(2) powers")


def test_criterion_7_pgl2_worked_example():
    r = run(RunSpec(group="A1", lattice="adjoint", genus=2))
    ok = (
        r.fiber.pgl2 is not None
        and r.fiber.pgl2.components == 2
        and r.fiber.pgl2.per_component_fiber == "4"
        and r.fiber.bound == "8"
        and int(r.fiber.pgl2.per_component_fiber) < int(r.fiber.bound)
    )
    _report(7, ok, "two components with fiber 4 < bound 8 at genus 2")


def test_criterion_8_determinism_and_e8():
    def strip(report):
        data = report.model_dump()
        data.pop("timing_ms")
        return json.dumps(data, sort_keys=True)

    first = [strip(r) for r in sweep("smoke")]
    second = [strip(r) for r in sweep("smoke")]
    assert first == second

    started = time.perf_counter()
    r = run(RunSpec(group="E8", genus=2))
    elapsed = time.perf_counter() - started
    assert r.dimension.prym_dim == 248
    assert r.dimension.strategies == ["closed_form"]
    assert not r.datum.enumerated
    _report(
        8,
        elapsed < 1.0,
        f"sweep JSON identical; E8 closed-form dim P = 248 in {elapsed:.3f}s",
    )
