"""Orchestration: RunSpec in, Report out.

This is the single entry point behind both the HTTP service and the CLI.
A run builds the root datum, generates the Weyl group (enumerating it only
below the cap), and collects cover statistics, dimension reports and the
fibre analysis into one serializable Report.  Output is deterministic for
a fixed RunSpec except for the timing field.
"""

from __future__ import annotations

import time

from .errors import GroupSpecError, VerificationError
from .fiber import fiber_bound
from .prym import (
    dimension_reports_agree,
    prym_dimension_analytic,
    prym_dimension_enumerated,
)
from .root_datum import (
    CartanType,
    LatticeSpec,
    RootDatum,
    build_root_datum,
    derived_group_is_simply_connected,
    parse_group_spec,
)
from .schemas import (
    CoverSummary,
    DatumSummary,
    DimensionSummary,
    FiberSummary,
    OrbitSummary,
    Pgl2Summary,
    Report,
    RunSpec,
)
from .spectral import cover_stats
from .weyl import WeylGroup, generate, root_orbits

SWEEP_PRESETS: dict[str, list[RunSpec]] = {}


def _grid(types, lattices, genera, **kwargs):
    return [
        RunSpec(group=t, lattice=lat, genus=g, output_format="json", **kwargs)
        for t in types
        for lat in lattices
        for g in genera
    ]


SWEEP_PRESETS["smoke"] = _grid(
    ["A1", "A2"], ["simply_connected", "adjoint"], [2]
) + [RunSpec(group="", central_rank=1, genus=2, output_format="json")]

SWEEP_PRESETS["acceptance"] = _grid(
    ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"],
    ["simply_connected", "adjoint"],
    [2, 3, 4],
)

# large exceptional groups, closed form only (cap 1 skips enumeration)
SWEEP_PRESETS["exceptional"] = _grid(
    ["E6", "E7", "E8"], ["simply_connected", "adjoint"], [2], enumeration_cap=1
)


def build_datum(spec: RunSpec) -> RootDatum:
    components, embedded_lattice, embedded_central = parse_group_spec(spec.group)
    if embedded_lattice is not None or embedded_central is not None:
        # the CLI resolves grammar keys before building a RunSpec; a RunSpec
        # itself carries lattice and central rank as dedicated fields
        raise GroupSpecError(
            "group string must list components only; "
            "set lattice and central_rank through their own fields"
        )
    cartan = CartanType(components, spec.central_rank)
    if spec.lattice == "custom" or spec.custom_basis is not None:
        lattice = LatticeSpec.custom(spec.custom_basis or ())
    else:
        lattice = LatticeSpec(spec.lattice)
    return build_root_datum(cartan, lattice)


def _orbit_summaries(datum, group, cover) -> list[OrbitSummary]:
    orbits = root_orbits(group)
    summaries = []
    for j, orbit in enumerate(orbits):
        component = datum.component_of_root[orbit[0]]
        in_component = [
            o for o in orbits if datum.component_of_root[o[0]] == component
        ]
        if len(in_component) == 1:
            length = "all"
        else:
            longest = max(datum.root_norm(o[0]) for o in in_component)
            length = "long" if datum.root_norm(orbit[0]) == longest else "short"
        rep = min(i for i in orbit if datum.is_positive(i))
        summaries.append(
            OrbitSummary(
                index=j,
                component=component,
                size=len(orbit),
                length=length,
                representative=list(datum.roots[rep]),
                point_count=cover.orbit_counts[j],
            )
        )
    return summaries


def run(spec: RunSpec) -> Report:
    """Execute the full pipeline for one specification."""
    started = time.perf_counter()
    datum = build_datum(spec)
    group = generate(datum, spec.enumeration_cap)
    cover = cover_stats(datum, group, spec.genus)

    analytic = prym_dimension_analytic(datum, group, spec.genus)
    strategies = ["closed_form"]
    agreement = None
    if group.has_enumeration:
        enumerated = prym_dimension_enumerated(datum, group, spec.genus)
        strategies.append("enumeration")
        agreement = dimension_reports_agree(analytic, enumerated)
        if spec.verify and not agreement:
            raise VerificationError(_disagreement_dump(analytic, enumerated))

    fib = fiber_bound(datum, group, spec.genus)

    report = Report(
        spec=spec,
        datum=DatumSummary(
            components=[f"{f}{r}" for f, r in datum.cartan_type.components],
            lattice=datum.lattice.kind,
            central_rank=datum.central_rank,
            rank=datum.rank,
            num_roots=datum.num_roots,
            num_positive_roots=datum.num_positive,
            dim_group=datum.dim_group,
            weyl_order=str(group.order),
            enumerated=group.has_enumeration,
            derived_simply_connected=derived_group_is_simply_connected(datum),
            orbits=_orbit_summaries(datum, group, cover),
        ),
        cover=CoverSummary(
            genus=cover.genus,
            deg_canonical=cover.deg_canonical,
            branch_count=cover.branch_count,
            orbit_point_counts=list(cover.orbit_counts),
            branch_fiber_size=cover.branch_fiber_size,
            ramification_divisor_size=cover.ramification_divisor_size,
            spectral_genus=cover.spectral_genus,
            pullback_degree=cover.pullback_degree,
        ),
        dimension=DimensionSummary(
            hom_dim=analytic.hom_dim,
            prym_dim=analytic.prym_dim,
            moduli_dim=analytic.moduli_dim,
            strategies=strategies,
            strategy_agreement=agreement,
            triv_lefschetz=analytic.triv_lefschetz,
            reflection_lefschetz=list(analytic.reflection_lefschetz),
            triv_h1=analytic.triv_h1,
            reflection_h1=list(analytic.reflection_h1),
        ),
        fiber=FiberSummary(
            injective=fib.injective,
            reason=fib.reason,
            exceptional_count=fib.exceptional_count,
            exceptional_roots=[list(datum.roots[i]) for i in fib.exceptional_roots],
            pullback_degree=fib.pullback_degree,
            bound=str(fib.bound),
            pgl2=None
            if fib.pgl2 is None
            else Pgl2Summary(
                components=fib.pgl2.components,
                per_component_fiber=str(fib.pgl2.per_component_fiber),
                pullback_degree=fib.pgl2.pullback_degree,
                invariant_pullback_quotient=str(
                    fib.pgl2.invariant_pullback_quotient
                ),
            ),
        ),
        timing_ms=(time.perf_counter() - started) * 1000.0,
    )
    return report


def _disagreement_dump(analytic, enumerated) -> str:
    lines = ["closed form and enumeration disagree:"]
    for field in (
        "hom_dim",
        "triv_lefschetz",
        "reflection_lefschetz",
        "triv_h1",
        "reflection_h1",
    ):
        a, b = getattr(analytic, field), getattr(enumerated, field)
        if a != b:
            lines.append(f"  {field}: closed_form={a} enumeration={b}")
    return "\n".join(lines)


def sweep(preset: str) -> list[Report]:
    """Run a built-in grid of specifications, in a fixed order."""
    if preset not in SWEEP_PRESETS:
        raise KeyError(
            f"unknown sweep preset {preset!r}; "
            f"available: {', '.join(sorted(SWEEP_PRESETS))}"
        )
    return [run(spec) for spec in SWEEP_PRESETS[preset]]
