"""Pydantic request/response models shared by the service and the CLI.

Values that can exceed 64 bits (Weyl orders of products, the fibre bounds)
are serialized as decimal strings; everything else is a plain JSON number.
The report schema is versioned through ``schema_version``.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1

DEFAULT_ENUMERATION_CAP = 2_000_000


class RunSpec(BaseModel):
    """One pipeline invocation: a group, a lattice and a genus."""

    model_config = ConfigDict(extra="forbid")

    group: str = ""
    lattice: str = "simply_connected"
    custom_basis: list[list[int]] | None = None
    central_rank: int = Field(default=0, ge=0)
    genus: int = Field(ge=2)
    enumeration_cap: int = Field(default=DEFAULT_ENUMERATION_CAP, ge=1)
    verify: bool = False
    output_format: Literal["text", "json"] = "text"


class OrbitSummary(BaseModel):
    index: int
    component: int
    size: int
    length: Literal["long", "short", "all"]
    representative: list[int]
    point_count: int


class DatumSummary(BaseModel):
    components: list[str]
    lattice: str
    central_rank: int
    rank: int
    num_roots: int
    num_positive_roots: int
    dim_group: int
    weyl_order: str
    enumerated: bool
    derived_simply_connected: bool
    orbits: list[OrbitSummary]


class CoverSummary(BaseModel):
    genus: int
    deg_canonical: int
    branch_count: int
    orbit_point_counts: list[int]
    branch_fiber_size: int
    ramification_divisor_size: int
    spectral_genus: int
    pullback_degree: int


class DimensionSummary(BaseModel):
    hom_dim: int
    prym_dim: int
    moduli_dim: int
    strategies: list[str]
    strategy_agreement: bool | None
    triv_lefschetz: int
    reflection_lefschetz: list[int]
    triv_h1: int
    reflection_h1: list[int]


class Pgl2Summary(BaseModel):
    components: int
    per_component_fiber: str
    pullback_degree: int
    invariant_pullback_quotient: str


class FiberSummary(BaseModel):
    injective: bool
    reason: str
    exceptional_count: int
    exceptional_roots: list[list[int]]
    pullback_degree: int
    bound: str
    pgl2: Pgl2Summary | None


class Report(BaseModel):
    """Full pipeline output; round-trips losslessly through JSON."""

    schema_version: int = SCHEMA_VERSION
    spec: RunSpec
    datum: DatumSummary
    cover: CoverSummary
    dimension: DimensionSummary
    fiber: FiberSummary
    timing_ms: float


class SweepRequest(BaseModel):
    preset: str
