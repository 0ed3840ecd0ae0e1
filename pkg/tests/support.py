"""Shared builders for the test grid, cached so repeated tests stay fast."""

from __future__ import annotations

from functools import lru_cache

from hitchin_prym import (
    CartanType,
    LatticeSpec,
    build_root_datum,
    generate,
    parse_group_spec,
)

# every simple type of rank <= 4
GRID_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2")
LATTICES = ("simply_connected", "adjoint")
GRID_GENERA = (2, 3, 4)


def cartan(spec: str, central: int = 0) -> CartanType:
    components, _, _ = parse_group_spec(spec)
    return CartanType(components, central)


@lru_cache(maxsize=None)
def datum(spec: str, lattice: str = "simply_connected", central: int = 0):
    return build_root_datum(cartan(spec, central), LatticeSpec(lattice))


@lru_cache(maxsize=None)
def group(spec: str, lattice: str = "simply_connected", central: int = 0,
          cap: int = 2_000_000):
    return generate(datum(spec, lattice, central), cap)
