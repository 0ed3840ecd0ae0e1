"""Class functions on the Weyl group and their exact inner products.

The representations in play are the trivial character, the regular
character, the reflection character of each Dynkin component, and the
characters induced from the trivial representation of the order-2
subgroups {1, s} attached to the root orbits.  The Lefschetz character of
the spectral cover and the first-cohomology character are integer
combinations of these.

Every class function carries one or both of two strategies:

* ``values`` - an explicit integer value per enumerated group element;
* ``combo``  - a formal integer combination of the basis characters, on
  which inner products evaluate analytically through a closed pairing
  table.

The two routes are independent and must agree; the enumeration route is
the brute-force oracle for the analytic one.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

from ._intmat import trace
from .errors import StrategyUnavailableError
from .spectral import CoverStats
from .weyl import WeylGroup, induced_character_values, orbit_representative, root_orbits

# combo keys: ("triv",), ("reg",), ("refl", component), ("ind", orbit)
Combo = dict[tuple, int]


class ClassFunction:
    """Integer-valued class function on a Weyl group."""

    __slots__ = ("group", "values", "combo")

    def __init__(self, group: WeylGroup, values=None, combo: Combo | None = None):
        if values is None and combo is None:
            raise ValueError("a class function needs values or a combination")
        self.group = group
        self.values = None if values is None else tuple(values)
        self.combo = None if combo is None else {k: int(v) for k, v in combo.items() if v}
        if self.values is not None and group.elements is not None:
            if len(self.values) != len(group.elements):
                raise ValueError("value table does not match the element list")

    def value_at_identity(self) -> int:
        if self.values is not None:
            return self.values[self.group.identity_index]
        group = self.group
        total = 0
        for key, c in self.combo.items():
            total += c * _basis_dimension(group, key)
        return total

    def materialized(self) -> "ClassFunction":
        """Return an equivalent function with an explicit value table."""
        if self.values is not None:
            return self
        self.group.require_enumeration()
        n = len(self.group.elements)
        acc = [0] * n
        for key, c in self.combo.items():
            basis = _basis_values(self.group, key)
            for i in range(n):
                acc[i] += c * basis[i]
        return ClassFunction(self.group, values=acc, combo=self.combo)


def _basis_dimension(group: WeylGroup, key) -> int:
    kind = key[0]
    if kind == "triv":
        return 1
    if kind == "reg":
        return group.order
    if kind == "refl":
        return group.datum.cartan_type.components[key[1]][1]
    if kind == "ind":
        return group.order // 2
    raise KeyError(key)


def _component_trace(group: WeylGroup, component: int, perm) -> int:
    """Trace of a group element on the root span of one component.

    The images of the component's simple roots are roots again, so the
    trace is read off from their simple-root coefficient vectors.
    """
    datum = group.datum
    simple = datum.component_simple[component]
    return sum(
        datum.root_coeffs[perm[gi]][k] for k, gi in enumerate(simple)
    )


def _basis_values(group: WeylGroup, key) -> tuple[int, ...]:
    group.require_enumeration()
    kind = key[0]
    n = len(group.elements)
    if kind == "triv":
        return (1,) * n
    if kind == "reg":
        vals = [0] * n
        vals[group.identity_index] = group.order
        return tuple(vals)
    if kind == "refl":
        return tuple(
            _component_trace(group, key[1], p) for p in group.element_perms
        )
    if kind == "ind":
        return induced_character_values(group, key[1])
    raise KeyError(key)


def trivial_character(group: WeylGroup) -> ClassFunction:
    return ClassFunction(group, combo={("triv",): 1})


def regular_character(group: WeylGroup) -> ClassFunction:
    return ClassFunction(group, combo={("reg",): 1})


def component_reflection_character(group: WeylGroup, component: int) -> ClassFunction:
    return ClassFunction(group, combo={("refl", component): 1})


def induced_character(group: WeylGroup, orbit: int) -> ClassFunction:
    return ClassFunction(group, combo={("ind", orbit): 1})


def reflection_character(group: WeylGroup) -> ClassFunction:
    """Character of W on X(T) tensor C.

    Decomposes as h copies of the trivial character plus one reflection
    character per component; when the element list is present the explicit
    values are matrix traces, so the two routes cross-check each other.
    """
    datum = group.datum
    combo: Combo = {}
    if datum.central_rank:
        combo[("triv",)] = datum.central_rank
    for i in range(len(datum.cartan_type.components)):
        combo[("refl", i)] = 1
    values = None
    if group.has_enumeration:
        values = tuple(trace(m) for m in group.elements)
    return ClassFunction(group, values=values, combo=combo)


def _check_cover(group: WeylGroup, cover: CoverStats):
    if cover.weyl_order != group.order or cover.num_roots != group.datum.num_roots:
        raise ValueError("cover statistics belong to a different datum")
    if len(cover.orbit_counts) != len(root_orbits(group)):
        raise ValueError("cover statistics belong to a different orbit list")


def lefschetz_character(group: WeylGroup, cover: CoverStats) -> ClassFunction:
    """Alternating-sum character of W on the cohomology of the cover.

    Equals (2 - 2g - |Ram|) copies of the regular character plus n_j copies
    of each orbit's induced character; only this combination of the chain
    ranks enters, pinned by the Euler characteristic of the base curve.
    """
    _check_cover(group, cover)
    combo: Combo = {("reg",): 2 - 2 * cover.genus - cover.branch_count}
    for j, nj in enumerate(cover.orbit_counts):
        combo[("ind", j)] = nj
    values = None
    if group.has_enumeration:
        values = ClassFunction(group, combo=combo).materialized().values
    return ClassFunction(group, values=values, combo=combo)


def h1_character(group: WeylGroup, cover: CoverStats) -> ClassFunction:
    """Character of W on the first cohomology of the cover (2*triv - Lefschetz)."""
    lef = lefschetz_character(group, cover)
    combo: Combo = {("triv",): 2}
    for key, c in lef.combo.items():
        combo[key] = combo.get(key, 0) - c
    values = None
    if lef.values is not None:
        values = tuple(2 - v for v in lef.values)
        if values[group.identity_index] != 2 * cover.spectral_genus:
            raise AssertionError("H1 dimension disagrees with the spectral genus")
    return ClassFunction(group, values=values, combo=combo)


def _orbit_in_component(group: WeylGroup, component: int, orbit: int) -> bool:
    rep = orbit_representative(group, orbit)
    return group.datum.component_of_root[rep] == component


def restriction_inner_product(group: WeylGroup, component: int, orbit: int) -> int:
    """Multiplicity of the trivial character in the reflection character of
    one component restricted to the order-2 subgroup of one orbit.

    dim S - 1 when the orbit's roots lie in the component (the reflection
    fixes a hyperplane there), dim S otherwise (it acts trivially).  Always
    verified against (chi(1) + chi(s))/2 computed from the reflection.
    """
    components = group.datum.cartan_type.components
    if not 0 <= component < len(components):
        raise IndexError(f"component index {component} out of range")
    orbits = root_orbits(group)
    if not 0 <= orbit < len(orbits):
        raise IndexError(f"orbit index {orbit} out of range")
    dim = components[component][1]
    expected = dim - 1 if _orbit_in_component(group, component, orbit) else dim
    s_perm = group.reflection_perm(orbit_representative(group, orbit))
    at_s = _component_trace(group, component, s_perm)
    if (dim + at_s) % 2 or (dim + at_s) // 2 != expected:
        raise AssertionError("restriction multiplicity check failed")
    return expected


def _basis_inner(group: WeylGroup, x, y):
    """Inner product of two basis characters, analytic closed forms."""
    kinds = (x[0], y[0])
    if "triv" in kinds:
        # trivial occurs once in reg and once in every induced character
        other = y if x[0] == "triv" else x
        return 0 if other[0] == "refl" else 1
    if "reg" in kinds:
        # <reg, V> = dim V
        other = y if x[0] == "reg" else x
        return _basis_dimension(group, other)
    if kinds == ("refl", "refl"):
        return int(x[1] == y[1])
    if kinds == ("refl", "ind"):
        return restriction_inner_product(group, x[1], y[1])
    if kinds == ("ind", "refl"):
        return restriction_inner_product(group, y[1], x[1])
    raise StrategyUnavailableError(
        "no analytic product of two induced characters; enumerate the group"
    )


def inner_product(f: ClassFunction, h: ClassFunction):
    """Exact scalar product (1/|W|) sum f(w) h(w).

    All characters here are real-valued, so no conjugation is involved.
    Prefers explicit value tables, falls back to the analytic pairing
    table, then to materializing; raises when no strategy applies.
    Returns an int whenever the result is integral (always the case for
    virtual characters), otherwise a Fraction.
    """
    if f.group is not h.group:
        raise ValueError("class functions live on different groups")
    group = f.group
    if f.values is not None and h.values is not None:
        total = sum(a * b for a, b in zip(f.values, h.values))
        result = Fraction(total, group.order)
        return int(result) if result.denominator == 1 else result
    if f.combo is not None and h.combo is not None:
        try:
            total = 0
            for kx, cx in f.combo.items():
                for ky, cy in h.combo.items():
                    total += cx * cy * _basis_inner(group, kx, ky)
            return total
        except StrategyUnavailableError:
            if group.has_enumeration:
                return inner_product(f.materialized(), h.materialized())
            raise
    # one side is explicit-only, the other analytic-only
    if group.has_enumeration:
        return inner_product(f.materialized(), h.materialized())
    raise StrategyUnavailableError(
        "cannot pair an explicit-only function on a non-enumerated group"
    )
