"""Root data of split reductive groups as exact integer lattice objects.

A root datum is stored in coordinates where the character lattice X(T) and
the cocharacter lattice Y(T) are both Z^n and the pairing between them is
the standard dot product.  The isogeny type (simply connected, adjoint, or
a custom intermediate lattice) is folded into the coordinates of the roots
and coroots: a lattice choice is a change of basis matrix B whose rows,
written in fundamental-weight plus central-character coordinates, form a
basis of X(T).  Roots are mapped through B^-1 and coroots through B^T, so
the pairing matrix stays the identity and every value stays an integer.

All objects are immutable after construction and safe for concurrent reads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ._intmat import (
    Matrix,
    Vec,
    content,
    identity,
    invert,
    mat_mult,
    smith_invariant_factors,
    transpose,
    vec_mat,
)
from .errors import GroupSpecError, LatticeError

_FAMILIES = "ABCDEFG"

# minimal rank of each family once the low-rank aliases are folded away
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_LOW_RANK_ALIASES = {
    ("B", 1): (("A", 1),),
    ("C", 1): (("A", 1),),
    ("C", 2): (("B", 2),),
    ("D", 2): (("A", 1), ("A", 1)),
    ("D", 3): (("A", 3),),
}

_COMPONENT_TOKEN = re.compile(r"^([A-Ga-g])(\d+)$")

_LATTICE_ALIASES = {
    "sc": "simply_connected",
    "simply_connected": "simply_connected",
    "simplyconnected": "simply_connected",
    "adjoint": "adjoint",
    "custom": "custom",
}


def _validated_component(family: str, rank: int) -> tuple[str, int]:
    family = family.upper()
    if family not in _FAMILIES:
        raise GroupSpecError(f"unknown family {family!r}; expected one of A-G")
    if rank < 1:
        raise GroupSpecError(f"rank must be positive, got {family}{rank}")
    return family, rank


@dataclass(frozen=True)
class CartanType:
    """A product of simple Dynkin components plus a central torus factor.

    Low-rank coincidences (B1, C1, C2, D2, D3) are normalized to their
    A/B-type equivalents at construction so that downstream orbit logic
    sees a single representative of each isomorphism class.
    """

    components: tuple[tuple[str, int], ...] = ()
    central_rank: int = 0

    def __post_init__(self):
        normalized: list[tuple[str, int]] = []
        for family, rank in self.components:
            family, rank = _validated_component(family, int(rank))
            normalized.extend(_LOW_RANK_ALIASES.get((family, rank), ((family, rank),)))
        for family, rank in normalized:
            if family in _MIN_RANK:
                if rank < _MIN_RANK[family]:
                    raise GroupSpecError(f"invalid rank {rank} for family {family}")
            elif rank not in _EXCEPTIONAL_RANKS[family]:
                raise GroupSpecError(f"invalid rank {rank} for family {family}")
        if self.central_rank < 0:
            raise GroupSpecError("central rank must be non-negative")
        if not normalized and self.central_rank < 1:
            raise GroupSpecError(
                "empty component list needs a central torus (central rank >= 1)"
            )
        object.__setattr__(self, "components", tuple(normalized))
        object.__setattr__(self, "central_rank", int(self.central_rank))

    @property
    def semisimple_rank(self) -> int:
        return sum(rank for _, rank in self.components)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.central_rank

    def label(self) -> str:
        parts = "+".join(f"{f}{r}" for f, r in self.components)
        if self.central_rank:
            suffix = f"central={self.central_rank}"
            return f"{parts} {suffix}".strip()
        return parts


@dataclass(frozen=True)
class LatticeSpec:
    """Position of X(T) between the root lattice and the weight lattice.

    ``custom_basis`` rows are coordinates in the simply-connected basis
    (fundamental weights of each component followed by central characters).
    """

    kind: str = "simply_connected"
    custom_basis: Matrix | None = None

    def __post_init__(self):
        kind = _LATTICE_ALIASES.get(self.kind)
        if kind is None:
            raise LatticeError(
                f"unknown lattice kind {self.kind!r}; "
                "expected simply_connected (sc), adjoint or custom"
            )
        if kind == "custom":
            if self.custom_basis is None:
                raise LatticeError("custom lattice needs a basis matrix")
            for row in self.custom_basis:
                for x in row:
                    if x != int(x):
                        raise LatticeError(
                            "custom basis must sit inside the weight lattice "
                            f"(non-integer entry {x!r})"
                        )
            rows = tuple(tuple(int(x) for x in row) for row in self.custom_basis)
            object.__setattr__(self, "custom_basis", rows)
        elif self.custom_basis is not None:
            raise LatticeError(f"lattice kind {kind!r} takes no basis matrix")
        object.__setattr__(self, "kind", kind)

    @classmethod
    def simply_connected(cls) -> "LatticeSpec":
        return cls("simply_connected")

    @classmethod
    def adjoint(cls) -> "LatticeSpec":
        return cls("adjoint")

    @classmethod
    def custom(cls, rows) -> "LatticeSpec":
        return cls("custom", tuple(tuple(int(x) for x in row) for row in rows))


def cartan_matrix(family: str, rank: int) -> Matrix:
    """Cartan matrix with entries A[i][j] = <alpha_i, alpha_j-coroot>."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def join(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(rank - 1):
            join(i, i + 1)
        if family == "B" and rank >= 2:
            a[rank - 2][rank - 1] = -2  # last simple root short
        if family == "C" and rank >= 2:
            a[rank - 1][rank - 2] = -2  # last simple root long
    elif family == "D":
        for i in range(rank - 2):
            join(i, i + 1)
        join(rank - 3, rank - 1)
    elif family == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            join(i, j)
        for i in range(5, rank - 1):
            join(i, i + 1)
    elif family == "F":
        join(0, 1)
        join(1, 2, aij=-2, aji=-1)
        join(2, 3)
    elif family == "G":
        join(0, 1, aij=-1, aji=-3)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in a)


def _half_norms(family: str, rank: int) -> tuple[Fraction, ...]:
    """(alpha_i, alpha_i)/2 per simple root, long roots normalized to 2."""
    if family == "B":
        return (Fraction(1),) * (rank - 1) + (Fraction(1, 2),)
    if family == "C":
        return (Fraction(1, 2),) * (rank - 1) + (Fraction(1),)
    if family == "F":
        return (Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 2))
    if family == "G":
        return (Fraction(1, 3), Fraction(1))
    return (Fraction(1),) * rank


def component_weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in "BC":
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
        ("F", 4): 1152,
        ("G", 2): 12,
    }[(family, rank)]


def component_root_count(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 1)
    if family in "BC":
        return 2 * rank * rank
    if family == "D":
        return 2 * rank * (rank - 1)
    return {("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12}[
        (family, rank)
    ]


def _component_root_system(a: Matrix):
    """All roots of one component, with matched coroots, in simple(-co)root
    coordinates.  Closure of the simple pairs under all simple reflections."""
    rank = len(a)
    start = [
        (
            tuple(int(i == k) for i in range(rank)),
            tuple(int(i == k) for i in range(rank)),
        )
        for k in range(rank)
    ]
    found: dict[tuple[int, ...], tuple[int, ...]] = dict(start)
    queue = [c for c, _ in start]
    while queue:
        c = queue.pop()
        d = found[c]
        for i in range(rank):
            p = sum(c[j] * a[j][i] for j in range(rank))  # <c, alpha_i-coroot>
            q = sum(d[j] * a[i][j] for j in range(rank))  # <alpha_i, d>
            c2 = tuple(x - (p if j == i else 0) for j, x in enumerate(c))
            d2 = tuple(x - (q if j == i else 0) for j, x in enumerate(d))
            if c2 in found:
                if found[c2] != d2:
                    raise AssertionError("inconsistent coroot closure")
            else:
                found[c2] = d2
                queue.append(c2)
    positives = sorted(
        (c for c in found if all(x >= 0 for x in c)),
        key=lambda c: (sum(c), tuple(-x for x in c)),
    )
    return positives, found


class RootDatum:
    """Roots and coroots of a split reductive group in a chosen lattice.

    Roots are indexed canonically: all positive roots first (grouped by
    component, then by height, then by coefficient vector), followed by
    their negatives in the same order.  Construct through
    :func:`build_root_datum`.
    """

    def __init__(
        self,
        cartan_type: CartanType,
        lattice: LatticeSpec,
        basis_matrix: Matrix,
        roots: tuple[Vec, ...],
        coroots: tuple[Vec, ...],
        root_coeffs: tuple[tuple[int, ...], ...],
        component_of_root: tuple[int, ...],
        component_simple: tuple[tuple[int, ...], ...],
        gram: tuple[tuple[Fraction, ...], ...],
    ):
        self.cartan_type = cartan_type
        self.lattice = lattice
        self.basis_matrix = basis_matrix
        self.rank = cartan_type.rank
        self.central_rank = cartan_type.central_rank
        self.roots = roots
        self.coroots = coroots
        self.root_coeffs = root_coeffs
        self.component_of_root = component_of_root
        self.component_simple = component_simple  # global root indices per component
        self.gram = gram
        self.num_positive = len(roots) // 2
        self._root_index = {r: i for i, r in enumerate(roots)}
        self.simple_indices = tuple(i for comp in component_simple for i in comp)

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    @property
    def dim_group(self) -> int:
        return self.rank + self.num_roots

    @property
    def positive_indices(self) -> range:
        return range(self.num_positive)

    @property
    def pairing_matrix(self) -> Matrix:
        return identity(self.rank)

    def pair(self, character: Vec, cocharacter: Vec) -> int:
        return sum(x * y for x, y in zip(character, cocharacter))

    def form(self, x: Vec, y: Vec) -> Fraction:
        g = self.gram
        return sum(
            x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)
        )

    def root_index(self, vec: Vec) -> int:
        return self._root_index[tuple(vec)]

    def is_positive(self, index: int) -> bool:
        return index < self.num_positive

    def negative_index(self, index: int) -> int:
        if index < self.num_positive:
            return index + self.num_positive
        return index - self.num_positive

    def height(self, index: int) -> int:
        return sum(self.root_coeffs[index])

    def root_norm(self, index: int) -> Fraction:
        return self.form(self.roots[index], self.roots[index])

    def reflection_matrix(self, index: int) -> Matrix:
        """Matrix of s_alpha acting on row vectors of X(T)."""
        alpha = self.roots[index]
        alpha_v = self.coroots[index]
        n = self.rank
        return tuple(
            tuple(int(r == c) - alpha_v[r] * alpha[c] for c in range(n))
            for r in range(n)
        )


def _block_embed(vec, offset, total):
    return tuple(
        vec[i - offset] if offset <= i < offset + len(vec) else 0 for i in range(total)
    )


def build_root_datum(
    cartan_type: CartanType, lattice: LatticeSpec | None = None
) -> RootDatum:
    """Construct the root datum of a split reductive group.

    Components contribute orthogonal blocks; the central torus contributes
    pairing-trivial coordinates after the semisimple block.
    """
    if lattice is None:
        lattice = LatticeSpec.simply_connected()
    n = cartan_type.rank
    central = cartan_type.central_rank

    comp_data = []
    offset = 0
    for family, rank in cartan_type.components:
        a = cartan_matrix(family, rank)
        positives, coroot_of = _component_root_system(a)
        if len(positives) * 2 != component_root_count(family, rank):
            raise AssertionError(f"root closure size mismatch for {family}{rank}")
        comp_data.append((family, rank, a, positives, coroot_of, offset))
        offset += rank

    # change of basis from the simply-connected coordinates to X(T)
    if lattice.kind == "simply_connected":
        basis = identity(n)
    elif lattice.kind == "adjoint":
        rows = []
        for family, rank, a, _, _, off in comp_data:
            for i in range(rank):
                rows.append(_block_embed(a[i], off, n))
        for j in range(central):
            rows.append(tuple(int(k == offset + j) for k in range(n)))
        basis = tuple(rows)
    else:
        basis = lattice.custom_basis
        if len(basis) != n or any(len(row) != n for row in basis):
            raise LatticeError(f"custom basis must be a {n}x{n} integer matrix")
    try:
        basis_inv = invert(basis)
    except ValueError:
        raise LatticeError("custom basis is singular") from None
    basis_t = transpose(basis)

    roots_pos: list[Vec] = []
    coroots_pos: list[Vec] = []
    coeffs_pos: list[tuple[int, ...]] = []
    comp_of_pos: list[int] = []
    for ci, (family, rank, a, positives, coroot_of, off) in enumerate(comp_data):
        for c in positives:
            weight_coords = _block_embed(vec_mat(c, a), off, n)
            x = vec_mat(weight_coords, basis_inv)
            if any(v.denominator != 1 for v in x):
                raise LatticeError(
                    "custom basis does not contain the root lattice "
                    f"(root {family}{rank}:{c} is not integral in it)"
                )
            coroot_sc = _block_embed(coroot_of[c], off, n)
            roots_pos.append(tuple(int(v) for v in x))
            coroots_pos.append(vec_mat(coroot_sc, basis_t))
            coeffs_pos.append(c)
            comp_of_pos.append(ci)

    roots = tuple(roots_pos) + tuple(tuple(-x for x in r) for r in roots_pos)
    coroots = tuple(coroots_pos) + tuple(tuple(-x for x in v) for v in coroots_pos)
    root_coeffs = tuple(coeffs_pos) + tuple(
        tuple(-x for x in c) for c in coeffs_pos
    )
    comp_of = tuple(comp_of_pos) * 2

    for r, v in zip(roots, coroots):
        if sum(x * y for x, y in zip(r, v)) != 2:
            raise AssertionError("root/coroot pairing is not 2")

    # simple roots sit first inside each component's positive block
    comp_simple = []
    pos = 0
    for family, rank, a, positives, _, _ in comp_data:
        comp_simple.append(tuple(range(pos, pos + rank)))
        pos += len(positives)

    gram_sc = _simply_connected_gram(comp_data, n, central)
    gram = _congruent(basis, gram_sc)

    datum = RootDatum(
        cartan_type,
        lattice,
        basis,
        roots,
        coroots,
        root_coeffs,
        comp_of,
        tuple(comp_simple),
        gram,
    )
    for ci, simple in enumerate(datum.component_simple):
        a = comp_data[ci][2]
        for ii, gi in enumerate(simple):
            for jj, gj in enumerate(simple):
                if datum.pair(datum.roots[gi], datum.coroots[gj]) != a[ii][jj]:
                    raise AssertionError("Cartan matrix reconstruction failed")
    return datum


def _simply_connected_gram(comp_data, n, central):
    """W-invariant form in the simply-connected coordinates.

    Per component this is D A^-T with D the half-norm diagonal; the central
    block is the identity (any W-invariant extension works, W acts trivially
    there).
    """
    gram = [[Fraction(0)] * n for _ in range(n)]
    for family, rank, a, _, _, off in comp_data:
        a_inv = invert(a)
        d = _half_norms(family, rank)
        for i in range(rank):
            for j in range(rank):
                gram[off + i][off + j] = d[i] * a_inv[j][i]
    semi = sum(rank for _, rank, *_ in comp_data)
    for j in range(central):
        gram[semi + j][semi + j] = Fraction(1)
    return tuple(tuple(row) for row in gram)


def _congruent(basis, gram):
    """B G B^T for a basis change acting on row vectors."""
    bg = mat_mult(basis, gram)
    return tuple(tuple(row) for row in mat_mult(bg, transpose(basis)))


def coroot(datum: RootDatum, index: int) -> Vec:
    """The cocharacter beta' with beta'(x) = 2(x, beta)/(beta, beta)."""
    if not 0 <= index < datum.num_roots:
        raise IndexError(f"root index {index} out of range")
    return datum.coroots[index]


def derived_group_is_simply_connected(datum: RootDatum) -> bool:
    """Whether the coroot lattice is saturated in Y(T).

    True iff (Y(T) intersect Q-span of the coroots) / Z-span of the coroots
    is trivial, decided by the Smith normal form of the simple-coroot matrix:
    the quotient is the direct sum of Z/d for its invariant factors d.
    """
    simple_coroots = [datum.coroots[i] for i in datum.simple_indices]
    if not simple_coroots:
        return True
    return all(f == 1 for f in smith_invariant_factors(simple_coroots))


def root_admits_unit_pairing(datum: RootDatum, index: int) -> bool:
    """Whether some character of X(T) pairs to 1 with the coroot of a root.

    The image of the pairing against a fixed coroot is gcd(coordinates) * Z,
    so the test is an exact gcd computation.
    """
    if not 0 <= index < datum.num_roots:
        raise IndexError(f"root index {index} out of range")
    return content(datum.coroots[index]) == 1


def parse_group_spec(text: str) -> tuple[tuple[tuple[str, int], ...], str | None, int | None]:
    """Parse the group specification grammar, e.g. "A2+B3 lattice=sc central=1".

    Returns (components, lattice kind or None, central rank or None); the
    omitted key=value entries stay None so callers can layer defaults.
    """
    components: list[tuple[str, int]] = []
    lattice_kind: str | None = None
    central: int | None = None
    saw_components = False
    for token in text.split():
        if "=" in token:
            key, _, value = token.partition("=")
            if key == "lattice":
                if value not in _LATTICE_ALIASES:
                    raise GroupSpecError(f"unknown lattice {value!r} in group spec")
                lattice_kind = _LATTICE_ALIASES[value]
            elif key == "central":
                try:
                    central = int(value)
                except ValueError:
                    raise GroupSpecError(
                        f"central rank must be an integer, got {value!r}"
                    ) from None
            else:
                raise GroupSpecError(f"unknown key {key!r} in group spec")
            continue
        if saw_components:
            raise GroupSpecError("group spec lists components twice")
        saw_components = True
        if token.lower() in ("none", "-"):
            continue
        for part in token.split("+"):
            match = _COMPONENT_TOKEN.match(part)
            if not match:
                raise GroupSpecError(
                    f"cannot parse component {part!r}; expected e.g. A2 or B3"
                )
            components.append((match.group(1).upper(), int(match.group(2))))
    return tuple(components), lattice_kind, central
