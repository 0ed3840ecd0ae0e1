"""The Weyl group acting on the character lattice.

Elements are unimodular integer matrices acting on row vectors of X(T)
from the right, so composition w1-then-w2 is the matrix product M1 * M2.
Each element also carries its permutation of the root list; the permutation
representation is faithful (W acts faithfully on the span of the roots and
trivially on the central coordinates) and much cheaper, so all bulk group
arithmetic runs on permutations while matrices stay available for traces
and for the public element list.

Groups are immutable after generation; breadth-first generation with a
fixed generator order makes the element ordering deterministic.
"""

from __future__ import annotations

from ._intmat import Matrix, identity, mat_mult, vec_mat
from .errors import EnumerationUnavailableError
from .root_datum import RootDatum, component_weyl_order

WeylElement = Matrix

DEFAULT_ENUMERATION_CAP = 2_000_000

Perm = tuple[int, ...]


def weyl_order(cartan_type) -> int:
    """Exact group order from the per-component closed forms."""
    order = 1
    for family, rank in cartan_type.components:
        order *= component_weyl_order(family, rank)
    return order


def _invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class WeylGroup:
    """Weyl group of a root datum, optionally with a full element list."""

    def __init__(self, datum: RootDatum, cap: int):
        self.datum = datum
        self.cap = cap
        self.order = weyl_order(datum.cartan_type)
        self.generators = tuple(
            datum.reflection_matrix(i) for i in datum.simple_indices
        )
        self.generator_perms = tuple(
            self._perm_of_matrix(m) for m in self.generators
        )
        self.elements: tuple[Matrix, ...] | None = None
        self.element_perms: tuple[Perm, ...] | None = None
        self._perm_index: dict[Perm, int] | None = None
        if self.order <= cap:
            self._enumerate()
        self._orbits: tuple[tuple[int, ...], ...] | None = None
        self._coset_tables: dict[int, tuple[dict[Perm, int], list[int]]] = {}
        self._induced_values: dict[int, tuple[int, ...]] = {}

    # -- construction -------------------------------------------------

    def _perm_of_matrix(self, m: Matrix) -> Perm:
        datum = self.datum
        return tuple(datum.root_index(vec_mat(r, m)) for r in datum.roots)

    def _enumerate(self):
        id_m = identity(self.datum.rank)
        id_p = tuple(range(self.datum.num_roots))
        elements = [id_m]
        perms = [id_p]
        index = {id_p: 0}
        pos = 0
        while pos < len(elements):
            w_m, w_p = elements[pos], perms[pos]
            pos += 1
            for g_m, g_p in zip(self.generators, self.generator_perms):
                new_p = tuple(g_p[i] for i in w_p)
                if new_p in index:
                    continue
                index[new_p] = len(elements)
                elements.append(mat_mult(w_m, g_m))
                perms.append(new_p)
        if len(elements) != self.order:
            raise AssertionError(
                f"enumeration found {len(elements)} elements, expected {self.order}"
            )
        self.elements = tuple(elements)
        self.element_perms = tuple(perms)
        self._perm_index = index

    # -- queries ------------------------------------------------------

    @property
    def has_enumeration(self) -> bool:
        return self.elements is not None

    @property
    def identity_index(self) -> int:
        return 0

    def require_enumeration(self):
        if not self.has_enumeration:
            raise EnumerationUnavailableError(
                f"Weyl group of order {self.order} exceeds the enumeration "
                f"cap {self.cap}"
            )

    def perm_of(self, w: WeylElement) -> Perm:
        return self._perm_of_matrix(w)

    def element_index(self, w: WeylElement) -> int:
        self.require_enumeration()
        try:
            return self._perm_index[self.perm_of(w)]
        except KeyError:
            raise ValueError("matrix is not an element of this Weyl group") from None

    def reflection_perm(self, root_index: int) -> Perm:
        return self._perm_of_matrix(self.datum.reflection_matrix(root_index))


def generate(datum: RootDatum, cap: int = DEFAULT_ENUMERATION_CAP) -> WeylGroup:
    """Generate the Weyl group; the element list is present iff order <= cap."""
    if cap < 1:
        raise ValueError("enumeration cap must be >= 1")
    return WeylGroup(datum, cap)


def root_orbits(group: WeylGroup) -> tuple[tuple[int, ...], ...]:
    """Partition of the root index set into W-orbits.

    Needs only the generators, never the full enumeration.  Canonical
    order: by component, then long roots before short ones.
    """
    if group._orbits is not None:
        return group._orbits
    datum = group.datum
    n = datum.num_roots
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        frontier = [start]
        seen[start] = True
        members = [start]
        while frontier:
            i = frontier.pop()
            for g_p in group.generator_perms:
                j = g_p[i]
                if not seen[j]:
                    seen[j] = True
                    members.append(j)
                    frontier.append(j)
        orbits.append(tuple(sorted(members)))
    orbits.sort(
        key=lambda o: (datum.component_of_root[o[0]], -datum.root_norm(o[0]))
    )
    group._orbits = tuple(orbits)
    return group._orbits


def orbit_representative(group: WeylGroup, j: int) -> int:
    """Lowest-index positive root of orbit j (the fixed reflection root)."""
    orbit = root_orbits(group)[j]
    return min(i for i in orbit if group.datum.is_positive(i))


def _coset_table(group: WeylGroup, j: int):
    """Cosets of W / {1, s} for the canonical reflection of orbit j."""
    if j in group._coset_tables:
        return group._coset_tables[j]
    group.require_enumeration()
    s_p = group.reflection_perm(orbit_representative(group, j))
    coset_of: dict[Perm, int] = {}
    rep_indices: list[int] = []
    for idx, u_p in enumerate(group.element_perms):
        if u_p in coset_of:
            continue
        cid = len(rep_indices)
        rep_indices.append(idx)
        coset_of[u_p] = cid
        u_s = tuple(s_p[i] for i in u_p)  # u followed by s
        coset_of[u_s] = cid
    group._coset_tables[j] = (coset_of, rep_indices)
    return group._coset_tables[j]


def fixed_coset_count(group: WeylGroup, j: int, w: WeylElement) -> int:
    """Number of cosets u{1,s} with w u {1,s} = u {1,s}.

    This is the value at w of the character induced from the trivial
    representation of the order-2 reflection subgroup of orbit j.
    """
    coset_of, rep_indices = _coset_table(group, j)
    w_p = group.perm_of(w)
    count = 0
    for idx in rep_indices:
        u_p = group.element_perms[idx]
        wu = tuple(u_p[i] for i in w_p)  # w followed by u
        if coset_of[wu] == coset_of[u_p]:
            count += 1
    return count


def induced_character_values(group: WeylGroup, j: int) -> tuple[int, ...]:
    """Values of the orbit-j induced character on every enumerated element.

    Uses chi(w) = (|W| [w = 1] + #{u : u s u^-1 = w}) / 2, a single pass of
    conjugations; :func:`fixed_coset_count` is the slow direct check.
    """
    if j in group._induced_values:
        return group._induced_values[j]
    group.require_enumeration()
    s_p = group.reflection_perm(orbit_representative(group, j))
    counts: dict[Perm, int] = {}
    for u_p in group.element_perms:
        u_inv = _invert_perm(u_p)
        conj = tuple(u_inv[s_p[i]] for i in u_p)  # u then s then u^-1
        counts[conj] = counts.get(conj, 0) + 1
    id_p = group.element_perms[group.identity_index]
    values = []
    for w_p in group.element_perms:
        v = counts.get(w_p, 0)
        if w_p == id_p:
            v += group.order
        values.append(v // 2)
    group._induced_values[j] = tuple(values)
    return group._induced_values[j]
