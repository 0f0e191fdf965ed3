"""Exact integer linear algebra for finitely generated abelian groups.

Groups are presented as ``Z^m / <relation columns>``.  Presentations are
kept verbatim; the canonical invariants (free rank and torsion invariant
factors) are computed once at construction and used for comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonTorsionElement
from .target import TargetGroup

Vector = tuple[int, ...]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix."""

    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _diagonalize(a: list[list[int]]) -> list[int]:
    """Reduce ``a`` in place to a diagonal, returning the nonzero diagonal.

    Pivots are always taken at a nonzero entry of minimal absolute value,
    which keeps intermediate entries small.
    """
    diag = []
    while a and a[0]:
        best = None
        for i, row in enumerate(a):
            for j, x in enumerate(row):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        a[0], a[i] = a[i], a[0]
        if j:
            for row in a:
                row[0], row[j] = row[j], row[0]
        while True:
            p = a[0][0]
            dirty = False
            for row in a[1:]:
                if row[0]:
                    q = row[0] // p
                    if q:
                        for k in range(len(row)):
                            row[k] -= q * a[0][k]
                    dirty = dirty or row[0] != 0
            top = a[0]
            for k in range(1, len(top)):
                if top[k]:
                    q = top[k] // p
                    if q:
                        for row in a:
                            row[k] -= q * row[0]
                    dirty = dirty or top[k] != 0
            if not dirty:
                break
            # a remainder smaller than the pivot survived; move it to (0, 0)
            best = None
            for i in range(len(a)):
                if a[i][0] and (best is None or abs(a[i][0]) < best[0]):
                    best = (abs(a[i][0]), i, 0)
            for k in range(len(a[0])):
                if a[0][k] and (best is None or abs(a[0][k]) < best[0]):
                    best = (abs(a[0][k]), 0, k)
            _, i, k = best
            a[0], a[i] = a[i], a[0]
            if k:
                for row in a:
                    row[0], row[k] = row[k], row[0]
        diag.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
    return diag


def _divisor_chain(diag: Iterable[int]) -> tuple[int, ...]:
    # diag(a, b) is equivalent to diag(gcd, lcm); repeat until sorted by divisibility
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return tuple(d)


def smith_normal_form(rows: Sequence[Sequence[int]]) -> SmithForm:
    """Invariant factors of an integer matrix given as a list of rows.

    The empty matrix (no rows, or rows of length zero) has no factors.
    Transforming matrices are not computed.
    """
    a = [[int(x) for x in row] for row in rows]
    if a and len({len(r) for r in a}) > 1:
        raise DimensionMismatch("ragged matrix")
    return SmithForm(_divisor_chain(_diagonalize(a)))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_basis(vectors: Iterable[Sequence[int]], dim: int) -> tuple[Vector, ...]:
    """Canonical row-style Hermite basis of the lattice spanned by ``vectors``.

    Rows are in echelon form with strictly increasing pivot columns,
    positive pivots, and entries above each pivot reduced into
    ``[0, pivot)``.  Two generating sets span the same lattice iff their
    Hermite bases are equal.
    """
    rows: dict[int, list[int]] = {}
    for vec in vectors:
        v = list(vec)
        if len(v) != dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Z^{dim}")
        for j in range(dim):
            if not v[j]:
                continue
            b = rows.get(j)
            if b is None:
                if v[j] < 0:
                    v = [-x for x in v]
                rows[j] = v
                break
            g, s, t = _xgcd(b[j], v[j])
            bj, vj = b[j] // g, v[j] // g
            rows[j] = [s * x + t * y for x, y in zip(b, v)]
            v = [bj * y - vj * x for x, y in zip(b, v)]
        # v reduced to zero or inserted
    pivots = sorted(rows)
    for j in pivots:
        if rows[j][j] < 0:
            rows[j] = [-x for x in rows[j]]
    for idx, j in enumerate(pivots):
        p = rows[j][j]
        piv = rows[j]
        for k in pivots[:idx]:
            q = rows[k][j] // p
            if q:
                rows[k] = [x - q * y for x, y in zip(rows[k], piv)]
    return tuple(tuple(rows[j]) for j in pivots)


def reduce_mod_lattice(vec: Sequence[int], basis: Sequence[Vector]) -> Vector:
    """Canonical representative of ``vec + L`` for a Hermite basis of ``L``."""
    v = list(vec)
    for row in basis:
        j = next(k for k, x in enumerate(row) if x)
        q = v[j] // row[j]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return tuple(v)


@lru_cache(maxsize=1 << 16)
def lattice_invariants(basis: tuple[Vector, ...]) -> tuple[int, tuple[int, ...]]:
    """``(rank, torsion factors)`` of the lattice with the given basis rows.

    The torsion factors are those of ``Z^m / L``.
    """
    snf = smith_normal_form(basis)
    return snf.rank, snf.torsion


@dataclass(frozen=True, eq=False)
class FgGroup:
    """``Z^m`` modulo the subgroup generated by the relation columns.

    Equality and hashing use the canonical invariants only, so two
    groups compare equal exactly when they are abstractly isomorphic.
    """

    ambient_rank: int
    relations: tuple[Vector, ...] = ()
    free_rank: int = field(init=False)
    torsion: tuple[int, ...] = field(init=False)
    lattice: tuple[Vector, ...] = field(init=False, repr=False)

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in col) for col in self.relations)
        object.__setattr__(self, "relations", rels)
        lattice = hermite_basis(rels, self.ambient_rank)
        rank, torsion = lattice_invariants(lattice)
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "free_rank", self.ambient_rank - rank)
        object.__setattr__(self, "torsion", torsion)

    @property
    def canonical(self) -> tuple[int, tuple[int, ...]]:
        return self.free_rank, self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    def __eq__(self, other):
        if not isinstance(other, FgGroup):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def group_from_presentation(ambient_rank: int, relations: Iterable[Sequence[int]] = ()) -> FgGroup:
    rels = [tuple(c) for c in relations]
    for c in rels:
        if len(c) != ambient_rank:
            raise DimensionMismatch(f"relation {c} is not a vector in Z^{ambient_rank}")
    return FgGroup(ambient_rank, tuple(rels))


def free_group(rank: int) -> FgGroup:
    return FgGroup(rank, ())


@dataclass(frozen=True)
class ElementList:
    """A finite list (multiset) of elements of ``group``, stored as lifts in ``Z^m``.

    Duplicate lifts are distinct entries.  Sublists are index sets.
    """

    group: FgGroup
    lifts: tuple[Vector, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        lifts = tuple(tuple(int(x) for x in v) for v in self.lifts)
        for v in lifts:
            if len(v) != self.group.ambient_rank:
                raise DimensionMismatch(f"element {v} is not a vector in Z^{self.group.ambient_rank}")
        object.__setattr__(self, "lifts", lifts)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != len(lifts):
                raise DimensionMismatch("one label per element required")
            object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.lifts)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"a{i + 1}"

    def all_labels(self) -> tuple[str, ...]:
        return tuple(self.label(i) for i in range(len(self)))

    def vectors(self, indices: Iterable[int]) -> list[Vector]:
        return [self.lifts[i] for i in indices]

    def restrict(self, indices: Iterable[int]) -> "ElementList":
        """The sublist on ``indices``, in the same group."""
        idx = sorted(set(indices))
        return ElementList(self.group, tuple(self.lifts[i] for i in idx),
                           tuple(self.label(i) for i in idx))

    def delete(self, i: int) -> "ElementList":
        return self.restrict(k for k in range(len(self)) if k != i)

    def contract(self, indices: Iterable[int]) -> "ElementList":
        """``A/S``: the remaining elements as cosets in ``Gamma/<S>``."""
        idx = set(indices)
        rest = [k for k in range(len(self)) if k not in idx]
        return ElementList(quotient(self, idx), tuple(self.lifts[k] for k in rest),
                           tuple(self.label(k) for k in rest))


def make_list(group: FgGroup, lifts: Iterable[Sequence[int]], labels=None) -> ElementList:
    return ElementList(group, tuple(tuple(v) for v in lifts), None if labels is None else tuple(labels))


def quotient(lst: ElementList, sublist: Iterable[int] = ()) -> FgGroup:
    """``Gamma / <S>`` as a new presentation (relations plus the lifts of S)."""
    g = lst.group
    extra = [lst.lifts[i] for i in sorted(set(sublist))]
    return FgGroup(g.ambient_rank, g.relations + tuple(extra))


def span_invariants(group: FgGroup, vectors: Iterable[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """``(r_S, torsion factors of Gamma/<S>)`` for the subgroup spanned by ``vectors``."""
    vecs = list(vectors)
    if not vecs:
        return 0, group.torsion
    basis = hermite_basis(list(group.lattice) + vecs, group.ambient_rank)
    rank, torsion = lattice_invariants(basis)
    return rank - (group.ambient_rank - group.free_rank), torsion


def sublist_rank(lst: ElementList, sublist: Iterable[int]) -> int:
    return span_invariants(lst.group, lst.vectors(sublist))[0]


def list_rank(lst: ElementList) -> int:
    return sublist_rank(lst, range(len(lst)))


def is_loop(lst: ElementList, index: int) -> bool:
    """A loop is a torsion element (rank of ``{alpha}`` is zero)."""
    return sublist_rank(lst, [index]) == 0


def is_coloop(lst: ElementList, index: int) -> bool:
    rest = [k for k in range(len(lst)) if k != index]
    return list_rank(lst) == sublist_rank(lst, rest) + 1


def is_proper(lst: ElementList, index: int) -> bool:
    return not is_loop(lst, index) and not is_coloop(lst, index)


def hom_count(finite_factors: Iterable[int], target: TargetGroup) -> int:
    """``#Hom(Z/d_1 + ... + Z/d_k, G) = prod #G[d_i]``."""
    return prod(target.torsion_count(d) for d in finite_factors)


def require_torsion(lst: ElementList) -> None:
    for i in range(len(lst)):
        if not is_loop(lst, i):
            raise NonTorsionElement(f"element {lst.label(i)} has infinite order")


def dual_construction(lst: ElementList) -> ElementList:
    """The dual pair ``(Gamma^dagger, A^dagger)``.

    With ``Gamma = Z^m / <v_1..v_h>`` and lifts ``a_1..a_n``, the dual group
    is ``Z^(n+h)`` modulo the ``m`` columns of the matrix whose rows are
    ``a_1..a_n, v_1..v_h``; the dual list is the first ``n`` basis vectors.
    The stored presentation is used verbatim.
    """
    g = lst.group
    n, h, m = len(lst), len(g.relations), g.ambient_rank
    rows = list(lst.lifts) + list(g.relations)
    cols = [tuple(rows[i][j] for i in range(n + h)) for j in range(m)]
    dual_group = FgGroup(n + h, tuple(cols))
    basis = [tuple(int(i == k) for i in range(n + h)) for k in range(n)]
    return ElementList(dual_group, tuple(basis), lst.all_labels())
