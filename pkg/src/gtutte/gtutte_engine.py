"""G-multiplicities and the multivariate, bivariate and characteristic
G-Tutte polynomials.

Three independent routes are provided:

* naive: a literal sum over all ``2^n`` sublists (capped);
* deletion-contraction: recursion on loops, coloops and proper elements,
  optionally memoized on a canonical form of the remaining instance;
* profile: the sublist sum aggregated by the subgroup each sublist
  generates, built by a forward sweep that merges equal subgroups.

All arithmetic is exact.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from itertools import combinations
from typing import Iterable, Sequence

from .abelian_core import (
    ElementList,
    hermite_basis,
    hom_count,
    lattice_invariants,
    list_rank,
    reduce_mod_lattice,
    require_torsion,
    span_invariants,
)
from .errors import CapExceeded, DimensionMismatch, HasTorsion, NonPolynomialResult
from .polynomials import BiPoly, LaurentMulti, UniPoly, laurent_ring, specialize_bi_to_uni
from .target import TargetGroup

DEFAULT_MAX_NAIVE = 24

# (torsion factors of Gamma/<S>, r_S, #S) -> number of sublists S
Profile = Counter


def _check_cap(lst: ElementList, cap: int | None):
    cap = DEFAULT_MAX_NAIVE if cap is None else cap
    if len(lst) > cap:
        raise CapExceeded(f"list has {len(lst)} elements; naive enumeration is capped at {cap}")


def multiplicity(lst: ElementList, sublist: Iterable[int], target: TargetGroup) -> int:
    """``m(S; G) = #Hom((Gamma/<S>)_tor, G)``."""
    _, torsion = span_invariants(lst.group, lst.vectors(sublist))
    return hom_count(torsion, target)


def sublists(n: int):
    for k in range(n + 1):
        yield from combinations(range(n), k)


def naive_profile(lst: ElementList, cap: int | None = None) -> Profile:
    """Sublist invariants by brute-force enumeration of all ``2^n`` sublists."""
    _check_cap(lst, cap)
    prof = Counter()
    for s in sublists(len(lst)):
        r, torsion = span_invariants(lst.group, lst.vectors(s))
        prof[(torsion, r, len(s))] += 1
    return prof


def sweep_profile(lst: ElementList) -> Profile:
    """Sublist invariants by a forward sweep over subgroups.

    After processing ``i`` elements the state maps each subgroup
    ``L = <relations, S>`` (as a Hermite basis) to the size distribution of
    the sublists ``S`` of the first ``i`` elements that generate it.
    """
    g = lst.group
    states: dict[tuple, Counter] = {g.lattice: Counter({0: 1})}
    for v in lst.lifts:
        new: dict[tuple, Counter] = defaultdict(Counter)
        for basis, sizes in states.items():
            new[basis].update(sizes)
            grown = hermite_basis(basis + (v,), g.ambient_rank)
            target = new[grown]
            for k, c in sizes.items():
                target[k + 1] += c
        states = new
    base_rank = g.ambient_rank - g.free_rank
    prof = Counter()
    for basis, sizes in states.items():
        rank, torsion = lattice_invariants(basis)
        for k, c in sizes.items():
            prof[(torsion, rank - base_rank, k)] += c
    return prof


def _powers(base, n):
    out = [type(base).constant(1)]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


def tutte_from_profile(prof: Profile, r_list: int, target: TargetGroup) -> BiPoly:
    """Assemble ``sum m(S;G) (x-1)^{r_A - r_S} (y-1)^{#S - r_S}``."""
    coeff: Counter = Counter()
    for (torsion, r, k), count in prof.items():
        coeff[(r_list - r, k - r)] += count * hom_count(torsion, target)
    if not coeff:
        return BiPoly()
    xm = _powers(BiPoly.x() - 1, max(a for a, _ in coeff))
    ym = _powers(BiPoly.y() - 1, max(b for _, b in coeff))
    out = BiPoly()
    for (a, b), c in coeff.items():
        out = out + xm[a] * ym[b] * c
    return out


def characteristic_from_profile(prof: Profile, r_group: int, target: TargetGroup) -> UniPoly:
    """Assemble ``sum (-1)^{#S} m(S;G) t^{r_Gamma - r_S}``."""
    coeff: Counter = Counter()
    for (torsion, r, k), count in prof.items():
        coeff[(r_group - r,)] += (-1) ** k * count * hom_count(torsion, target)
    return UniPoly(coeff)


def g_tutte_naive(lst: ElementList, target: TargetGroup, cap: int | None = None) -> BiPoly:
    """The G-Tutte polynomial as a literal sum over all sublists."""
    return tutte_from_profile(naive_profile(lst, cap), list_rank(lst), target)


class _DeletionContraction:
    """Recursive evaluation of ``T^G`` by deletion and contraction.

    A state is ``(L, lifts)``: the group ``Z^m / L`` (``L`` a Hermite
    basis) and the remaining element lifts.  The pivot is the lowest-index
    proper element; when none is left, the lowest-index loop or coloop.
    """

    def __init__(self, dim: int, base_rank: int, target: TargetGroup, memo: bool):
        self.dim = dim
        self.base_rank = base_rank
        self.target = target
        self.memo: dict | None = {} if memo else None
        self.calls = 0
        self.xm1 = BiPoly.x() - 1
        self.ym1 = BiPoly.y() - 1

    def _rank(self, basis, vectors) -> int:
        if not vectors:
            return len(basis)
        return len(hermite_basis(basis + tuple(vectors), self.dim))

    def __call__(self, basis: tuple, lifts: tuple) -> BiPoly:
        self.calls += 1
        if not lifts:
            _, torsion = lattice_invariants(basis)
            return BiPoly.constant(hom_count(torsion, self.target))
        key = None
        if self.memo is not None:
            lifts = tuple(sorted(reduce_mod_lattice(v, basis) for v in lifts))
            key = (basis, lifts)
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        result = self._split(basis, lifts)
        if key is not None:
            self.memo[key] = result
        return result

    def _split(self, basis, lifts) -> BiPoly:
        r0 = len(basis)
        r_all = self._rank(basis, lifts)
        kinds = []
        for i, v in enumerate(lifts):
            if self._rank(basis, [v]) == r0:
                kinds.append("loop")
                continue
            rest = lifts[:i] + lifts[i + 1:]
            kinds.append("coloop" if self._rank(basis, rest) + 1 == r_all else "proper")
        i = kinds.index("proper") if "proper" in kinds else 0
        rest = lifts[:i] + lifts[i + 1:]
        contracted = hermite_basis(basis + (lifts[i],), self.dim)
        deletion = self(basis, rest)
        contraction = self(contracted, rest)
        if kinds[i] == "loop":
            return deletion + self.ym1 * contraction
        if kinds[i] == "coloop":
            return self.xm1 * deletion + contraction
        return deletion + contraction


def g_tutte_dc(lst: ElementList, target: TargetGroup, memo: bool = False) -> BiPoly:
    """The G-Tutte polynomial by deletion-contraction.

    ``memo=True`` caches subresults keyed by the Hermite basis of the
    current relation lattice and the sorted canonical coset representatives
    of the remaining elements; it changes running time, not results.
    Worst-case cost is exponential in the list length.
    """
    g = lst.group
    dc = _DeletionContraction(g.ambient_rank, g.ambient_rank - g.free_rank, target, memo)
    return dc(g.lattice, lst.lifts)


def g_characteristic(lst: ElementList, target: TargetGroup, method: str = "profile",
                     cap: int | None = None, memo: bool = True) -> UniPoly:
    """The G-characteristic polynomial ``sum (-1)^{#S} m(S;G) t^{r_Gamma - r_S}``.

    ``method`` is ``"naive"`` (literal sum, capped), ``"profile"`` (the same
    sum aggregated over equal subgroups) or ``"dc"`` (specialization of the
    deletion-contraction Tutte polynomial).
    """
    r_group = lst.group.free_rank
    if method == "naive":
        _check_cap(lst, cap)
        coeff: Counter = Counter()
        for s in sublists(len(lst)):
            r, torsion = span_invariants(lst.group, lst.vectors(s))
            coeff[(r_group - r,)] += (-1) ** len(s) * hom_count(torsion, target)
        return UniPoly(coeff)
    if method == "profile":
        return characteristic_from_profile(sweep_profile(lst), r_group, target)
    if method == "dc":
        return specialize_bi_to_uni(g_tutte_dc(lst, target, memo=memo), list_rank(lst), r_group)
    raise ValueError(f"unknown method {method!r}")


def g_tutte(lst: ElementList, target: TargetGroup, method: str = "dc",
            cap: int | None = None, memo: bool = True) -> BiPoly:
    """Dispatch to one of the Tutte routes (``naive``, ``dc``, ``profile``)."""
    if method == "naive":
        return g_tutte_naive(lst, target, cap)
    if method == "dc":
        return g_tutte_dc(lst, target, memo=memo)
    if method == "profile":
        return tutte_from_profile(sweep_profile(lst), list_rank(lst), target)
    raise ValueError(f"unknown method {method!r}")


def multivariate_z(lst: ElementList, target: TargetGroup, cap: int | None = None) -> LaurentMulti:
    """``Z(q, v) = sum m(S;G) q^{-r_S} prod_{i in S} v_i``."""
    _check_cap(lst, cap)
    n = len(lst)
    ring = laurent_ring(n)
    terms = {}
    for s in sublists(n):
        r, torsion = span_invariants(lst.group, lst.vectors(s))
        e = [0] * (n + 1)
        e[0] = -r
        for i in s:
            e[i + 1] = 1
        terms[tuple(e)] = hom_count(torsion, target)
    return ring(terms)


def tutte_from_z(z: LaurentMulti, r_list: int) -> BiPoly:
    """``(x-1)^{r_A} Z((x-1)(y-1), y-1, ..., y-1)``."""
    coeff: Counter = Counter()
    for e, c in z.items():
        a = r_list + e[0]
        b = e[0] + sum(e[1:])
        if a < 0 or b < 0:
            raise NonPolynomialResult("Z does not specialize to a polynomial")
        coeff[(a, b)] += c
    out = BiPoly()
    if not coeff:
        return out
    xm = _powers(BiPoly.x() - 1, max(a for a, _ in coeff))
    ym = _powers(BiPoly.y() - 1, max(b for _, b in coeff))
    for (a, b), c in coeff.items():
        out = out + xm[a] * ym[b] * c
    return out


class Specialization(enum.Enum):
    CLASSICAL_TUTTE = "ClassicalTutte"
    ARITHMETIC_TUTTE = "ArithmeticTutte"
    CYCLIC_CONSTITUENT = "CyclicConstituent"
    GENERAL = "General"


def classify_specialization(target: TargetGroup) -> Specialization:
    """Which classical object ``T^G`` reduces to, judged from ``#G[d]``.

    ``#G[d] = 1`` for all d (torsion-free G) gives the Tutte polynomial;
    ``#G[d] = d`` (one circle factor, no finite part) the arithmetic Tutte
    polynomial; ``#G[d] = gcd(d, k)`` a constituent of the characteristic
    quasi-polynomial.  Real factors never contribute torsion.
    """
    p, factors = target.torus_rank, target.finite_factors
    if p == 0 and not factors:
        return Specialization.CLASSICAL_TUTTE
    if p == 1 and not factors:
        return Specialization.ARITHMETIC_TUTTE
    if p == 0 and len(factors) == 1:
        return Specialization.CYCLIC_CONSTITUENT
    return Specialization.GENERAL


def apply_homomorphism(sigma: Sequence[Sequence[int]], lst: ElementList) -> ElementList:
    """Image ``sigma(A)`` of a list in ``Z^l`` under an ``l x l`` integer matrix."""
    g = lst.group
    if g.lattice:
        raise HasTorsion("apply_homomorphism needs Gamma = Z^l with no relations")
    l = g.ambient_rank
    if len(sigma) != l or any(len(row) != l for row in sigma):
        raise DimensionMismatch(f"sigma must be {l} x {l}")
    image = [tuple(sum(sigma[i][j] * v[j] for j in range(l)) for i in range(l)) for v in lst.lifts]
    return ElementList(g, tuple(image), lst.labels)


def finite_gamma_expansion(lst: ElementList, target: TargetGroup,
                           cap: int | None = None) -> list[tuple[int, int]]:
    """Coefficients of ``T^G`` in ``y`` for a list of torsion elements.

    The ``y^k`` coefficient is ``sum_{#S=k} #M(A/S; Gamma_tor/<S>, G)``; each
    count is obtained by inclusion-exclusion over the sublists above ``S``.
    """
    require_torsion(lst)
    _check_cap(lst, cap)
    n = len(lst)
    mult = {}
    for s in sublists(n):
        mask = sum(1 << i for i in s)
        mult[mask] = multiplicity(lst, s, target)
    full = (1 << n) - 1
    coeffs = [0] * (n + 1)
    for mask in mult:
        free = full & ~mask
        count = 0
        sub = free
        while True:
            count += (-1) ** bin(sub).count("1") * mult[mask | sub]
            if not sub:
                break
            sub = (sub - 1) & free
        coeffs[bin(mask).count("1")] += count
    return [(k, c) for k, c in enumerate(coeffs)]


def polynomial_from_expansion(expansion: Iterable[tuple[int, int]]) -> BiPoly:
    return BiPoly({(0, k): c for k, c in expansion})

