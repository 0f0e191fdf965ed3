"""Arithmetic-matroid axioms, duality and the convolution formula for
G-multiplicities.

Every sweep enumerates sublists as bitmasks in increasing order, so the
first recorded witness is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian_core import ElementList, dual_construction, hom_count, list_rank, span_invariants
from .gtutte_engine import _check_cap, g_tutte_naive
from .polynomials import BiPoly
from .target import TargetGroup
from .topology import DEFAULT_MAX_ENUMERATION, count_homomorphisms


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    holds: bool
    checked: int = 0
    witness: dict | None = field(default=None)

    def line(self) -> str:
        status = "PASS" if self.holds else "FAIL"
        extra = f" witness={self.witness}" if self.witness else ""
        return f"{status} {self.axiom} ({self.checked} cases){extra}"


class MultiplicityTable:
    """``r_S`` and ``m(S; G)`` for every sublist, indexed by bitmask."""

    def __init__(self, lst: ElementList, target: TargetGroup, cap: int | None = None):
        _check_cap(lst, cap)
        self.lst = lst
        self.target = target
        self.n = n = len(lst)
        self.rank = [0] * (1 << n)
        self.torsion = [()] * (1 << n)
        self.mult = [1] * (1 << n)
        for mask in range(1 << n):
            r, tor = span_invariants(lst.group, lst.vectors(self.members(mask)))
            self.rank[mask] = r
            self.torsion[mask] = tor
            self.mult[mask] = hom_count(tor, target)

    def members(self, mask: int) -> list[int]:
        return [i for i in range(self.n) if mask >> i & 1]

    def labels(self, mask: int) -> list[str]:
        return [self.lst.label(i) for i in self.members(mask)]

    def between(self, low: int, high: int):
        """All masks ``B`` with ``low <= B <= high`` (as sets)."""
        free = high & ~low
        sub = free
        while True:
            yield low | sub
            if not sub:
                return
            sub = (sub - 1) & free

    def pairs(self):
        """All ``(S, T)`` with ``S`` contained in ``T``."""
        for t in range(1 << self.n):
            for s in self.between(0, t):
                yield s, t

    def molecule_split(self, s: int, t: int) -> tuple[int, int] | None:
        """``(B, C)`` with ``T = S + B + C`` and ``r_R = r_S + #(R & B)`` for all
        ``S <= R <= T``; None when ``[S, T]`` is not a molecule."""
        rs = self.rank[s]
        b = 0
        for i in self.members(t & ~s):
            if self.rank[s | 1 << i] == rs + 1:
                b |= 1 << i
        for r in self.between(s, t):
            if self.rank[r] != rs + bin(r & b).count("1"):
                return None
        return b, t & ~s & ~b


def _signed_sum(table: MultiplicityTable, s: int, t: int, sign_from_top: bool) -> int:
    total = 0
    pop_s, pop_t = bin(s).count("1"), bin(t).count("1")
    for b in table.between(s, t):
        k = bin(b).count("1")
        total += (-1) ** ((pop_t - k) if sign_from_top else (k - pop_s)) * table.mult[b]
    return total


def check_axiom1(lst, target, cap=None, table=None) -> AxiomReport:
    """If ``r_{S+a} = r_S`` then ``m(S+a)`` divides ``m(S)``."""
    tb = table or MultiplicityTable(lst, target, cap)
    checked = 0
    for s in range(1 << tb.n):
        for i in range(tb.n):
            u = s | 1 << i
            if u == s or tb.rank[u] != tb.rank[s]:
                continue
            checked += 1
            if tb.mult[s] % tb.mult[u]:
                return AxiomReport("A1", False, checked, {
                    "S": tb.labels(s), "alpha": lst.label(i), "m(S)": tb.mult[s], "m(S+alpha)": tb.mult[u]})
    return AxiomReport("A1", True, checked)


def check_axiom2(lst, target, cap=None, table=None) -> AxiomReport:
    """If ``r_{S+a} = r_S + 1`` then ``m(S)`` divides ``m(S+a)``."""
    tb = table or MultiplicityTable(lst, target, cap)
    checked = 0
    for s in range(1 << tb.n):
        for i in range(tb.n):
            u = s | 1 << i
            if u == s or tb.rank[u] != tb.rank[s] + 1:
                continue
            checked += 1
            if tb.mult[u] % tb.mult[s]:
                return AxiomReport("A2", False, checked, {
                    "S": tb.labels(s), "alpha": lst.label(i), "m(S)": tb.mult[s], "m(S+alpha)": tb.mult[u]})
    return AxiomReport("A2", True, checked)


def check_axiom3(lst, target, cap=None, table=None) -> AxiomReport:
    """``m(S) m(T) = m(S+B) m(S+C)`` on every molecule ``T = S + B + C``.

    Guaranteed for divisible G only; other groups may fail.
    """
    tb = table or MultiplicityTable(lst, target, cap)
    checked = 0
    for s, t in tb.pairs():
        split = tb.molecule_split(s, t)
        if split is None:
            continue
        b, c = split
        checked += 1
        lhs = tb.mult[s] * tb.mult[t]
        rhs = tb.mult[s | b] * tb.mult[s | c]
        if lhs != rhs:
            return AxiomReport("A3", False, checked, {
                "S": tb.labels(s), "B": tb.labels(b), "C": tb.labels(c),
                "m(S)*m(T)": lhs, "m(S+B)*m(S+C)": rhs})
    return AxiomReport("A3", True, checked)


def rho(table: MultiplicityTable, s: int, t: int) -> int:
    """``sum_{S <= B <= T} (-1)^{#B - #S} m(B)``."""
    return _signed_sum(table, s, t, sign_from_top=False)


def rho_star(table: MultiplicityTable, s: int, t: int) -> int:
    """``sum_{S <= B <= T} (-1)^{#T - #B} m(B)``."""
    return _signed_sum(table, s, t, sign_from_top=True)


def check_axiom4(lst, target, cap=None, table=None) -> AxiomReport:
    tb = table or MultiplicityTable(lst, target, cap)
    checked = 0
    for s, t in tb.pairs():
        if tb.rank[s] != tb.rank[t]:
            continue
        checked += 1
        value = rho(tb, s, t)
        if value < 0:
            return AxiomReport("A4", False, checked, {"S": tb.labels(s), "T": tb.labels(t), "rho": value})
    return AxiomReport("A4", True, checked)


def check_axiom5(lst, target, cap=None, table=None) -> AxiomReport:
    tb = table or MultiplicityTable(lst, target, cap)
    checked = 0
    for s, t in tb.pairs():
        if tb.rank[t] != tb.rank[s] + bin(t & ~s).count("1"):
            continue
        checked += 1
        value = rho_star(tb, s, t)
        if value < 0:
            return AxiomReport("A5", False, checked, {"S": tb.labels(s), "T": tb.labels(t), "rho*": value})
    return AxiomReport("A5", True, checked)


def molecule_sum(table: MultiplicityTable, s: int, b: int, c: int) -> int:
    """``(-1)^{#C} sum_{S <= R <= T} (-1)^{#T - #R} m(R)`` for a molecule ``T = S + B + C``."""
    return (-1) ** bin(c).count("1") * rho_star(table, s, s | b | c)


def check_axiom_p(lst, target, cap=None, table=None) -> AxiomReport:
    """Positivity of the molecule sums (axiom P)."""
    tb = table or MultiplicityTable(lst, target, cap)
    checked = 0
    for s, t in tb.pairs():
        split = tb.molecule_split(s, t)
        if split is None:
            continue
        checked += 1
        b, c = split
        value = molecule_sum(tb, s, b, c)
        if value < 0:
            return AxiomReport("P", False, checked, {
                "S": tb.labels(s), "B": tb.labels(b), "C": tb.labels(c), "rho": value})
    return AxiomReport("P", True, checked)


AXIOMS = {
    "1": check_axiom1, "2": check_axiom2, "3": check_axiom3,
    "4": check_axiom4, "5": check_axiom5, "P": check_axiom_p,
}


def check_axioms(lst, target, which=("1", "2", "3", "4", "5", "P"), cap=None) -> list[AxiomReport]:
    table = MultiplicityTable(lst, target, cap)
    return [AXIOMS[a](lst, target, table=table) for a in which]


def rho_bruteforce(lst: ElementList, s: list[int], t: list[int], target: TargetGroup,
                   budget: int = DEFAULT_MAX_ENUMERATION) -> int:
    """``#M(T/S; (Gamma/<S>)_tor, G)`` by enumeration, for finite G and ``r_S = r_T``.

    Homomorphisms of ``Gamma/<S>`` restrict onto those of its torsion part
    with fibres of size ``#G^{r_Gamma - r_S}``, and the elements of ``T - S``
    are torsion there, so the restricted count is an exact quotient.
    """
    zero = lst.vectors(s)
    nonzero = lst.vectors(sorted(set(t) - set(s)))
    r_s, _ = span_invariants(lst.group, zero)
    total = count_homomorphisms(lst.group, target, zero=zero, nonzero=nonzero, budget=budget)
    fibre = target.finite_order ** (lst.group.free_rank - r_s)
    assert total % fibre == 0
    return total // fibre


def _partial(poly: BiPoly, x=None, y=None) -> BiPoly:
    out = {}
    for (a, b), c in poly.items():
        if x is not None:
            c, a = c * x ** a, 0
        if y is not None:
            c, b = c * y ** b, 0
        out[(a, b)] = out.get((a, b), 0) + c
    return BiPoly(out)


def convolution_sides(lst: ElementList, g1: TargetGroup, g2: TargetGroup,
                      cap: int | None = None) -> tuple[BiPoly, BiPoly]:
    """``T^{G1 x G2}`` and ``sum_B T_B^{G1}(0, y) T_{A/B}^{G2}(x, 0)``."""
    _check_cap(lst, cap)
    lhs = g_tutte_naive(lst, g1 * g2, cap)
    rhs = BiPoly()
    n = len(lst)
    for mask in range(1 << n):
        b = [i for i in range(n) if mask >> i & 1]
        restricted = g_tutte_naive(lst.restrict(b), g1, cap)
        contracted = g_tutte_naive(lst.contract(b), g2, cap)
        rhs = rhs + _partial(restricted, x=0) * _partial(contracted, y=0)
    return lhs, rhs


def convolution_check(lst, g1, g2, cap=None) -> bool:
    lhs, rhs = convolution_sides(lst, g1, g2, cap)
    return lhs == rhs


def duality_check(lst: ElementList, target: TargetGroup, cap: int | None = None) -> bool:
    """``T_{A^dagger}(x, y) == T_A(y, x)``."""
    dual = dual_construction(lst)
    return g_tutte_naive(dual, target, cap) == g_tutte_naive(lst, target, cap).swap()


def duality_invariants_check(lst: ElementList, target: TargetGroup, cap: int | None = None) -> bool:
    """``r^dagger_S = #S - r_[n] + r_{S^c}`` and ``m^dagger(S) = m(S^c)`` for every S."""
    dual = dual_construction(lst)
    ours = MultiplicityTable(lst, target, cap)
    theirs = MultiplicityTable(dual, target, cap)
    full = (1 << ours.n) - 1
    r_full = list_rank(lst)
    for mask in range(full + 1):
        comp = full & ~mask
        if theirs.rank[mask] != bin(mask).count("1") - r_full + ours.rank[comp]:
            return False
        if theirs.mult[mask] != ours.mult[comp]:
            return False
    return True
