"""Point counts, Euler characteristics, characteristic quasi-polynomials
and Poincare polynomials of complements ``M(A; Gamma, G)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .abelian_core import ElementList
from .errors import BudgetExceeded, CompactGroup, NonFiniteGroup
from .gtutte_engine import characteristic_from_profile, g_characteristic, sweep_profile, sublists
from .polynomials import UniPoly, eval_rational
from .target import TargetGroup

DEFAULT_MAX_ENUMERATION = 10 ** 8
_CHUNK = 1 << 16


@dataclass(frozen=True)
class QuasiPolynomial:
    """A quasi-polynomial with period ``period`` and one constituent per divisor."""

    period: int
    constituents: dict[int, UniPoly]

    def constituent(self, k: int) -> UniPoly:
        return self.constituents[gcd(k, self.period)]

    def evaluate(self, q: int) -> int:
        return self.constituent(q)(q)


def period(lst: ElementList) -> int:
    """``lcm`` over all sublists S of the largest invariant factor of ``(Gamma/<S>)_tor``."""
    rho = 1
    for torsion, _, _ in sweep_profile(lst):
        if torsion:
            rho = lcm(rho, torsion[-1])
    return rho


def _require_finite(target: TargetGroup):
    if not target.is_finite:
        raise NonFiniteGroup(f"{target} is not a finite group")


def count_homomorphisms(lst_or_group, target: TargetGroup, zero: Sequence[Sequence[int]] = (),
                        nonzero: Sequence[Sequence[int]] = (),
                        budget: int = DEFAULT_MAX_ENUMERATION) -> int:
    """Count ``phi in Hom(Gamma, G)`` with ``phi(z) = 0`` for every ``z`` in
    ``zero`` and ``phi(w) != 0`` for every ``w`` in ``nonzero``.

    Every tuple in ``G^m`` is tried and kept when it kills the relation
    columns of the presentation; no normal form is used.
    """
    _require_finite(target)
    group = getattr(lst_or_group, "group", lst_or_group)
    m = group.ambient_rank
    order = target.finite_order
    total = order ** m
    if total > budget:
        raise BudgetExceeded(f"{order}^{m} = {total} tuples exceeds the budget {budget}")
    factors = target.finite_factors
    # all elements of G as residue tuples, one column per cyclic factor
    elems = np.array(np.meshgrid(*[np.arange(f) for f in factors], indexing="ij")).reshape(len(factors), -1).T \
        if factors else np.zeros((1, 0), dtype=np.int64)
    mods = np.array(factors, dtype=np.int64)
    big = m * max(factors, default=1) ** 2 >= 2 ** 62
    dtype = object if big else np.int64
    elems = elems.astype(dtype)

    def reduced(vectors):
        vs = [tuple(int(x) for x in v) for v in vectors]
        return [np.array([[x % f for f in factors] for x in v], dtype=dtype).reshape(m, len(factors)) for v in vs]

    killed = reduced(list(group.relations) + list(zero))
    avoided = reduced(nonzero)
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = [(idx // order ** i) % order for i in range(m)]
        phi = [elems[d] for d in digits]  # phi[i]: image of the i-th generator, shape (N, k)

        def value(v):
            acc = np.zeros((len(idx), len(factors)), dtype=dtype)
            for i in range(m):
                acc = acc + phi[i] * v[i]
            return acc % mods if factors else acc

        keep = np.ones(len(idx), dtype=bool)
        for v in killed:
            keep &= ~(value(v) != 0).any(axis=1)
        for v in avoided:
            keep &= (value(v) != 0).any(axis=1)
        count += int(keep.sum())
    return count


def point_count_bruteforce(lst: ElementList, target: TargetGroup,
                           budget: int = DEFAULT_MAX_ENUMERATION) -> int:
    """``#M(A; Gamma, G)`` by sweeping all of ``G^m``."""
    return count_homomorphisms(lst.group, target, nonzero=lst.lifts, budget=budget)


def point_count_formula(lst: ElementList, target: TargetGroup) -> int:
    """``#M(A; Gamma, G) = chi^G(#G)`` for finite G."""
    _require_finite(target)
    return g_characteristic(lst, target)(target.finite_order)


def quasi_polynomial(lst: ElementList) -> QuasiPolynomial:
    """Period and constituents ``f_k = chi^{Z/kZ}`` for every divisor ``k``."""
    prof = sweep_profile(lst)
    rho = 1
    for torsion, _, _ in prof:
        if torsion:
            rho = lcm(rho, torsion[-1])
    r_group = lst.group.free_rank
    constituents = {
        k: characteristic_from_profile(prof, r_group, TargetGroup.cyclic(k))
        for k in range(1, rho + 1) if rho % k == 0
    }
    return QuasiPolynomial(rho, constituents)


def euler_characteristic(lst: ElementList, target: TargetGroup,
                         chi: UniPoly | None = None) -> tuple[int, int]:
    """``(e_semi, e_top)`` of the complement for a Lie group with finitely many components."""
    chi = g_characteristic(lst, target) if chi is None else chi
    g = target.dim
    e_semi = chi(target.e_semi)
    e_top = (-1) ** (g * lst.group.free_rank) * chi((-1) ** g * target.e_top)
    return e_semi, e_top


def poincare_polynomial(lst: ElementList, target: TargetGroup, chi: UniPoly | None = None) -> UniPoly:
    """Poincare polynomial of the complement for a non-compact ``G``.

    ``P(t) = (-t^{g-1})^{r_Gamma} chi^G(-P_G(t) / t^{g-1})`` with ``g = dim G``.
    The formula fails for compact groups, which are rejected.
    """
    if target.is_compact:
        raise CompactGroup(f"{target} is compact; the Poincare formula needs a real factor")
    chi = g_characteristic(lst, target) if chi is None else chi
    t = UniPoly.t()
    shift = t ** (target.dim - 1)
    p_g = UniPoly.from_coeffs(target.poincare_coefficients())
    prefactor = (-shift) ** lst.group.free_rank
    return eval_rational(chi, [(-p_g, shift)], prefactor)


def partition_check(lst: ElementList, target: TargetGroup,
                    budget: int = DEFAULT_MAX_ENUMERATION) -> bool:
    """``Hom(Gamma, G)`` is the disjoint union over S of ``M(A/S; Gamma/<S>, G)``."""
    whole = count_homomorphisms(lst.group, target, budget=budget)
    parts = sum(point_count_bruteforce(lst.contract(s), target, budget) for s in sublists(len(lst)))
    return parts == whole


def functional_equation_check(lst: ElementList, coxeter_number: int, rank: int,
                              target: TargetGroup | None = None, chi: UniPoly | None = None) -> bool:
    """``chi(h - t) == (-1)^rank chi(t)`` for the toric (``C^x``) characteristic polynomial."""
    if chi is None:
        chi = g_characteristic(lst, target or TargetGroup.complex_star())
    reflected = chi(UniPoly.from_coeffs([coxeter_number, -1]))
    return reflected == chi * (-1) ** rank
