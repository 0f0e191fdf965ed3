import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings

from gtutte.abelian_core import free_group, group_from_presentation, make_list
from gtutte.errors import BudgetExceeded, CompactGroup, NonFiniteGroup
from gtutte.gtutte_engine import g_characteristic
from gtutte.polynomials import UniPoly
from gtutte.root_systems import positive_roots
from gtutte.target import TargetGroup
from gtutte.topology import (
    count_homomorphisms,
    euler_characteristic,
    functional_equation_check,
    partition_check,
    period,
    point_count_bruteforce,
    point_count_formula,
    poincare_polynomial,
    quasi_polynomial,
)

from _instances import element_lists, finite_targets, random_list

t = UniPoly.t()
CX = TargetGroup.complex_star()


def interpolate(points):
    """Lagrange interpolation through integer points, returned as a UniPoly."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = [a - xj * b for a, b in zip([Fraction(0)] + basis, basis + [Fraction(0)])]
                denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    assert all(c.denominator == 1 for c in coeffs)
    return UniPoly.from_coeffs([int(c) for c in coeffs])


@pytest.fixture(scope="module")
def g2():
    return positive_roots("G2").positive_roots


def test_point_counts_g2(g2):
    z7 = TargetGroup.cyclic(7)
    assert point_count_bruteforce(g2, z7) == 12
    assert point_count_formula(g2, z7) == 12
    assert point_count_formula(g2, TargetGroup.cyclic(6)) == 12


def test_point_counts_small():
    empty = make_list(free_group(3), [])
    assert point_count_bruteforce(empty, TargetGroup.cyclic(5)) == 125
    boolean = make_list(free_group(3), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert point_count_formula(boolean, TargetGroup.cyclic(2)) == 1
    assert point_count_bruteforce(boolean, TargetGroup.cyclic(2)) == 1


def test_point_count_with_torsion_in_gamma():
    # phi = (a, b) on Z + Z/4 kills (2, 2) iff 2a + 2b = 0 mod 4
    lst = make_list(group_from_presentation(2, [(0, 4)]), [(2, 2)])
    z4 = TargetGroup.cyclic(4)
    assert count_homomorphisms(lst.group, z4) == 16
    assert point_count_bruteforce(lst, z4) == 8
    assert point_count_formula(lst, z4) == 8


def test_count_guards(g2):
    with pytest.raises(NonFiniteGroup):
        point_count_formula(g2, TargetGroup.circle())
    with pytest.raises(NonFiniteGroup):
        point_count_bruteforce(g2, TargetGroup.real())
    with pytest.raises(BudgetExceeded):
        point_count_bruteforce(g2, TargetGroup.cyclic(7), budget=48)


@settings(max_examples=60)
@given(element_lists(max_n=5), finite_targets)
def test_counting_formula_matches_bruteforce(lst, g):
    assert point_count_formula(lst, g) == point_count_bruteforce(lst, g)


def test_period_examples(g2):
    assert period(g2) == 6
    assert period(make_list(free_group(1), [(1,)])) == 1
    assert period(positive_roots("B2").positive_roots) == 2


def test_quasi_polynomial_g2(g2):
    qp = quasi_polynomial(g2)
    assert qp.period == 6
    assert qp.constituents[6] == t ** 2 - 6 * t + 12
    assert qp.constituents[1] == t ** 2 - 6 * t + 5
    # the 1-constituent, recovered from brute-force counts at q = 1 mod 6
    counts = [(q, point_count_bruteforce(g2, TargetGroup.cyclic(q))) for q in (7, 13, 19)]
    assert interpolate(counts) == qp.constituents[1]
    assert qp.evaluate(12) == 12 ** 2 - 72 + 12


def test_quasi_polynomial_small():
    qp = quasi_polynomial(make_list(free_group(1), [(1,)]))
    assert qp.period == 1 and qp.constituents == {1: t - 1}
    b2 = quasi_polynomial(positive_roots("B2").positive_roots)
    assert b2.period == 2
    assert b2.constituents[2] == (t - 2) ** 2


def test_quasi_polynomial_against_counts_random():
    rng = random.Random(11)
    for _ in range(15):
        lst = random_list(rng, max_rank=2, max_n=4, free=True)
        qp = quasi_polynomial(lst)
        for q in range(1, 13):
            assert qp.evaluate(q) == point_count_bruteforce(lst, TargetGroup.cyclic(q))
        assert qp.constituents[qp.period] == g_characteristic(lst, TargetGroup.circle())
        assert qp.constituents[qp.period] == g_characteristic(lst, CX)
        assert qp.constituent(5) == qp.constituents[gcd(5, qp.period)]


def test_euler_examples(g2):
    assert euler_characteristic(g2, CX)[1] == 12
    assert euler_characteristic(make_list(free_group(2), []), CX) == (0, 0)
    f4 = positive_roots("F4").positive_roots
    assert euler_characteristic(f4, CX)[1] == 1152


@given(element_lists(max_n=5), finite_targets)
def test_euler_of_finite_group_is_count(lst, g):
    e_semi, e_top = euler_characteristic(lst, g)
    count = point_count_bruteforce(lst, g)
    assert e_semi == count == e_top


def test_poincare_examples(g2):
    assert poincare_polynomial(g2, CX) == 19 * t ** 2 + 8 * t + 1
    f4 = positive_roots("F4").positive_roots
    assert poincare_polynomial(f4, CX) == UniPoly.from_coeffs([1, 28, 286, 1260, 2153])
    assert poincare_polynomial(make_list(free_group(3), []), CX) == (1 + t) ** 3
    boolean = make_list(free_group(2), [(1, 0), (0, 1)])
    assert poincare_polynomial(boolean, TargetGroup.real()) == 4


def test_poincare_compact():
    with pytest.raises(CompactGroup):
        poincare_polynomial(make_list(free_group(1), [(1,)]), TargetGroup.circle())
    with pytest.raises(CompactGroup):
        poincare_polynomial(make_list(free_group(1), [(1,)]), TargetGroup.cyclic(3))


@settings(max_examples=30)
@given(element_lists(max_n=5))
def test_poincare_positive(lst):
    for g in (CX, TargetGroup.real(), TargetGroup.complex(), TargetGroup((), 1, 1), TargetGroup((2,), 0, 1)):
        p = poincare_polynomial(lst, g)
        assert all(c >= 0 for _, c in p.items())
    p = poincare_polynomial(lst, CX)
    assert p(-1) == euler_characteristic(lst, CX)[1]


def test_partition(example85):
    assert partition_check(example85, TargetGroup.cyclic(4))
    assert partition_check(make_list(free_group(2), []), TargetGroup.cyclic(3))


def test_partition_random():
    rng = random.Random(5)
    for _ in range(10):
        lst = random_list(rng, max_rank=2, max_n=4)
        g = TargetGroup.cyclic(rng.randint(2, 6))
        assert partition_check(lst, g)


@pytest.mark.parametrize("name, h, rank", [("G2", 6, 2), ("A2", 3, 2), ("B3", 6, 3)])
def test_functional_equation(name, h, rank):
    assert functional_equation_check(positive_roots(name).positive_roots, h, rank)
