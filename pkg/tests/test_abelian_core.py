from functools import reduce
from itertools import combinations
from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from gtutte.abelian_core import (
    FgGroup,
    dual_construction,
    free_group,
    group_from_presentation,
    hermite_basis,
    hom_count,
    is_coloop,
    is_loop,
    is_proper,
    list_rank,
    make_list,
    quotient,
    reduce_mod_lattice,
    smith_normal_form,
    span_invariants,
    sublist_rank,
)
from gtutte.errors import DimensionMismatch, NonTorsionElement
from gtutte.abelian_core import require_torsion
from gtutte.target import TargetGroup

from _instances import element_lists, target_groups


def laplace_det(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * laplace_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)) if m[0][j])


def minor_gcd(rows, k):
    r, c = len(rows), len(rows[0]) if rows else 0
    g = 0
    for ri in combinations(range(r), k):
        for ci in combinations(range(c), k):
            g = gcd(g, laplace_det([[rows[i][j] for j in ci] for i in ri]))
    return g


def test_snf_examples():
    assert smith_normal_form([[2, 0], [1, 2]]).invariant_factors == (1, 4)
    assert smith_normal_form([[2, 0], [1, 2]]).rank == 2
    assert smith_normal_form([]).invariant_factors == ()
    # relation columns (0,4) and (2,1), written as rows
    assert smith_normal_form([[0, 2], [4, 1]]).invariant_factors == (1, 8)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_snf_determinantal_divisors(rows):
    d = smith_normal_form(rows).invariant_factors
    for i in range(len(d) - 1):
        assert d[i + 1] % d[i] == 0
    for k in range(1, min(len(rows), len(rows[0])) + 1):
        expected = prod(d[:k]) if k <= len(d) else 0
        assert minor_gcd(rows, k) == expected


def test_presentations():
    z = group_from_presentation(1, [])
    assert (z.free_rank, z.torsion) == (1, ())
    g = group_from_presentation(2, [(0, 4)])
    assert (g.free_rank, g.torsion) == (1, (4,))
    assert group_from_presentation(2, [(0, 2), (0, 1)]) == free_group(1)
    assert str(g) == "Z + Z/4"


def test_presentation_dimension_check():
    with pytest.raises(DimensionMismatch):
        group_from_presentation(2, [(1, 2, 3)])
    with pytest.raises(DimensionMismatch):
        make_list(free_group(2), [(1,)])


def test_quotients(example85):
    assert quotient(example85, [0]) == FgGroup(1, ((8,),))
    assert quotient(example85, []) == example85.group
    lst = make_list(free_group(2), [(0, 2), (2, 1), (0, 1)])
    q = quotient(lst, [0, 1, 2])
    assert (q.free_rank, q.torsion) == (0, (2,))


def test_ranks(example85, triangle):
    assert sublist_rank(example85, [1]) == 0
    assert sublist_rank(example85, [0]) == 1
    assert list_rank(triangle) == 2


def test_loops_and_coloops(example85, triangle):
    assert is_loop(example85, 1)
    assert is_coloop(make_list(free_group(1), [(1,)]), 0)
    assert all(is_proper(triangle, i) for i in range(3))
    assert not is_loop(triangle, 0) and not is_coloop(triangle, 0)


def test_hom_count():
    assert hom_count((2,), TargetGroup.cyclic(2)) == 2
    assert hom_count((), TargetGroup.complex_star()) == 1
    assert hom_count((8,), TargetGroup.cyclic(4)) == 4
    assert hom_count((6, 4), TargetGroup.circle()) == 24
    assert hom_count((5,), TargetGroup.real()) == 1


@given(st.lists(st.integers(1, 12), max_size=3), target_groups(), target_groups())
def test_hom_count_multiplicative_in_target(factors, g1, g2):
    assert hom_count(factors, g1 * g2) == hom_count(factors, g1) * hom_count(factors, g2)


def test_require_torsion(example85):
    with pytest.raises(NonTorsionElement):
        require_torsion(example85)
    require_torsion(example85.restrict([1]))


def test_hermite_canonical():
    a = hermite_basis([(2, 4), (0, 6)], 2)
    b = hermite_basis([(2, -2), (2, 4)], 2)
    assert a == b
    assert reduce_mod_lattice((5, 7), a) == reduce_mod_lattice((3, 3), a)


@given(element_lists())
def test_rank_additivity(lst):
    g = lst.group
    for mask in range(1 << len(lst)):
        s = [i for i in range(len(lst)) if mask >> i & 1]
        assert quotient(lst, s).free_rank + sublist_rank(lst, s) == g.free_rank


@given(element_lists(max_n=5))
def test_rank_is_a_matroid_rank(lst):
    n = len(lst)
    r = {mask: sublist_rank(lst, [i for i in range(n) if mask >> i & 1]) for mask in range(1 << n)}
    for a in r:
        assert 0 <= r[a] <= min(bin(a).count("1"), lst.group.free_rank)
        for b in r:
            assert r[a | b] + r[a & b] <= r[a] + r[b]
            if a & b == a:
                assert r[a] <= r[b]


def test_dual_examples():
    d = dual_construction(make_list(free_group(1), [(2,)]))
    assert (d.group.free_rank, d.group.torsion) == (0, (2,))
    assert len(d) == 1
    d = dual_construction(make_list(free_group(1), [(1,)]))
    assert (d.group.free_rank, d.group.torsion) == (0, ())
    assert is_loop(d, 0)


@given(element_lists(max_n=5))
def test_dual_rank(lst):
    assert list_rank(dual_construction(lst)) == len(lst) - list_rank(lst)


@given(element_lists(max_n=5))
def test_double_dual_has_same_invariants(lst):
    dd = dual_construction(dual_construction(lst))
    n = len(lst)
    for mask in range(1 << n):
        s = [i for i in range(n) if mask >> i & 1]
        assert span_invariants(dd.group, dd.vectors(s))[1] == span_invariants(lst.group, lst.vectors(s))[1]
        assert sublist_rank(dd, s) == sublist_rank(lst, s)
    assert dd.group.torsion == lst.group.torsion


def test_contract_keeps_labels(example85):
    c = example85.contract([0])
    assert c.all_labels() == ("beta",)
    assert c.group == FgGroup(1, ((8,),))
    assert reduce(lambda a, b: a * b, c.group.torsion) == 8
