import itertools
import math

import pytest
from hypothesis import given

from arikikoike.combinatorics import (
    Composition,
    IntervalVector,
    Multipartition,
    Node,
    Partition,
    add_node,
    addable_nodes,
    concatenate,
    conjugate,
    dominance_le,
    dual_multipartition,
    enumerate_multipartitions,
    hook_length_count,
    interval_vector,
    is_l_regular,
    is_standard,
    j_numbers,
    partitions,
    remove_node,
    removable_nodes,
    standard_tableaux,
)
from arikikoike.errors import ContractError

from conftest import multipartitions_st, partitions_st

MP = Multipartition.parse
EX = MP("3,1|2,2|1")


def test_conjugate_examples():
    assert conjugate(Partition((3, 2))) == Partition((2, 2, 1))
    assert conjugate(Partition((4,))) == Partition((1, 1, 1, 1))
    assert conjugate(Partition(())) == Partition(())


@given(partitions_st())
def test_conjugate_involution(p):
    c = conjugate(p)
    assert c.size == p.size
    assert conjugate(c) == p


def test_partition_rejects_increasing_parts():
    with pytest.raises(ContractError):
        Partition((1, 2))


def test_dual_multipartition_examples():
    assert dual_multipartition(EX) == MP("1|2,2|2,1,1")
    assert dual_multipartition(MP("1|1")) == MP("1|1")


@given(multipartitions_st())
def test_dual_involution(L):
    assert dual_multipartition(dual_multipartition(L)) == L


def test_concatenate_examples():
    assert concatenate(EX) == (Composition((3, 1, 2, 2, 1)), IntervalVector((0, 4, 8, 9)))
    assert concatenate(MP("0|2")) == (Composition((2,)), IntervalVector((0, 0, 2)))
    assert concatenate(MP("1|1")) == (Composition((1, 1)), IntervalVector((0, 1, 2)))


def test_parse_and_json_round_trip():
    assert str(EX) == "3,1|2,2|1"
    assert MP("0|2") == Multipartition.of([], [2])
    assert Multipartition.from_json(EX.to_json()) == EX
    assert EX.to_json() == {"components": [[3, 1], [2, 2], [1]]}
    with pytest.raises((ContractError, ValueError)):
        MP("1,2|x")


def test_dominance_examples():
    assert dominance_le(MP("1,1|0"), MP("2|0"))
    assert dominance_le(MP("0|2"), MP("2|0"))
    assert not dominance_le(MP("2|0"), MP("0|2"))
    with pytest.raises(ContractError):
        dominance_le(MP("1|1"), MP("1|1|0"))


@pytest.mark.parametrize("m,r", [(1, 4), (2, 3), (3, 2), (2, 4)])
def test_dominance_is_partial_order(m, r):
    Ls = enumerate_multipartitions(m, r)
    le = {(A, B): dominance_le(A, B) for A in Ls for B in Ls}
    for A in Ls:
        assert le[A, A]
    for A, B in itertools.product(Ls, Ls):
        if A != B:
            assert not (le[A, B] and le[B, A])
    for A, B, C in itertools.product(Ls, Ls, Ls):
        if le[A, B] and le[B, C]:
            assert le[A, C]


@pytest.mark.parametrize("m,r", [(2, 4), (3, 3), (2, 5)])
def test_dominance_with_equal_intervals_is_componentwise(m, r):
    Ls = enumerate_multipartitions(m, r)
    for A, B in itertools.product(Ls, Ls):
        if interval_vector(A) == interval_vector(B):
            componentwise = all(A[k].dominated_by(B[k]) for k in range(1, m + 1))
            assert dominance_le(A, B) == componentwise


def _count_multipartitions(m, r):
    return sum(math.prod(sum(1 for _ in partitions(s)) for s in sizes)
               for sizes in itertools.product(range(r + 1), repeat=m) if sum(sizes) == r)


def test_enumerate_examples():
    assert [str(L) for L in enumerate_multipartitions(2, 2)] == ["2|0", "1,1|0", "1|1", "0|2", "0|1,1"]
    assert len(enumerate_multipartitions(1, 3)) == 3
    assert enumerate_multipartitions(3, 0) == [MP("0|0|0")]


@pytest.mark.parametrize("m,r", [(1, 6), (2, 4), (3, 3), (4, 2)])
def test_enumerate_is_complete_and_unique(m, r):
    Ls = enumerate_multipartitions(m, r)
    assert len(Ls) == len(set(Ls)) == _count_multipartitions(m, r)
    assert all(L.m == m and L.r == r for L in Ls)


def test_removable_nodes_examples():
    assert removable_nodes(EX) == [Node(1, 3, 1), Node(2, 1, 1), Node(2, 2, 2), Node(1, 1, 3)]
    assert removable_nodes(MP("1|1")) == [Node(1, 1, 1), Node(1, 1, 2)]
    assert removable_nodes(MP("0|0|0")) == []


def test_addable_nodes_examples():
    assert addable_nodes(MP("2")) == [Node(1, 3, 1), Node(2, 1, 1)]
    assert addable_nodes(MP("0|0")) == [Node(1, 1, 1), Node(1, 1, 2)]
    assert addable_nodes(MP("2|1")) == [Node(1, 3, 1), Node(2, 1, 1), Node(1, 2, 2), Node(2, 1, 2)]


def test_remove_node_examples():
    assert remove_node(EX, Node(2, 2, 2)) == MP("3,1|2,1|1")
    assert remove_node(MP("1|1"), Node(1, 1, 1)) == MP("0|1")
    with pytest.raises(ContractError, match=r"\(1,1\)_1"):
        remove_node(EX, Node(1, 1, 1))


@given(multipartitions_st())
def test_remove_add_round_trip(L):
    for n in removable_nodes(L):
        smaller = remove_node(L, n)
        assert smaller.r == L.r - 1
        assert add_node(smaller, n) == L
    for n in addable_nodes(L):
        assert remove_node(add_node(L, n), n) == L


@given(multipartitions_st())
def test_removable_count_is_sum_over_components(L):
    total = sum(len(removable_nodes(Multipartition((lam,)))) for lam in L.components)
    assert len(removable_nodes(L)) == total


@given(multipartitions_st())
def test_transpose_maps_removable_nodes_bijectively(L):
    m = L.m
    image = {Node(n.col, n.row, m - n.comp + 1) for n in removable_nodes(L)}
    assert image == set(removable_nodes(dual_multipartition(L)))
    assert len(image) == len(removable_nodes(L))


def test_j_numbers_examples():
    assert [j for _, j in j_numbers(EX)] == [9, 7, 5, 1]
    assert [j for _, j in j_numbers(MP("1|1"))] == [2, 1]
    assert [j for _, j in j_numbers(MP("5"))] == [5]


@given(multipartitions_st())
def test_j_numbers_decrease_and_start_components(L):
    js = j_numbers(L)
    vals = [j for _, j in js]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    a = interval_vector(L)
    for i in range(L.m):
        firsts = [j for n, j in js if n.comp == i + 1]
        if firsts:
            assert firsts[0] == L.r - a[i]


def test_l_regular_examples():
    assert not is_l_regular(MP("1,1,1"), 2)
    assert is_l_regular(MP("2|1"), 2)
    assert is_l_regular(MP("1,1,1,1|1,1"), math.inf)


def test_hook_length_small_cases():
    assert hook_length_count(Partition((2, 1))) == 2
    assert hook_length_count(Partition((3, 2))) == 5
    assert hook_length_count(Partition((2, 2))) == 2


@given(multipartitions_st(size_max=6))
def test_standard_tableaux_are_standard_and_distinct(L):
    seen = set()
    for t in standard_tableaux(L):
        assert sorted(t.values()) == list(range(1, L.r + 1))
        assert is_standard(L, t)
        seen.add(tuple(sorted(t.items())))
    count = math.factorial(L.r)
    for lam in L.components:
        count = count // math.factorial(lam.size) * hook_length_count(lam)
    assert len(seen) == count
