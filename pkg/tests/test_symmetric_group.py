import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arikikoike.combinatorics import (
    IntervalVector,
    Multipartition,
    concatenate,
    dual_multipartition,
    interval_vector,
    is_standard,
    j_numbers,
    remove_node,
    removable_nodes,
    row_tableau,
    column_tableau,
)
from arikikoike.errors import ContractError
from arikikoike.symmetric_group import (
    Permutation,
    component_w_factors,
    cycle_element,
    distinguished_coset_reps,
    group_order,
    is_distinguished,
    reduced_word,
    standard_tableau_perms,
    w_of_interval,
    w_of_multipartition,
    young_blocks,
    young_subgroup,
)

from conftest import multipartitions_st

MP = Multipartition.parse


def perms_st(r_max=7):
    return st.integers(1, r_max).flatmap(lambda r: st.permutations(range(1, r + 1))).map(
        lambda xs: Permutation(tuple(xs)))


@given(perms_st(), st.data())
def test_product_applies_left_factor_first(v, data):
    w = data.draw(st.permutations(range(1, v.r + 1)).map(lambda xs: Permutation(tuple(xs))))
    for i in range(1, v.r + 1):
        assert (v * w)(i) == w(v(i))


@given(perms_st())
def test_reduced_word_round_trip_and_length(w):
    word = reduced_word(w.images)
    assert len(word) == w.length
    assert Permutation.from_word(word, w.r) == w
    assert w * w.inverse() == Permutation.identity(w.r)


def test_cycle_element_examples():
    assert cycle_element(2, 4, 5).images == (1, 4, 2, 3, 5)
    assert cycle_element(3, 3, 5).is_identity()
    assert cycle_element(1, 2, 2).images == (2, 1)
    assert cycle_element(4, 2, 5) == cycle_element(2, 4, 5).inverse()
    with pytest.raises(ContractError):
        cycle_element(0, 2, 3)


def test_w_of_interval_examples():
    assert w_of_interval(IntervalVector((0, 4, 8, 9))).images == (6, 7, 8, 9, 2, 3, 4, 5, 1)
    assert w_of_interval(IntervalVector((0, 1, 2))).images == (2, 1)
    assert w_of_interval(IntervalVector((0, 5))).is_identity()


def test_w_of_multipartition_examples():
    assert w_of_multipartition(MP("3,2")).images == (1, 3, 5, 2, 4)
    assert w_of_multipartition(MP("3,1|2,2|1")).images == (6, 8, 9, 7, 2, 4, 3, 5, 1)
    assert w_of_multipartition(MP("1|1")).images == (2, 1)


def _conjugate_set(group, w):
    winv = w.inverse()
    return {(winv * g * w).images for g in group}


@pytest.mark.parametrize("bounds", [(0, 4, 8, 9), (0, 1, 2), (0, 0, 3), (0, 2, 2, 5), (0, 1, 3, 3, 4)])
def test_w_interval_conjugates_young_subgroups(bounds):
    a = IntervalVector(bounds)
    r = a.r
    S_a = young_subgroup(young_blocks(a.composition().parts), r)
    S_dual = young_subgroup(young_blocks(a.dual().composition().parts), r)
    assert _conjugate_set(S_a, w_of_interval(a)) == {g.images for g in S_dual}


@given(multipartitions_st(size_max=6))
def test_w_lambda_carries_row_tableau_to_column_tableau(L):
    w = w_of_multipartition(L)
    t_row, t_col = row_tableau(L), column_tableau(L)
    assert all(w(v) == t_col[n] for n, v in t_row.items())


@given(multipartitions_st(size_max=6))
def test_w_lambda_factorises_through_components(L):
    w = Permutation.identity(L.r)
    for f in component_w_factors(L):
        w = w * f
    assert w * w_of_interval(interval_vector(L)) == w_of_multipartition(L)


@given(multipartitions_st(size_max=5))
def test_trivial_intersection(L):
    if L.r == 0:
        return
    w = w_of_multipartition(L)
    bar = young_subgroup(young_blocks(concatenate(L)[0].parts), L.r)
    bar_dual = {g.images for g in young_subgroup(young_blocks(concatenate(dual_multipartition(L))[0].parts), L.r)}
    assert _conjugate_set(bar, w) & bar_dual == {tuple(range(1, L.r + 1))}


@pytest.mark.parametrize("lam", ["3,2", "2,1", "4,2,1", "3,3", "2,2,1,1", "5"])
def test_type_a_w_lambda_is_distinguished_double_coset_rep(lam):
    L = MP(lam)
    w = w_of_multipartition(L)
    blocks = young_blocks(L[1].parts)
    blocks_dual = young_blocks(dual_multipartition(L)[1].parts)
    assert is_distinguished(w, blocks)
    assert is_distinguished(w.inverse(), blocks_dual)
    conj = _conjugate_set(young_subgroup(blocks, L.r), w)
    assert conj & {g.images for g in young_subgroup(blocks_dual, L.r)} == {tuple(range(1, L.r + 1))}


def test_standard_tableau_perm_examples():
    assert len(standard_tableau_perms(MP("2,1"), "column")) == 2
    assert len(standard_tableau_perms(MP("1|1"), "column")) == 2
    assert len(standard_tableau_perms(MP("4"), "column")) == 1


@given(multipartitions_st(size_max=6))
def test_standard_tableau_perms_match_brute_force(L):
    if L.r > 6:
        return
    base = column_tableau(L)
    brute = set()
    for imgs in itertools.permutations(range(1, L.r + 1)):
        d = Permutation(imgs)
        if is_standard(L, {n: d(v) for n, v in base.items()}):
            brute.add(imgs)
    col = {d.images for d in standard_tableau_perms(L, "column")}
    dual = {d.images for d in standard_tableau_perms(L, "dual_row")}
    assert col == brute
    assert dual == brute


def test_distinguished_coset_reps_examples():
    assert {d.images for d in distinguished_coset_reps([], 2)} == {(1, 2), (2, 1)}
    assert [d.images for d in distinguished_coset_reps([(1, 2)], 2)] == [(1, 2)]
    assert len(distinguished_coset_reps([(1, 2)], 3)) == 3


@pytest.mark.parametrize("parts", [(2, 1), (1, 2, 1), (3, 2), (2, 2)])
def test_distinguished_reps_are_minimal_in_their_cosets(parts):
    blocks = young_blocks(parts)
    r = sum(parts)
    reps = distinguished_coset_reps(blocks, r)
    assert len(reps) == math.factorial(r) // group_order(blocks)
    subgroup = young_subgroup(blocks, r)
    seen = set()
    for d in reps:
        coset = [g * d for g in subgroup]
        assert d.length == min(x.length for x in coset)
        assert all(x.length == d.length for x in coset if x == d)
        seen |= {x.images for x in coset}
    assert len(seen) == math.factorial(r)


def _lemma_33_sets(L):
    r = L.r
    lhs = {d.images for d in standard_tableau_perms(L, "column")}
    rhs = []
    for n, j in j_numbers(L):
        s = cycle_element(j, r, r)
        for x in standard_tableau_perms(remove_node(L, n), "column"):
            rhs.append((s * x.extend(r)).images)
    return lhs, rhs


@pytest.mark.parametrize("m,r", [(1, 5), (2, 4), (3, 3), (2, 5), (1, 6)])
def test_standard_set_decomposes_over_removable_nodes(m, r):
    from arikikoike.combinatorics import enumerate_multipartitions
    for L in enumerate_multipartitions(m, r):
        lhs, rhs = _lemma_33_sets(L)
        assert len(rhs) == len(set(rhs))
        assert set(rhs) == lhs


@pytest.mark.parametrize("m,r", [(1, 5), (2, 4), (3, 3), (2, 5)])
def test_w_lambda_factorisation_through_removed_node(m, r):
    from arikikoike.combinatorics import enumerate_multipartitions
    for L in enumerate_multipartitions(m, r):
        w = w_of_multipartition(L)
        for n, j in j_numbers(L):
            i = w.inverse()(j)
            rhs = cycle_element(i, r, r) * w_of_multipartition(remove_node(L, n)).extend(r) * cycle_element(r, j, r)
            assert rhs == w
