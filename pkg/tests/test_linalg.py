import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arikikoike.algebra import context_for, z_element
from arikikoike.coefficients import f5_parameters, generic_parameters
from arikikoike.combinatorics import Multipartition
from arikikoike.errors import ContractError, VerificationError
from arikikoike.linalg import (
    Echelon,
    Vector,
    apply_matrix,
    devectorize,
    hom_dimension,
    module_closure,
    section_dimensions,
    span,
    submodule_closure,
    vectorize,
)
from arikikoike.specht import specht_module

MP = Multipartition.parse


def ctx_of(m, r, kind="generic"):
    return context_for(generic_parameters(m, r) if kind == "generic" else f5_parameters(m, r))


def test_vectorize_examples_and_round_trip():
    c = ctx_of(2, 2)
    v = vectorize(c, c.one())
    assert v.coords == {c.index[((0, 0), (1, 2))]: 1}
    assert vectorize(c, c.zero()).is_zero()
    z = z_element(c, MP("1|1"))
    assert devectorize(c, vectorize(c, z)) == z


@given(st.integers(0, 10 ** 6), st.integers(-5, 5))
@settings(max_examples=30)
def test_vectorize_is_linear(seed, s):
    c = ctx_of(2, 2, "f5")
    rng = random.Random(seed)
    a = c.element({rng.choice(c.basis): rng.randint(-3, 3) for _ in range(3)})
    b = c.element({rng.choice(c.basis): rng.randint(-3, 3) for _ in range(3)})
    assert vectorize(c, a + b) == vectorize(c, a) + vectorize(c, b)
    assert vectorize(c, s * a) == vectorize(c, a).scale(c.field(s))


def test_vector_rejects_bad_index():
    with pytest.raises(ContractError):
        Vector({5: 1}, 3)


def test_echelon_reduced_form():
    F = Fraction
    ech = Echelon([{0: F(2), 1: F(4)}, {0: F(1), 2: F(1)}, {1: F(2), 2: F(-1)}])
    assert ech.rank == 2
    for p, row in ech.rows.items():
        assert row[p] == 1 and p == min(row)
        for q in ech.rows:
            assert q == p or q not in row
    assert ech.contains({0: F(3), 1: F(6)})
    assert not ech.contains({2: F(1)})


@given(st.lists(st.dictionaries(st.integers(0, 5), st.integers(-4, 4), max_size=4), max_size=6))
def test_echelon_rank_matches_gaussian_elimination(vectors):
    rows = [[Fraction(v.get(i, 0)) for i in range(6)] for v in vectors]
    rank = 0
    for col in range(6):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    ech = Echelon({i: Fraction(x) for i, x in v.items() if x} for v in vectors)
    assert ech.rank == rank


def test_closure_examples():
    c1 = ctx_of(1, 2)
    assert submodule_closure(c1, [vectorize(c1, c1.one())]).rank == 2
    c2 = ctx_of(2, 2)
    assert submodule_closure(c2, [vectorize(c2, z_element(c2, MP("1|1")))]).rank == 2
    assert submodule_closure(c2, []).rank == 0
    with pytest.raises(ContractError):
        submodule_closure(c2, [], [5])


@pytest.mark.parametrize("kind", ["generic", "f5"])
def test_closure_is_idempotent_and_closed(kind):
    c = ctx_of(2, 3, kind)
    S = specht_module(c, MP("2|1"))
    again = submodule_closure(c, list(S.rows))
    assert again.same_space(S)
    for g, mat in S.action.items():
        for row, coords in zip(S.rows, mat):
            img = vectorize(c, devectorize(c, row) * c.generator(g)).coords
            assert img == apply_matrix(coords, [r for r in S.rows])


@pytest.mark.parametrize("m,r,kind", [(2, 2, "generic"), (2, 3, "f5"), (1, 3, "generic")])
def test_action_matrices_satisfy_relations(m, r, kind):
    c = ctx_of(m, r, kind)
    M = submodule_closure(c, [vectorize(c, c.one())])
    assert M.rank == c.dim
    q = c.q

    def act(v, word):
        for g in word:
            v = apply_matrix(v, M.action[g])
        return v

    def combo(*pairs):
        out = {}
        for s, v in pairs:
            for i, x in v.items():
                out[i] = out.get(i, 0) + s * x
        return {i: x for i, x in out.items() if x != 0}

    for k in range(M.rank):
        e = {k: c.field(1)}
        for i in range(1, r):
            assert act(e, [i, i]) == combo((q - 1, act(e, [i])), (q, e))
        for i in range(1, r - 1):
            assert act(e, [i, i + 1, i]) == act(e, [i + 1, i, i + 1])
        if r >= 2:
            assert act(e, [0, 1, 0, 1]) == act(e, [1, 0, 1, 0])


def test_coordinates():
    c = ctx_of(2, 2)
    S = specht_module(c, MP("1|1"))
    v = {}
    for i, x in S.rows[0].items():
        v[i] = 3 * x
    for i, x in S.rows[1].items():
        v[i] = v.get(i, 0) - x
    v = {i: x for i, x in v.items() if x != 0}
    assert S.coordinates(v) == {0: 3, 1: -1}
    with pytest.raises(VerificationError):
        S.coordinates(vectorize(c, c.one()).coords)


def test_section_dimensions():
    c = ctx_of(2, 2)
    S = specht_module(c, MP("1|1"))
    A = span(c.dim, [S.rows[0]])
    zero = span(c.dim, [])
    assert section_dimensions([zero, A, S]) == [0, 1, 1]
    with pytest.raises(VerificationError) as exc:
        section_dimensions([S, A])
    assert exc.value.details == {"index": 1}


def test_hom_dimension_examples():
    c = ctx_of(2, 2)
    S = specht_module(c, MP("1|1"))
    assert hom_dimension(S, S, S.generators) == 1
    c1 = ctx_of(1, 2)
    a, b = specht_module(c1, MP("2")), specht_module(c1, MP("1,1"))
    assert hom_dimension(a, b, a.generators) == 0
    assert hom_dimension(a, b, ()) == a.rank * b.rank
    with pytest.raises(ContractError):
        hom_dimension(a, span(c1.dim, a.rows), (0, 1))
    with pytest.raises(ContractError):
        a.restrict([0, 1, 2])


def test_hom_dimension_of_regular_module():
    c = ctx_of(2, 2)
    R = submodule_closure(c, [vectorize(c, c.one())])
    # End of the regular right module is the algebra itself
    assert hom_dimension(R, R, R.generators) == c.dim


def test_module_closure():
    c = ctx_of(1, 3)
    R = submodule_closure(c, [vectorize(c, c.one())])
    assert module_closure(R, [{0: c.field(1)}]).rank == c.dim
    S = specht_module(c, MP("2,1"))
    assert module_closure(S, [{0: c.field(1)}]).rank == S.rank
