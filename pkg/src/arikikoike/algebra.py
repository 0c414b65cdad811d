"""
The Ariki-Koike algebra over an exact parameter point.

Elements are sparse combinations of the normal-form monomials
``L_1^c1 ... L_r^cr T_w`` with ``0 <= c_k < m``.  Internally a monomial is the
pair ``(c, w)`` of plain tuples, ``w`` in one-line notation.

Right multiplication by ``T_g`` (``g >= 1``) only touches the ``T_w`` part.
Right multiplication by ``T_0 = L_1`` pushes ``L_1`` leftwards through a
reduced word of ``w`` with the rule

    T_i L_i^a L_{i+1}^b = L_i^b L_{i+1}^a T_i
                          + (q-1) * sum_{s=b}^{a-1} (-1) L_i^s L_{i+1}^{a+b-s}    (a > b)
                          + (q-1) * sum_{s=a}^{b-1}      L_i^s L_{i+1}^{a+b-s}    (a < b)

which never raises an exponent past ``max(a, b)``.  The remaining overflow,
an exponent ``m`` on some ``L_j``, is removed by the cyclotomic relation for
``j = 1`` and by ``L_j^m = q^-1 T_{j-1} L_{j-1} T_{j-1} L_j^(m-1)`` for
``j > 1``, which recurses to ``L_{j-1}^m`` only.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Any, Iterable, Sequence

from .coefficients import ParameterSet, cyclotomic_coefficients
from .combinatorics import (
    Composition,
    IntervalVector,
    Multipartition,
    concatenate,
    dual_multipartition,
    interval_vector,
)
from .errors import ContractError, SizeGuardError
from .symmetric_group import (
    Permutation,
    inversions,
    reduced_word,
    w_of_interval,
    w_of_multipartition,
    young_blocks,
    young_subgroup,
)

DEFAULT_MAX_DIM = 20000

Key = tuple  # (exponents, one-line images)


def _acc(out: dict, key, coeff):
    v = out.get(key)
    v = coeff if v is None else v + coeff
    if v == 0:
        out.pop(key, None)
    else:
        out[key] = v


class AlgebraContext:
    """
    The algebra ``H^r_m`` at a concrete parameter point, with its monomial basis.

    Caches are filled with fully built values in a single assignment, so
    sharing a context between threads never exposes a partial result.
    """

    def __init__(self, params: ParameterSet, max_dim: int = DEFAULT_MAX_DIM):
        m, r = params.m, params.r
        dim = m ** r * factorial(r)
        if dim > max_dim:
            raise SizeGuardError(f"basis size {dim} for (m, r) = ({m}, {r}) exceeds guard {max_dim}")
        self.params = params
        self.m, self.r = m, r
        self.field = F = params.field
        self.q = params.q
        self.u = params.u
        self.one_scalar = F.one
        self._qinv = F.one / self.q
        self._qm1 = self.q - 1
        self._id = tuple(range(1, r + 1))
        perms = sorted(permutations(range(1, r + 1)))
        self.basis: list[Key] = [(c, w) for c in product(range(m), repeat=r) for w in perms]
        self.index: dict[Key, int] = {k: i for i, k in enumerate(self.basis)}
        # L_1^m = sum_j cyc[j] L_1^j
        self._cyc = [-c for c in cyclotomic_coefficients(self.u)]
        self._length: dict[tuple, int] = {}
        self._hecke: dict[tuple, dict] = {}
        self._power: dict[int, dict] = {}
        self._lkey: dict[tuple, dict] = {}
        self._tw_l1: dict[tuple, dict] = {}
        self._right: dict[tuple, dict] = {}
        self._rows: dict[tuple, dict] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self):
        return f"AlgebraContext({self.params})"

    # -- symmetric group helpers on raw tuples ---------------------------------

    def length(self, w: tuple) -> int:
        n = self._length.get(w)
        if n is None:
            n = self._length[w] = inversions(w)
        return n

    def _hecke_right(self, w: tuple, i: int) -> list:
        """``T_w T_i`` as ``[(w', coeff)]``."""
        pi, pj = w.index(i), w.index(i + 1)
        ws = list(w)
        ws[pi], ws[pj] = i + 1, i
        ws = tuple(ws)
        if pj < pi:
            return [(w, self._qm1), (ws, self.q)]
        return [(ws, self.one_scalar)]

    def _hecke_left(self, i: int, w: tuple) -> list:
        """``T_i T_w`` as ``[(w', coeff)]``."""
        sw = list(w)
        sw[i - 1], sw[i] = sw[i], sw[i - 1]
        sw = tuple(sw)
        if w[i - 1] > w[i]:
            return [(w, self._qm1), (sw, self.q)]
        return [(sw, self.one_scalar)]

    def _hecke_mul(self, x: tuple, y: tuple) -> dict:
        """``T_x T_y`` in the Hecke algebra of the symmetric group."""
        key = (x, y)
        out = self._hecke.get(key)
        if out is None:
            out = {x: self.one_scalar}
            for i in reduced_word(y):
                nxt: dict = {}
                for w, c in out.items():
                    for w2, c2 in self._hecke_right(w, i):
                        _acc(nxt, w2, c * c2)
                out = nxt
            self._hecke[key] = out
        return out

    # -- left multiplication machinery ----------------------------------------

    def _left_T(self, i: int, terms: dict) -> dict:
        out: dict = {}
        qm1 = self._qm1
        for (d, u), alpha in terms.items():
            a, b = d[i - 1], d[i]
            ds = list(d)
            ds[i - 1], ds[i] = b, a
            ds = tuple(ds)
            for u2, g in self._hecke_left(i, u):
                _acc(out, (ds, u2), alpha * g)
            if a != b:
                if a > b:
                    coeff, rng = -qm1 * alpha, range(b, a)
                else:
                    coeff, rng = qm1 * alpha, range(a, b)
                for s in rng:
                    e = list(d)
                    e[i - 1], e[i] = s, a + b - s
                    _acc(out, (tuple(e), u), coeff)
        return out

    def _power_m(self, j: int) -> dict:
        """Normal form of ``L_j^m``."""
        out = self._power.get(j)
        if out is not None:
            return out
        r, m = self.r, self.m
        if j == 1:
            out = {}
            for k, c in enumerate(self._cyc):
                if c != 0:
                    e = [0] * r
                    e[0] = k
                    out[(tuple(e), self._id)] = self.field(c)
        else:
            e = [0] * r
            e[j - 1] = m - 1
            start = {(tuple(e), self._id): self.one_scalar}
            a = self._left_T(j - 1, start)
            b = self._left_L(j - 1, a)
            c = self._left_T(j - 1, b)
            qinv = self._qinv
            out = {k: v * qinv for k, v in c.items()}
        self._power[j] = out
        return out

    def _left_L_key(self, j: int, key: Key) -> dict:
        cache_key = (j, key)
        out = self._lkey.get(cache_key)
        if out is not None:
            return out
        c, w = key
        if c[j - 1] < self.m - 1:
            e = list(c)
            e[j - 1] += 1
            out = {(tuple(e), w): self.one_scalar}
        else:
            d = list(c)
            d[j - 1] = 0
            y: dict = {}
            for (f, x), beta in self._power_m(j).items():
                for v, gamma in self._hecke_mul(x, w).items():
                    _acc(y, (f, v), beta * gamma)
            out = self._left_L_mono(tuple(d), y)
        self._lkey[cache_key] = out
        return out

    def _left_L(self, j: int, terms: dict) -> dict:
        out: dict = {}
        for key, alpha in terms.items():
            for k2, c2 in self._left_L_key(j, key).items():
                _acc(out, k2, alpha * c2)
        return out

    def _left_L_mono(self, d: Sequence[int], terms: dict) -> dict:
        for j, n in enumerate(d, 1):
            for _ in range(n):
                terms = self._left_L(j, terms)
        return terms

    def _left_Tw(self, w: tuple, terms: dict) -> dict:
        for i in reversed(reduced_word(w)):
            terms = self._left_T(i, terms)
        return terms

    def _Tw_L1(self, w: tuple) -> dict:
        out = self._tw_l1.get(w)
        if out is None:
            one = {((0,) * self.r, self._id): self.one_scalar}
            out = self._left_Tw(w, self._left_L(1, one))
            self._tw_l1[w] = out
        return out

    # -- right action by generators -------------------------------------------

    def right_mul_key(self, key: Key, g: int) -> dict:
        """Normal form of ``monomial * T_g`` as a key dict."""
        ck = (key, g)
        out = self._right.get(ck)
        if out is not None:
            return out
        if not 0 <= g < self.r:
            raise ContractError(f"generator T_{g} not in H^{self.r}_{self.m}")
        c, w = key
        if g == 0:
            out = self._left_L_mono(c, self._Tw_L1(w))
        else:
            out = {(c, w2): coeff for w2, coeff in self._hecke_right(w, g)}
        self._right[ck] = out
        return out

    def action_row(self, index: int, g: int) -> dict[int, Any]:
        """Coordinates of ``basis[index] * T_g`` keyed by basis index."""
        ck = (index, g)
        row = self._rows.get(ck)
        if row is None:
            row = {self.index[k]: v for k, v in self.right_mul_key(self.basis[index], g).items()}
            self._rows[ck] = row
        return row

    def _right_terms(self, terms: dict, g: int) -> dict:
        out: dict = {}
        for key, alpha in terms.items():
            for k2, c2 in self.right_mul_key(key, g).items():
                _acc(out, k2, alpha * c2)
        return out

    def right_mul_generator(self, e: "AlgebraElement", g: int) -> "AlgebraElement":
        self._check(e)
        return AlgebraElement(self, self._right_terms(e.terms, g))

    def monomial_word(self, key: Key) -> tuple[Any, list[int]]:
        """``(scalar, word)`` with ``monomial = scalar * T_word[0] ... T_word[-1]``."""
        c, w = key
        scalar = self.one_scalar
        word: list[int] = []
        for k, n in enumerate(c, 1):
            for _ in range(n):
                word += list(range(k - 1, 0, -1)) + [0] + list(range(1, k))
                scalar = scalar * self._qinv ** (k - 1)
        word += list(reduced_word(w))
        return scalar, word

    def multiply(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        """``a * b`` by right-multiplying ``a`` along generator words of ``b``'s monomials."""
        self._check(a)
        self._check(b)
        out: dict = {}
        for key, beta in b.terms.items():
            scalar, word = self.monomial_word(key)
            x = a.terms
            for g in word:
                x = self._right_terms(x, g)
            coeff = beta * scalar
            for k2, c2 in x.items():
                _acc(out, k2, coeff * c2)
        return AlgebraElement(self, out)

    def multiply_from_left(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        """``a * b`` by pushing each monomial of ``a`` onto ``b`` from the left."""
        self._check(a)
        self._check(b)
        out: dict = {}
        for (c, w), alpha in a.terms.items():
            x = self._left_L_mono(c, self._left_Tw(w, b.terms))
            for k2, c2 in x.items():
                _acc(out, k2, alpha * c2)
        return AlgebraElement(self, out)

    # -- constructors ----------------------------------------------------------

    def _check(self, e: "AlgebraElement"):
        if e.ctx is not self:
            raise ContractError("element belongs to a different algebra context")

    def element(self, terms: dict) -> "AlgebraElement":
        return AlgebraElement(self, {k: self.field(v) for k, v in terms.items()})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def scalar(self, x) -> "AlgebraElement":
        return AlgebraElement(self, {((0,) * self.r, self._id): self.field(x)})

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def T(self, w: Permutation | Sequence[int]) -> "AlgebraElement":
        images = tuple(w.images) if isinstance(w, Permutation) else tuple(w)
        if len(images) != self.r:
            raise ContractError(f"permutation {images} not in S_{self.r}")
        return AlgebraElement(self, {((0,) * self.r, images): self.one_scalar})

    def generator(self, g: int) -> "AlgebraElement":
        if g == 0:
            return self.jucys_murphy(1)
        return self.T(Permutation.simple(g, self.r))

    def jucys_murphy(self, k: int) -> "AlgebraElement":
        if not 1 <= k <= self.r:
            raise ContractError(f"L_{k} not defined for r={self.r}")
        if self.m == 1:
            # exponents are capped at 0, so L_k has to be rewritten
            return self._word_element(self.monomial_word_L(k))
        e = [0] * self.r
        e[k - 1] = 1
        return AlgebraElement(self, {(tuple(e), self._id): self.one_scalar})

    def monomial_word_L(self, k: int) -> tuple[Any, list[int]]:
        return self._qinv ** (k - 1), list(range(k - 1, 0, -1)) + [0] + list(range(1, k))

    def _word_element(self, scalar_word) -> "AlgebraElement":
        scalar, word = scalar_word
        terms = {((0,) * self.r, self._id): scalar}
        for g in word:
            terms = self._right_terms(terms, g)
        return AlgebraElement(self, terms)

    def monomial(self, c: Sequence[int], w: Permutation | Sequence[int]) -> "AlgebraElement":
        images = tuple(w.images) if isinstance(w, Permutation) else tuple(w)
        key = (tuple(c), images)
        if key not in self.index:
            raise ContractError(f"({c}, {images}) is not a normal-form monomial")
        return AlgebraElement(self, {key: self.one_scalar})

    def from_json(self, data: list) -> "AlgebraElement":
        terms = {}
        for item in data:
            key = (tuple(item["c"]), tuple(item["w"]))
            if key not in self.index:
                raise ContractError(f"not a basis monomial: {item}")
            terms[key] = self.field(item["coeff"])
        return AlgebraElement(self, terms)


class AlgebraElement:
    """A sparse linear combination of normal-form monomials; zeros are never stored."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self.ctx._check(other)
            return other
        return self.ctx.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return AlgebraElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ctx.multiply(self, other)
        s = self.ctx.field(other)
        return AlgebraElement(self.ctx, {k: v * s for k, v in self.terms.items()})

    def __rmul__(self, other):
        s = self.ctx.field(other)
        return AlgebraElement(self.ctx, {k: s * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ctx is other.ctx and self.terms == other.terms
        return self == self._coerce(other)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self) -> list:
        idx = self.ctx.index
        return sorted(self.terms.items(), key=lambda kv: idx[kv[0]])

    def to_json(self) -> list[dict]:
        return [{"c": list(c), "w": list(w), "coeff": str(v)} for (c, w), v in self.items()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (c, w), v in self.items():
            mono = "".join(f"L{k}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(c, 1) if e)
            if any(x != i for i, x in enumerate(w, 1)):
                mono += "T[" + ",".join(map(str, w)) + "]"
            parts.append(f"({v})*{mono}" if mono else f"({v})")
        return " + ".join(parts)


# -- distinguished elements -----------------------------------------------------


def jucys_murphy(ctx: AlgebraContext, k: int) -> AlgebraElement:
    return ctx.jucys_murphy(k)


def xy_element(ctx: AlgebraContext, comp: Composition | Sequence[int], sign: str) -> AlgebraElement:
    """
    ``plus``: the sum of ``T_w`` over the Young subgroup of ``comp``;
    ``minus``: the sum of ``(-q)^(-l(w)) T_w``.
    """
    parts = comp.parts if isinstance(comp, Composition) else tuple(comp)
    if sum(parts) != ctx.r:
        raise ContractError(f"composition {parts} is not of size r={ctx.r}")
    if sign not in ("plus", "minus"):
        raise ContractError(f"sign must be 'plus' or 'minus', got {sign!r}")
    zero_c = (0,) * ctx.r
    base = -ctx._qinv
    terms = {}
    for w in young_subgroup(young_blocks(parts), ctx.r):
        terms[(zero_c, w.images)] = ctx.one_scalar if sign == "plus" else base ** w.length
    return AlgebraElement(ctx, terms)


def pi_factor(ctx: AlgebraContext, a: int, x) -> AlgebraElement:
    """``(L_1 - x)(L_2 - x) ... (L_a - x)``; 1 when ``a = 0``."""
    if not 0 <= a <= ctx.r:
        raise ContractError(f"pi_{a} undefined for r={ctx.r}")
    out = ctx.one()
    for j in range(1, a + 1):
        out = out * (ctx.jucys_murphy(j) - x)
    return out


def pi_element(ctx: AlgebraContext, a: IntervalVector, tilde: bool = False) -> AlgebraElement:
    """
    ``pi_a = pi_{a_1}(u_2) ... pi_{a_{m-1}}(u_m)``, or with ``tilde`` the
    product ``pi_{a_1}(u_{m-1}) ... pi_{a_{m-1}}(u_1)``.
    """
    m = ctx.m
    if a.m != m or a.r != ctx.r:
        raise ContractError(f"interval vector {a} does not match (m, r) = ({m}, {ctx.r})")
    out = ctx.one()
    for i in range(1, m):
        x = ctx.u[m - i - 1] if tilde else ctx.u[i]
        out = out * pi_factor(ctx, a[i], x)
    return out


def x_multi(ctx: AlgebraContext, L: Multipartition) -> AlgebraElement:
    comp, a = concatenate(L)
    return pi_element(ctx, a) * xy_element(ctx, comp, "plus")


def y_multi(ctx: AlgebraContext, L: Multipartition) -> AlgebraElement:
    comp, a = concatenate(L)
    return pi_element(ctx, a, tilde=True) * xy_element(ctx, comp, "minus")


def _check_shape(ctx: AlgebraContext, L: Multipartition):
    if L.m != ctx.m or L.r != ctx.r:
        raise ContractError(f"multipartition {L} does not match (m, r) = ({ctx.m}, {ctx.r})")


def z_element(ctx: AlgebraContext, L: Multipartition) -> AlgebraElement:
    """``x_L T_{w_L} y_{L'}``."""
    _check_shape(ctx, L)
    return x_multi(ctx, L) * ctx.T(w_of_multipartition(L)) * y_multi(ctx, dual_multipartition(L))


def twisted_z_element(ctx: AlgebraContext, L: Multipartition) -> AlgebraElement:
    """``y_L T_{w_L} x_{L'}``."""
    _check_shape(ctx, L)
    return y_multi(ctx, L) * ctx.T(w_of_multipartition(L)) * x_multi(ctx, dual_multipartition(L))


def simple_generator(ctx: AlgebraContext, L: Multipartition) -> AlgebraElement:
    """``y_{L'} T_{w_{L'}} z_L``."""
    _check_shape(ctx, L)
    Ld = dual_multipartition(L)
    return y_multi(ctx, Ld) * ctx.T(w_of_multipartition(Ld)) * z_element(ctx, L)


def v_element(ctx: AlgebraContext, a: IntervalVector) -> AlgebraElement:
    """``pi_a T_{w_a} pitilde_{a'}``."""
    return pi_element(ctx, a) * ctx.T(w_of_interval(a)) * pi_element(ctx, a.dual(), tilde=True)


def phi_map(src: AlgebraContext, dst: AlgebraContext, e: AlgebraElement) -> AlgebraElement:
    """
    The isomorphism onto the algebra with parameters ``(q^-1, u reversed)``:
    ``T_0 -> T_0`` and ``T_j -> -q^-1 T_j`` (``q`` read in ``dst``), so each
    ``L_k`` is fixed and ``T_w`` picks up ``(-q_src)^l(w)``.
    """
    src._check(e)
    P, Q = src.params, dst.params
    if (P.field != Q.field or P.r != Q.r or Q.q != 1 / P.q
            or tuple(Q.u) != tuple(reversed(P.u))):
        raise ContractError("destination parameters must be (q^-1, reversed u) of the source")
    base = -P.q
    return AlgebraElement(dst, {(c, w): v * base ** src.length(w) for (c, w), v in e.terms.items()})


# -- relation self-test ----------------------------------------------------------


def _apply_word(ctx: AlgebraContext, terms: dict, word: Iterable[int]) -> dict:
    for g in word:
        terms = ctx._right_terms(terms, g)
    return terms


def _apply_poly(ctx: AlgebraContext, terms: dict, g: int, roots: Sequence) -> dict:
    """``terms * prod (T_g - x)`` over ``x`` in ``roots``."""
    for x in roots:
        moved = ctx._right_terms(terms, g)
        for k, v in terms.items():
            _acc(moved, k, -x * v)
        terms = moved
    return terms


def relation_families(r: int) -> dict[str, list]:
    """Each relation as a pair of generator words, or a polynomial in one generator."""
    fam: dict[str, list] = {"cyclotomic": [("poly", 0)]}
    if r >= 2:
        fam["braid_T0T1"] = [("words", (0, 1, 0, 1), (1, 0, 1, 0))]
    fam["quadratic"] = [("quad", i) for i in range(1, r)]
    fam["braid"] = [("words", (i, i + 1, i), (i + 1, i, i + 1)) for i in range(1, r - 1)]
    fam["commute"] = [("words", (i, j), (j, i)) for i in range(0, r) for j in range(i + 2, r)]
    return fam


def relations_selftest(ctx: AlgebraContext) -> dict:
    """
    Check every defining relation as an identity of right-regular action
    matrices, one basis vector at a time.
    """
    results = {}
    failures = []
    for name, rels in relation_families(ctx.r).items():
        ok = True
        for rel in rels:
            for key in ctx.basis:
                start = {key: ctx.one_scalar}
                if rel[0] == "poly":
                    bad = bool(_apply_poly(ctx, start, 0, ctx.u))
                elif rel[0] == "quad":
                    bad = bool(_apply_poly(ctx, start, rel[1], (ctx.q, ctx.field(-1))))
                else:
                    bad = _apply_word(ctx, start, rel[1]) != _apply_word(ctx, start, rel[2])
                if bad:
                    ok = False
                    failures.append({"relation": name, "detail": str(rel[1:]), "basis": [list(key[0]), list(key[1])]})
                    break
        results[name] = ok
    dims_ok = len(ctx.basis) == ctx.m ** ctx.r * factorial(ctx.r)
    results["basis_size"] = dims_ok
    return {
        "m": ctx.m,
        "r": ctx.r,
        "params": ctx.params.to_json(),
        "basis_size": len(ctx.basis),
        "relations": results,
        "failures": failures[:5],
        "pass": all(results.values()),
    }


@lru_cache(maxsize=32)
def context_for(params: ParameterSet, max_dim: int = DEFAULT_MAX_DIM) -> AlgebraContext:
    """A shared context per parameter point, so caches are reused across calls."""
    return AlgebraContext(params, max_dim)
