"""
Exact coefficient fields and Ariki-Koike parameter points.

Rationals use :class:`fractions.Fraction`; the prime field F_p uses
:class:`Fp`.  Both support ``+ - * /`` and comparison with ``0``, so the
algebra code is written once against plain operators.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence, Union

from .combinatorics import Node
from .errors import ContractError, RegimeError


class Fp:
    """An element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int | None:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ContractError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Fp(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"

    def __str__(self):
        return str(self.v)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """``kind`` is ``"rationals"`` or ``"prime"``; ``p`` is set for the latter."""

    kind: str = "rationals"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p is not None:
                raise ContractError("the rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise ContractError(f"prime field needs a prime modulus, got {self.p}")
        else:
            raise ContractError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0

    def __call__(self, value: Any):
        """Convert an int, Fraction, field element or decimal string into this field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind == "rationals":
            if isinstance(value, Fp):
                raise ContractError("cannot read an F_p element as a rational")
            return Fraction(value)
        if isinstance(value, Fp):
            if value.p != self.p:
                raise ContractError(f"element of F_{value.p} given for F_{self.p}")
            return value
        value = Fraction(value)
        return Fp(value.numerator, self.p) / Fp(value.denominator, self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def format(self, x) -> str:
        return str(x)

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p} if self.kind == "prime" else {"kind": "rationals"}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        kind = obj.get("kind")
        if kind == "prime":
            return cls.prime(int(obj["p"]))
        if kind == "rationals":
            return cls.rationals()
        raise ContractError(f"unknown field kind {kind!r}")

    def __str__(self):
        return f"F_{self.p}" if self.kind == "prime" else "Q"


Scalar = Union[Fraction, Fp]


@dataclass(frozen=True)
class ParameterSet:
    field: FieldSpec
    q: Any
    u: tuple
    r: int
    label: str = dc_field(default="", compare=False)

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "q", F(self.q))
        object.__setattr__(self, "u", tuple(F(x) for x in self.u))
        if self.q == 0:
            raise ContractError("q must be nonzero")
        if not self.u:
            raise ContractError("need at least one parameter u_i (m >= 1)")
        if self.r < 0:
            raise ContractError("r must be non-negative")

    @property
    def m(self) -> int:
        return len(self.u)

    def with_r(self, r: int) -> "ParameterSet":
        return ParameterSet(self.field, self.q, self.u, r, self.label)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "q": str(self.q),
            "u": [str(x) for x in self.u],
            "m": self.m,
            "r": self.r,
        }

    @classmethod
    def from_json(cls, obj: dict, r: int | None = None, label: str = "") -> "ParameterSet":
        try:
            F = FieldSpec.from_json(obj["field"])
            u = tuple(obj["u"])
            if "m" in obj and int(obj["m"]) != len(u):
                raise ContractError(f"parameter file says m={obj['m']} but lists {len(u)} values of u")
            rr = r if r is not None else int(obj.get("r", 0))
            return cls(F, obj["q"], u, rr, label)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ContractError):
                raise
            raise ContractError(f"invalid parameter data: {exc}") from None

    @classmethod
    def load(cls, path: str | Path, r: int | None = None) -> "ParameterSet":
        with open(path) as fh:
            obj = json.load(fh)
        return cls.from_json(obj, r, label=Path(path).stem)

    def __str__(self):
        us = ",".join(str(x) for x in self.u)
        return f"{self.field} q={self.q} u=({us}) r={self.r}"


def generic_parameters(m: int, r: int) -> ParameterSet:
    """Rationals, ``q = 2``, ``u_i = 3**((i-1)(2r+1))``."""
    if m < 1 or r < 0:
        raise ContractError(f"need m >= 1, r >= 0; got m={m}, r={r}")
    return ParameterSet(FieldSpec.rationals(), 2, tuple(3 ** ((i - 1) * (2 * r + 1)) for i in range(1, m + 1)),
                        r, "generic")


F5_U = (1, 2, 3)


def f5_parameters(m: int, r: int) -> ParameterSet:
    """
    F_5 with ``q = 4`` and ``u = (1, 2, 3)[:m]``.

    Here ``q`` has order 2, so ``l = 2``.  For ``m <= 2`` the separation
    product is nonzero for every ``r`` because the powers of ``q`` are only
    ``1`` and ``4``; for ``m = 3`` it vanishes (``u_3 = q u_2``), which still
    suits checks that hold over any coefficient ring.
    """
    if not 1 <= m <= len(F5_U):
        raise ContractError(f"the F_5 preset covers m <= {len(F5_U)}")
    return ParameterSet(FieldSpec.prime(5), 4, F5_U[:m], r, "f5")


def quantum_characteristic(P: ParameterSet) -> float:
    """Least ``a >= 1`` with ``1 + q + ... + q^(a-1) = 0``; ``math.inf`` if none."""
    F = P.field
    if F.kind == "rationals":
        return 2 if P.q == -1 else math.inf
    total, power = F.zero, F.one
    for a in range(1, F.p + 1):
        total = total + power
        if total == 0:
            return a
        power = power * P.q
    return math.inf


def separation_product(P: ParameterSet):
    """Product over i < j and 1-r <= k <= r-1 of ``u_i q^k - u_j``."""
    F, q = P.field, P.q
    out = F.one
    for i in range(P.m):
        for j in range(i + 1, P.m):
            for k in range(1 - P.r, P.r):
                out = out * (P.u[i] * q ** k - P.u[j])
    return out


def is_semisimple_regime(P: ParameterSet) -> bool:
    return separation_product(P) != 0 and quantum_characteristic(P) > P.r


@dataclass(frozen=True, order=True)
class Residue:
    component: int
    offset: int

    def __str__(self):
        return f"({self.component},{self.offset})"


def residue(n: Node, P: ParameterSet, check: bool = True) -> Residue:
    """
    Canonical residue ``(k, (j - i) mod l)`` of the node ``(i, j)_k``.

    Two nodes have equal field residues ``q^(j-i) u_k`` exactly when these
    pairs agree, provided the separation product is nonzero.
    """
    if check and separation_product(P) == 0:
        raise RegimeError("residues cannot be canonicalised: separation product vanishes")
    if check and P.u[n.comp - 1] == 0:
        raise RegimeError(f"u_{n.comp} = 0, so residues in component {n.comp} do not separate")
    l = quantum_characteristic(P)
    c = n.col - n.row
    return Residue(n.comp, c if l == math.inf else c % l)


def field_residue(n: Node, P: ParameterSet):
    return P.q ** (n.col - n.row) * P.u[n.comp - 1]


def cyclotomic_coefficients(u: Sequence) -> list:
    """Coefficients ``c_0..c_{m-1}`` with ``prod(x - u_i) = x^m + sum c_j x^j``."""
    coeffs = [1]
    for ui in u:
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] = nxt[j + 1] + c
            nxt[j] = nxt[j] - ui * c
        coeffs = nxt
    return coeffs[:-1]


def modular_parameters(m: int, r: int, l: int, p_max: int = 200) -> ParameterSet:
    """
    A prime-field point with quantum characteristic ``l`` and a nonzero
    separation product, from the smallest prime ``p`` and then the smallest
    ``q`` of multiplicative order ``l``; ``u`` is chosen greedily.
    """
    if l < 2:
        raise ContractError("l must be at least 2")
    for p in range(3, p_max + 1):
        if not _is_prime(p) or (p - 1) % l:
            continue
        F = FieldSpec.prime(p)
        for qv in range(2, p):
            q = F(qv)
            if any(q ** a == 1 for a in range(1, l)) or q ** l != 1:
                continue
            u = [F(1)]
            for cand in range(2, p):
                if len(u) == m:
                    break
                trial = ParameterSet(F, q, tuple(u) + (F(cand),), r)
                if separation_product(trial) != 0:
                    u.append(F(cand))
            if len(u) == m:
                P = ParameterSet(F, q, tuple(u), r, f"F{p}")
                if quantum_characteristic(P) == l:
                    return P
    raise ContractError(f"no prime below {p_max} gives l={l} with m={m}")
