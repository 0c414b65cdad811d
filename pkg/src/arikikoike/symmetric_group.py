"""
Permutations acting on the right of {1, ..., r}.

A permutation is stored in one-line notation, ``images[i-1] = (i)w``.  Products
compose left to right: ``(i)(v * w) = ((i)v)w``, so a tableau ``t`` acted on by
``w`` has each entry ``e`` replaced by ``(e)w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _iter_perms, product
from math import factorial
from typing import Iterable, Sequence

from .combinatorics import (
    IntervalVector,
    Multipartition,
    column_tableau,
    concatenate,
    dual_multipartition,
    interval_vector,
    row_tableau,
    standard_tableaux,
)
from .errors import ContractError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ContractError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def simple(cls, i: int, r: int) -> "Permutation":
        """The adjacent transposition ``s_i = (i, i+1)``."""
        if not 1 <= i < r:
            raise ContractError(f"s_{i} not defined in S_{r}")
        images = list(range(1, r + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word: Iterable[int], r: int) -> "Permutation":
        w = cls.identity(r)
        for i in word:
            w = w * cls.simple(i, r)
        return w

    @property
    def r(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.r != other.r:
            raise ContractError("cannot compose permutations of different degree")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.r
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        return inversions(self.images)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self.images)

    def extend(self, r: int) -> "Permutation":
        """The same permutation viewed in S_r for r >= self.r, fixing the new points."""
        return Permutation(self.images + tuple(range(self.r + 1, r + 1)))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def inversions(images: Sequence[int]) -> int:
    n = len(images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])


def reduced_word(images: Sequence[int]) -> tuple[int, ...]:
    """
    Canonical reduced word by repeatedly stripping the smallest right descent.

    ``i`` is a right descent of ``w`` when the value ``i + 1`` sits left of the
    value ``i`` in one-line notation; stripping multiplies by ``s_i`` on the right.
    """
    w = list(images)
    pos = {v: p for p, v in enumerate(w)}
    rev = []
    while True:
        for i in range(1, len(w)):
            if pos[i + 1] < pos[i]:
                break
        else:
            break
        a, b = pos[i], pos[i + 1]
        w[a], w[b] = i + 1, i
        pos[i], pos[i + 1] = b, a
        rev.append(i)
    return tuple(reversed(rev))


def cycle_element(i: int, j: int, r: int) -> Permutation:
    """
    ``s_{i,j}`` sends ``i -> j`` and ``k -> k - 1`` for ``i < k <= j``.

    For ``i > j`` this returns the inverse of ``s_{j,i}``, which is how
    products such as ``s_{r, j}`` are read.
    """
    if not (1 <= i <= r and 1 <= j <= r):
        raise ContractError(f"s_{{{i},{j}}} out of range for r={r}")
    if i > j:
        return cycle_element(j, i, r).inverse()
    images = list(range(1, r + 1))
    images[i - 1] = j
    for k in range(i + 1, j + 1):
        images[k - 1] = k - 1
    return Permutation(tuple(images))


def w_of_interval(a: IntervalVector) -> Permutation:
    r = a.r
    images = [0] * r
    b = a.bounds
    for i in range(1, len(b)):
        for l in range(1, b[i] - b[i - 1] + 1):
            images[b[i - 1] + l - 1] = r - b[i] + l
    return Permutation(tuple(images))


def tableau_permutation(source: dict, target: dict) -> Permutation:
    """The ``w`` with ``source * w = target`` (both fillings of one shape)."""
    images = [0] * len(source)
    for node, v in source.items():
        images[v - 1] = target[node]
    return Permutation(tuple(images))


def w_of_multipartition(L: Multipartition) -> Permutation:
    if L.r == 0:
        return Permutation(())
    return tableau_permutation(row_tableau(L), column_tableau(L))


def component_w_factors(L: Multipartition) -> list[Permutation]:
    """
    The commuting factors ``w_(1), ..., w_(m)`` with
    ``w_L = w_(1) ... w_(m) w_[L]``: each moves only the entries of one
    component of the row tableau.
    """
    r = L.r
    t_row = row_tableau(L)
    w_a_inv = w_of_interval(interval_vector(L)).inverse()
    t_mid = {node: w_a_inv(v) for node, v in column_tableau(L).items()}
    out = []
    for k in range(1, L.m + 1):
        images = list(range(1, r + 1))
        for node, v in t_row.items():
            if node.comp == k:
                images[v - 1] = t_mid[node]
        out.append(Permutation(tuple(images)))
    return out


def young_blocks(parts: Sequence[int]) -> list[tuple[int, int]]:
    out, start = [], 0
    for p in parts:
        if p:
            out.append((start + 1, start + p))
        start += p
    return out


def young_subgroup(blocks: Sequence[tuple[int, int]], r: int) -> list[Permutation]:
    """All permutations that stabilise each interval in ``blocks`` and fix the rest."""
    per_block = [list(_iter_perms(range(lo, hi + 1))) for lo, hi in blocks]
    out = []
    for choice in product(*per_block):
        images = list(range(1, r + 1))
        for (lo, hi), imgs in zip(blocks, choice):
            images[lo - 1:hi] = imgs
        out.append(Permutation(tuple(images)))
    out.sort(key=lambda w: w.images)
    return out


def _check_blocks(blocks: Sequence[tuple[int, int]], r: int):
    prev = 0
    for lo, hi in blocks:
        if lo <= prev or hi < lo or hi > r:
            raise ContractError(f"blocks {list(blocks)} not disjoint ascending intervals in 1..{r}")
        prev = hi


def distinguished_coset_reps(blocks: Sequence[tuple[int, int]], r: int) -> list[Permutation]:
    """
    Minimal length representatives ``d`` of the right cosets ``S_blocks d``:
    exactly the permutations whose images increase along every block.
    """
    _check_blocks(blocks, r)
    out = []
    for imgs in _iter_perms(range(1, r + 1)):
        if all(imgs[k - 1] < imgs[k] for lo, hi in blocks for k in range(lo, hi)):
            out.append(Permutation(imgs))
    return out


def is_distinguished(w: Permutation, blocks: Sequence[tuple[int, int]]) -> bool:
    return all(w(k) < w(k + 1) for lo, hi in blocks for k in range(lo, hi))


def standard_tableau_perms(L: Multipartition, flavor: str = "column") -> list[Permutation]:
    """
    ``column``: every ``d`` with ``t_L d`` standard.
    ``dual_row``: every ``d`` with ``t^{L'} d`` standard, ``L'`` the dual multipartition.
    """
    if flavor == "column":
        shape, base = L, column_tableau(L)
    elif flavor == "dual_row":
        shape = dual_multipartition(L)
        base = row_tableau(shape)
    else:
        raise ContractError(f"unknown flavor {flavor!r}")
    if L.r == 0:
        return [Permutation(())]
    out = [tableau_permutation(base, t) for t in standard_tableaux(shape)]
    out.sort(key=lambda w: w.images)
    return out


def bar_blocks(L: Multipartition) -> list[tuple[int, int]]:
    """Young subgroup blocks of the concatenated composition of ``L``."""
    comp, _ = concatenate(L)
    return young_blocks(comp.parts)


def group_order(blocks: Sequence[tuple[int, int]]) -> int:
    out = 1
    for lo, hi in blocks:
        out *= factorial(hi - lo + 1)
    return out
