"""
Partitions, compositions and multipartitions.

Multipartitions are written as ``"3,1|2,2|1"``: components separated by ``|``,
parts by ``,``, and an empty component as ``0``.  Nodes are ``(row, col)_comp``
with all three coordinates 1-based.  Removable and addable nodes are listed with
the component ascending, then the row ascending; "lower" in the residue sense is
the reverse of that order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from itertools import product
from typing import Iterator, Sequence

from .errors import ContractError


@total_ordering
@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ContractError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] <= 0:
            raise ContractError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """Row length with 1-based rows; rows past the end have length 0."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def dominated_by(self, other: "Partition") -> bool:
        """Ordinary dominance ``self <= other`` for partitions of equal size."""
        if self.size != other.size:
            raise ContractError("dominance needs partitions of the same size")
        n = max(len(self), len(other))
        a = b = 0
        for i in range(1, n + 1):
            a += self[i]
            b += other[i]
            if a > b:
                return False
        return True

    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ContractError(f"negative part in composition {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def blocks(self) -> list[tuple[int, int]]:
        """The 1-based intervals ``(lo, hi)`` of the Young subgroup, empty parts skipped."""
        out, start = [], 0
        for p in self.parts:
            if p:
                out.append((start + 1, start + p))
            start += p
        return out


@dataclass(frozen=True)
class IntervalVector:
    bounds: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.bounds)
        if len(b) < 2 or b[0] != 0 or any(y < x for x, y in zip(b, b[1:])):
            raise ContractError(f"invalid interval vector {b}")
        object.__setattr__(self, "bounds", b)

    @property
    def m(self) -> int:
        return len(self.bounds) - 1

    @property
    def r(self) -> int:
        return self.bounds[-1]

    def __getitem__(self, i: int) -> int:
        return self.bounds[i]

    def dual(self) -> "IntervalVector":
        """``[r - a_m, r - a_{m-1}, ..., r - a_0]``."""
        r = self.r
        return IntervalVector(tuple(r - a for a in reversed(self.bounds)))

    def precedes(self, other: "IntervalVector") -> bool:
        if self.m != other.m or self.r != other.r:
            raise ContractError("interval vectors of different shape")
        return all(a <= b for a, b in zip(self.bounds, other.bounds))

    def composition(self) -> Composition:
        return Composition(tuple(y - x for x, y in zip(self.bounds, self.bounds[1:])))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.bounds)) + "]"


@total_ordering
@dataclass(frozen=True)
class Node:
    row: int
    col: int
    comp: int

    def key(self) -> tuple[int, int, int]:
        return (self.comp, self.row, self.col)

    def __lt__(self, other: "Node") -> bool:
        return self.key() < other.key()

    def is_lower_than(self, other: "Node") -> bool:
        return (self.comp, self.row) > (other.comp, other.row)

    @property
    def content(self) -> int:
        return self.col - self.row

    def __str__(self) -> str:
        return f"({self.row},{self.col})_{self.comp}"

    def to_json(self) -> list[int]:
        return [self.row, self.col, self.comp]


@total_ordering
@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components)
        if not comps:
            raise ContractError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: Sequence[int]) -> "Multipartition":
        return cls(tuple(Partition(tuple(c)) for c in components))

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        comps = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if chunk in ("", "0", "-"):
                comps.append(Partition(()))
                continue
            try:
                parts = tuple(int(x) for x in chunk.split(","))
            except ValueError:
                raise ContractError(f"malformed multipartition {text!r}") from None
            comps.append(Partition(parts))
        return cls(tuple(comps))

    @classmethod
    def from_json(cls, obj: dict) -> "Multipartition":
        return cls.of(*obj["components"])

    def to_json(self) -> dict:
        return {"components": [list(c.parts) for c in self.components]}

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def r(self) -> int:
        return sum(c.size for c in self.components)

    def __getitem__(self, k: int) -> Partition:
        """Component ``k`` with 1-based indexing."""
        return self.components[k - 1]

    def __lt__(self, other: "Multipartition") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (interval_vector(self).bounds, tuple(c.parts for c in self.components))

    def __str__(self) -> str:
        return "|".join(str(c) for c in self.components)

    def nodes(self) -> list[Node]:
        return [Node(i, j, k)
                for k, lam in enumerate(self.components, 1)
                for i, length in enumerate(lam.parts, 1)
                for j in range(1, length + 1)]


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in p.parts if x >= i) for i in range(1, p.parts[0] + 1)))


def dual_multipartition(L: Multipartition) -> Multipartition:
    return Multipartition(tuple(conjugate(c) for c in reversed(L.components)))


def interval_vector(L: Multipartition) -> IntervalVector:
    bounds = [0]
    for c in L.components:
        bounds.append(bounds[-1] + c.size)
    return IntervalVector(tuple(bounds))


def concatenate(L: Multipartition) -> tuple[Composition, IntervalVector]:
    parts = tuple(p for c in L.components for p in c.parts)
    return Composition(parts), interval_vector(L)


def dominance_le(A: Multipartition, B: Multipartition) -> bool:
    """
    Multipartition dominance: for every component index i and prefix length l,
    (size of the first i components of A) + (first l parts of component i+1 of A)
    is at most the same quantity for B.
    """
    if A.m != B.m or A.r != B.r:
        raise ContractError(f"dominance needs equal (m, r); got ({A.m},{A.r}) and ({B.m},{B.r})")
    a = interval_vector(A).bounds
    b = interval_vector(B).bounds
    for i in range(A.m):
        lam, mu = A.components[i], B.components[i]
        sa, sb = a[i], b[i]
        if sa > sb:
            return False
        for l in range(1, max(len(lam), len(mu)) + 1):
            sa += lam[l]
            sb += mu[l]
            if sa > sb:
                return False
    return True


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` parts."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def enumerate_multipartitions(m: int, r: int) -> list[Multipartition]:
    """
    Every m-partition of r once, ordered by decreasing (interval vector,
    components) in lexicographic order; e.g. (2, 2) gives
    2|0, 1,1|0, 1|1, 0|2, 0|1,1.
    """
    if m < 1 or r < 0:
        raise ContractError(f"need m >= 1 and r >= 0, got m={m}, r={r}")
    out = []
    for sizes in compositions(r, m):
        for comps in product(*(list(partitions(s)) for s in sizes)):
            out.append(Multipartition(tuple(comps)))
    out.sort(key=Multipartition.sort_key, reverse=True)
    return out


def removable_nodes(L: Multipartition) -> list[Node]:
    out = []
    for k, lam in enumerate(L.components, 1):
        for i in range(1, len(lam) + 1):
            if lam[i] > lam[i + 1]:
                out.append(Node(i, lam[i], k))
    return out


def addable_nodes(L: Multipartition) -> list[Node]:
    out = []
    for k, lam in enumerate(L.components, 1):
        for i in range(1, len(lam) + 2):
            if i == 1 or lam[i - 1] > lam[i]:
                out.append(Node(i, lam[i] + 1, k))
    return out


def remove_node(L: Multipartition, n: Node) -> Multipartition:
    if n not in removable_nodes(L):
        raise ContractError(f"node {n} is not removable from {L}")
    comps = list(L.components)
    parts = list(comps[n.comp - 1].parts)
    parts[n.row - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    comps[n.comp - 1] = Partition(tuple(parts))
    return Multipartition(tuple(comps))


def add_node(L: Multipartition, n: Node) -> Multipartition:
    if n not in addable_nodes(L):
        raise ContractError(f"node {n} is not addable to {L}")
    comps = list(L.components)
    parts = list(comps[n.comp - 1].parts)
    if n.row > len(parts):
        parts.append(1)
    else:
        parts[n.row - 1] += 1
    comps[n.comp - 1] = Partition(tuple(parts))
    return Multipartition(tuple(comps))


def row_tableau(L: Multipartition) -> dict[Node, int]:
    """Fill 1..r along rows, components left to right."""
    out, n = {}, 0
    for node in L.nodes():
        n += 1
        out[node] = n
    return out


def column_tableau(L: Multipartition) -> dict[Node, int]:
    """Fill 1..r down columns, starting from the last component."""
    out, n = {}, 0
    for k in range(L.m, 0, -1):
        lam = L[k]
        for j in range(1, (lam.parts[0] if lam.parts else 0) + 1):
            for i in range(1, len(lam) + 1):
                if lam[i] >= j:
                    n += 1
                    out[Node(i, j, k)] = n
    return out


def j_numbers(L: Multipartition) -> list[tuple[Node, int]]:
    t = column_tableau(L)
    return [(n, t[n]) for n in removable_nodes(L)]


def is_l_regular(L: Multipartition, l: float) -> bool:
    if l == math.inf:
        return True
    if l < 2:
        raise ContractError(f"l must be >= 2 or infinite, got {l}")
    return all(count < l for lam in L.components for count in lam.multiplicities().values())


def hook_length_count(p: Partition) -> int:
    """Number of standard tableaux of shape ``p`` by the hook length formula."""
    n = p.size
    conj = conjugate(p)
    hooks = 1
    for i, length in enumerate(p.parts, 1):
        for j in range(1, length + 1):
            hooks *= (length - j) + (conj[j] - i) + 1
    return math.factorial(n) // hooks


def standard_tableaux(L: Multipartition) -> Iterator[dict[Node, int]]:
    """
    Backtracking over box fillings: place 1, 2, ..., r in turn at a cell that
    keeps every component's filled region a partition.
    """
    shape = [[0] * (len(lam) + 1) for lam in L.components]
    target = [list(lam.parts) + [0] for lam in L.components]
    filling: dict[Node, int] = {}
    r = L.r

    def rec(n: int):
        if n > r:
            yield dict(filling)
            return
        for k, rows in enumerate(shape):
            tgt = target[k]
            for i in range(len(tgt) - 1):
                if rows[i] < tgt[i] and (i == 0 or rows[i - 1] > rows[i]):
                    rows[i] += 1
                    node = Node(i + 1, rows[i], k + 1)
                    filling[node] = n
                    yield from rec(n + 1)
                    del filling[node]
                    rows[i] -= 1

    yield from rec(1)


def is_standard(L: Multipartition, t: dict[Node, int]) -> bool:
    for node, v in t.items():
        right = Node(node.row, node.col + 1, node.comp)
        below = Node(node.row + 1, node.col, node.comp)
        if right in t and t[right] <= v:
            return False
        if below in t and t[below] <= v:
            return False
    return True
