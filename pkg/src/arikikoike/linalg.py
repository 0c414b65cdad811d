"""
Exact sparse linear algebra for right submodules of the regular representation.

Vectors are dicts ``index -> nonzero scalar``.  Echelon forms are kept fully
reduced with monic pivots at the lowest index of each row, so a vector in
the span is the combination of rows given by its entries at the pivots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .algebra import AlgebraContext, AlgebraElement, _acc
from .errors import ContractError, VerificationError

Sparse = dict  # index -> scalar


@dataclass(frozen=True)
class Vector:
    coords: dict
    dim: int

    def __post_init__(self):
        clean = {}
        for i, v in self.coords.items():
            if not 0 <= i < self.dim:
                raise ContractError(f"index {i} outside ambient dimension {self.dim}")
            if v != 0:
                clean[i] = v
        object.__setattr__(self, "coords", clean)

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ContractError("ambient dimensions differ")
        out = dict(self.coords)
        for i, v in other.coords.items():
            _acc(out, i, v)
        return Vector(out, self.dim)

    def scale(self, s) -> "Vector":
        return Vector({i: s * v for i, v in self.coords.items()}, self.dim)

    def is_zero(self) -> bool:
        return not self.coords

    def to_json(self) -> dict:
        return {"dim": self.dim, "coords": {str(i): str(v) for i, v in sorted(self.coords.items())}}


def vectorize(ctx: AlgebraContext, e: AlgebraElement) -> Vector:
    ctx._check(e)
    return Vector({ctx.index[k]: v for k, v in e.terms.items()}, ctx.dim)


def devectorize(ctx: AlgebraContext, v: Vector | Sparse) -> AlgebraElement:
    coords = v.coords if isinstance(v, Vector) else v
    return AlgebraElement(ctx, {ctx.basis[i]: c for i, c in coords.items()})


class Echelon:
    """Incremental reduced row echelon form; pivots are the lowest index of each row."""

    def __init__(self, rows: Iterable[Sparse] = ()):
        self.rows: dict[int, Sparse] = {}
        for r in rows:
            self.insert(r)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sparse) -> Sparse:
        out = dict(v)
        # Rows are zero at every other pivot, so one pass suffices.
        for p in [p for p in out if p in self.rows]:
            c = out.get(p)
            if c is None:
                continue
            for i, x in self.rows[p].items():
                _acc(out, i, -c * x)
        return out

    def insert(self, v: Sparse) -> Sparse | None:
        """Add ``v`` to the span; return the new reduced row, or None if already spanned."""
        rem = self.reduce(v)
        if not rem:
            return None
        p = min(rem)
        inv = 1 / rem[p]
        row = {i: x * inv for i, x in rem.items()}
        for q, other in self.rows.items():
            c = other.get(p)
            if c is not None:
                for i, x in row.items():
                    _acc(other, i, -c * x)
        self.rows[p] = row
        return row

    def contains(self, v: Sparse) -> bool:
        return not self.reduce(v)

    def sorted_rows(self) -> tuple[tuple[int, ...], list[Sparse]]:
        piv = tuple(sorted(self.rows))
        return piv, [self.rows[p] for p in piv]


def apply_matrix(v: Sparse, matrix: Sequence[Sparse]) -> Sparse:
    """Row vector times matrix, both sparse; ``matrix[i]`` is the image of basis vector ``i``."""
    out: dict = {}
    for i, c in v.items():
        for j, x in matrix[i].items():
            _acc(out, j, c * x)
    return out


def closure(vectors: Iterable[Sparse], act: Callable[[Sparse, int], Sparse],
            generators: Sequence[int]) -> Echelon:
    """Smallest subspace containing ``vectors`` and stable under ``act(., g)`` for ``g`` in ``generators``."""
    ech = Echelon()
    queue = []
    for v in vectors:
        row = ech.insert(v)
        if row is not None:
            queue.append(dict(row))
    while queue:
        v = queue.pop()
        for g in generators:
            row = ech.insert(act(v, g))
            if row is not None:
                queue.append(dict(row))
    return ech


@dataclass(frozen=True)
class SubmoduleBasis:
    """
    A subspace of the regular representation in reduced echelon form.

    ``action[g][i]`` holds the coordinates of ``rows[i] * T_g`` in ``rows``;
    it is present only for the generators the subspace was closed under.
    """

    ambient: int
    pivots: tuple[int, ...]
    rows: tuple[Sparse, ...]
    action: dict = field(default_factory=dict)
    field_spec: Any = None

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(sorted(self.action))

    def echelon(self) -> Echelon:
        ech = Echelon()
        ech.rows = {p: dict(r) for p, r in zip(self.pivots, self.rows)}
        return ech

    def contains(self, v: Vector | Sparse) -> bool:
        coords = v.coords if isinstance(v, Vector) else v
        return self.echelon().contains(coords)

    def coordinates(self, v: Sparse) -> Sparse:
        """Coordinates of ``v`` in ``rows``; raises if ``v`` is outside the span."""
        if not self.echelon().contains(v):
            raise VerificationError("vector lies outside the subspace")
        pos = {p: k for k, p in enumerate(self.pivots)}
        return {pos[p]: v[p] for p in self.pivots if p in v}

    def contains_space(self, other: "SubmoduleBasis") -> bool:
        ech = self.echelon()
        return all(ech.contains(r) for r in other.rows)

    def same_space(self, other: "SubmoduleBasis") -> bool:
        return self.ambient == other.ambient and self.pivots == other.pivots and self.rows == other.rows

    def restrict(self, generators: Iterable[int]) -> "SubmoduleBasis":
        gens = tuple(generators)
        missing = [g for g in gens if g not in self.action]
        if missing:
            raise ContractError(f"no action recorded for generators {missing}")
        return SubmoduleBasis(self.ambient, self.pivots, self.rows,
                              {g: self.action[g] for g in gens}, self.field_spec)

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "rank": self.rank,
            "rows": [{str(i): str(x) for i, x in sorted(r.items())} for r in self.rows],
        }


def _ctx_act(ctx: AlgebraContext) -> Callable[[Sparse, int], Sparse]:
    def act(v: Sparse, g: int) -> Sparse:
        out: dict = {}
        for i, c in v.items():
            for j, x in ctx.action_row(i, g).items():
                _acc(out, j, c * x)
        return out
    return act


def submodule_closure(ctx: AlgebraContext, gens: Iterable[Vector | Sparse],
                      generator_set: Iterable[int] | None = None) -> SubmoduleBasis:
    """
    Close ``gens`` under right multiplication by ``T_g`` for ``g`` in
    ``generator_set`` (all generators by default) and record the action.
    """
    gset = tuple(range(ctx.r)) if generator_set is None else tuple(sorted(set(generator_set)))
    for g in gset:
        if not 0 <= g < ctx.r:
            raise ContractError(f"generator T_{g} not in H^{ctx.r}_{ctx.m}")
    vecs = []
    for v in gens:
        if isinstance(v, Vector):
            if v.dim != ctx.dim:
                raise ContractError("vector ambient dimension does not match the algebra")
            vecs.append(v.coords)
        else:
            vecs.append(v)
    act = _ctx_act(ctx)
    ech = closure(vecs, act, gset)
    pivots, rows = ech.sorted_rows()
    pos = {p: k for k, p in enumerate(pivots)}
    action = {}
    for g in gset:
        mat = []
        for row in rows:
            img = act(row, g)
            # closure guarantees img is in the span; its coordinates are the pivot entries
            mat.append({pos[p]: img[p] for p in pivots if p in img})
        action[g] = mat
    return SubmoduleBasis(ctx.dim, pivots, tuple(rows), action, ctx.field)


def span(ambient: int, vectors: Iterable[Sparse], field_spec=None) -> SubmoduleBasis:
    """Plain linear span, with no action recorded."""
    ech = Echelon(vectors)
    pivots, rows = ech.sorted_rows()
    return SubmoduleBasis(ambient, pivots, tuple(rows), {}, field_spec)


def section_dimensions(chain: Sequence[SubmoduleBasis]) -> list[int]:
    """Successive rank differences of an ascending chain, starting from 0."""
    for k in range(1, len(chain)):
        if not chain[k].contains_space(chain[k - 1]):
            raise VerificationError(f"chain is not nested at index {k}", {"index": k})
    dims, prev = [], 0
    for M in chain:
        dims.append(M.rank - prev)
        prev = M.rank
    return dims


def hom_dimension(M: SubmoduleBasis, N: SubmoduleBasis, generator_set: Iterable[int]) -> int:
    """
    Dimension of the space of linear ``F`` with ``A_g F = F B_g`` for every
    listed generator, where ``A_g`` and ``B_g`` are the recorded actions.
    """
    gset = tuple(generator_set)
    for name, X in (("source", M), ("target", N)):
        missing = [g for g in gset if g not in X.action]
        if missing:
            raise ContractError(f"{name} module has no action recorded for generators {missing}")
    dm, dn = M.rank, N.rank
    ech = Echelon()
    for g in gset:
        A, B = M.action[g], N.action[g]
        # unknown F[k][j] sits at column k * dn + j
        for i in range(dm):
            for j in range(dn):
                eq: dict = {}
                for k, a in A[i].items():
                    _acc(eq, k * dn + j, a)
                for k in range(dn):
                    b = B[k].get(j)
                    if b is not None:
                        _acc(eq, i * dn + k, -b)
                if eq:
                    ech.insert(eq)
        if ech.rank == dm * dn:
            break
    return dm * dn - ech.rank


def module_closure(M: SubmoduleBasis, seeds: Iterable[Sparse]) -> Echelon:
    """Closure of coordinate vectors inside ``M`` under its recorded action."""
    gens = M.generators
    return closure(seeds, lambda v, g: apply_matrix(v, M.action[g]), gens)
