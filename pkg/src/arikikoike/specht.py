"""
Specht, twisted Specht and simple modules as right ideals of the regular
representation, with checks of the standard basis and of the rank-one
property of ``x_L H y_L'``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .algebra import (
    AlgebraContext,
    simple_generator,
    twisted_z_element,
    x_multi,
    y_multi,
    z_element,
)
from .coefficients import quantum_characteristic, separation_product
from .combinatorics import Multipartition, dual_multipartition, enumerate_multipartitions, hook_length_count, is_l_regular
from .errors import ContractError, OracleFault, RegimeError
from .linalg import Echelon, SubmoduleBasis, hom_dimension, module_closure, submodule_closure, vectorize
from .symmetric_group import standard_tableau_perms


def _check_shape(ctx: AlgebraContext, L: Multipartition):
    if L.m != ctx.m or L.r != ctx.r:
        raise ContractError(f"multipartition {L} does not match (m, r) = ({ctx.m}, {ctx.r})")


def specht_module(ctx: AlgebraContext, L: Multipartition) -> SubmoduleBasis:
    """``z_L H`` with the action of every generator recorded."""
    _check_shape(ctx, L)
    return submodule_closure(ctx, [vectorize(ctx, z_element(ctx, L))])


def twisted_specht_module(ctx: AlgebraContext, L: Multipartition) -> SubmoduleBasis:
    """``y_L T_{w_L} x_{L'} H``."""
    _check_shape(ctx, L)
    return submodule_closure(ctx, [vectorize(ctx, twisted_z_element(ctx, L))])


# -- dimension oracle -------------------------------------------------------------


def _hook_route(L: Multipartition) -> int:
    out = math.factorial(L.r)
    for lam in L.components:
        out = out // math.factorial(lam.size) * hook_length_count(lam)
    return out


def _path_route(L: Multipartition) -> int:
    """Fill in ``r, r-1, ..., 1`` by peeling removable corners, counting complete fillings."""

    @lru_cache(maxsize=None)
    def count(shape: tuple) -> int:
        if not any(shape):
            return 1
        total = 0
        for k, rows in enumerate(shape):
            for i, length in enumerate(rows):
                nxt = rows[i + 1] if i + 1 < len(rows) else 0
                if length > nxt:
                    new = list(rows)
                    new[i] -= 1
                    while new and new[-1] == 0:
                        new.pop()
                    total += count(shape[:k] + (tuple(new),) + shape[k + 1:])
        return total

    return count(tuple(lam.parts for lam in L.components))


@lru_cache(maxsize=None)
def dimension_oracle(L: Multipartition) -> int:
    """Number of standard ``L``-tableaux, by two independent counts that must agree."""
    a, b = _hook_route(L), _path_route(L)
    if a != b:
        raise OracleFault(f"tableau counts disagree for {L}: hook formula {a}, enumeration {b}")
    return a


# -- reports -------------------------------------------------------------------------


@dataclass
class SpechtReport:
    multipartition: Multipartition
    params: Any
    dimension: int
    oracle_dimension: int
    basis_verified: bool | None = None
    pure: bool | None = None
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (self.dimension == self.oracle_dimension and self.basis_verified is not False
                and self.pure is not False and all(self.checks.values()))

    def to_json(self) -> dict:
        return {
            "multipartition": str(self.multipartition),
            "params": self.params.to_json(),
            "dimension": self.dimension,
            "oracle_dimension": self.oracle_dimension,
            "basis_verified": self.basis_verified,
            "pure": self.pure,
            "checks": dict(self.checks),
            "details": dict(self.details),
            "pass": self.passed,
        }


def verify_standard_basis(ctx: AlgebraContext, L: Multipartition) -> SpechtReport:
    """
    Check that ``z_L T_d`` over both standard index sets is a basis of ``z_L H``
    and that the two index sets coincide.  Independence of the vectors inside
    the ambient algebra is the field-level form of purity.
    """
    _check_shape(ctx, L)
    S = specht_module(ctx, L)
    z = z_element(ctx, L)
    S_ech = S.echelon()
    checks = {}
    details = {}
    index_sets = {}
    for flavor in ("column", "dual_row"):
        perms = standard_tableau_perms(L, flavor)
        index_sets[flavor] = {d.images for d in perms}
        ech = Echelon()
        inside = True
        for d in perms:
            v = vectorize(ctx, z * ctx.T(d)).coords
            ech.insert(v)
            if inside and not S_ech.contains(v):
                inside = False
                details[f"{flavor}_outside"] = list(d.images)
        independent = ech.rank == len(perms)
        spans = inside and ech.rank == S.rank
        checks[f"{flavor}_independent"] = independent
        checks[f"{flavor}_spans"] = spans
        if not independent:
            details[f"{flavor}_rank"] = [ech.rank, len(perms)]
    checks["index_sets_equal"] = index_sets["column"] == index_sets["dual_row"]
    oracle = dimension_oracle(L)
    checks["dimension_matches_oracle"] = S.rank == oracle
    return SpechtReport(L, ctx.params, S.rank, oracle,
                        basis_verified=all(checks.values()),
                        pure=checks["column_independent"] and checks["dual_row_independent"],
                        checks=checks, details=details)


def rank_one_check(ctx: AlgebraContext, L: Multipartition) -> bool:
    """True iff ``x_L b y_L'`` over all basis monomials ``b`` spans exactly the line through ``z_L``."""
    _check_shape(ctx, L)
    x = x_multi(ctx, L)
    y = y_multi(ctx, dual_multipartition(L))
    ech = Echelon()
    for key in ctx.basis:
        b = ctx.element({key: 1})
        ech.insert(vectorize(ctx, x * b * y).coords)
        if ech.rank > 1:
            return False
    z = vectorize(ctx, z_element(ctx, L)).coords
    return ech.rank == 1 and bool(z) and ech.contains(z)


# -- simple modules --------------------------------------------------------------------


def check_simple_regime(ctx: AlgebraContext, L: Multipartition):
    P = ctx.params
    if separation_product(P) == 0:
        raise RegimeError("separation product vanishes; simple modules are not classified here")
    l = quantum_characteristic(P)
    if not is_l_regular(L, l):
        raise RegimeError(f"{L} is not {l}-regular")


def simple_module(ctx: AlgebraContext, L: Multipartition) -> SubmoduleBasis:
    """``y_{L'} T_{w_{L'}} z_L H``; requires a nonzero separation product and ``l``-regular ``L``."""
    _check_shape(ctx, L)
    check_simple_regime(ctx, L)
    return submodule_closure(ctx, [vectorize(ctx, simple_generator(ctx, L))])


def endomorphism_dimension(M: SubmoduleBasis) -> int:
    return hom_dimension(M, M, M.generators)


def probe_simplicity(M: SubmoduleBasis, probes: int = 20, seed: int = 0) -> dict:
    """
    Look for a proper nonzero submodule by closing probe vectors under the
    recorded action: every coordinate unit vector, then ``probes`` sparse
    random vectors.  Finding none is evidence, not proof, of simplicity.
    """
    rng = random.Random(seed)
    F = M.field_spec or (lambda x: x)
    seeds = [{i: F(1)} for i in range(M.rank)]
    for _ in range(probes if M.rank else 0):
        support = rng.sample(range(M.rank), rng.randint(1, min(3, M.rank)))
        v = {i: F(rng.randint(1, 97)) for i in support}
        seeds.append({i: c for i, c in v.items() if c != 0})
    for k, v in enumerate(seeds):
        if not v:
            continue
        sub = module_closure(M, [v]).rank
        if sub < M.rank:
            return {"probes": len(seeds), "proper_submodule": {"probe": k, "submodule_dimension": sub}}
    return {"probes": len(seeds), "proper_submodule": None}


def is_simple(M: SubmoduleBasis, probes: int = 20, seed: int = 0) -> bool:
    if M.rank == 0:
        return False
    if endomorphism_dimension(M) != 1:
        return False
    return probe_simplicity(M, probes, seed)["proper_submodule"] is None


def sum_of_squares(ctx: AlgebraContext) -> dict:
    dims = {}
    for L in enumerate_multipartitions(ctx.m, ctx.r):
        dims[str(L)] = specht_module(ctx, L).rank
    total = sum(d * d for d in dims.values())
    return {"dimensions": dims, "sum_of_squares": total, "algebra_dimension": ctx.dim,
            "pass": total == ctx.dim}
