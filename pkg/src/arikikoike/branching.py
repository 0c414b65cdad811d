"""
Restriction from ``H^r_m`` to the subalgebra generated by ``T_0, ..., T_{r-2}``:
the Specht filtration of a restricted Specht module, the semisimple
decomposition, normal and good nodes, and the socle of a restricted simple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Any

from .algebra import AlgebraContext, context_for, z_element
from .coefficients import ParameterSet, Residue, is_semisimple_regime, quantum_characteristic, residue
from .combinatorics import (
    Multipartition,
    Node,
    addable_nodes,
    enumerate_multipartitions,
    is_l_regular,
    j_numbers,
    remove_node,
    removable_nodes,
)
from .errors import ContractError, RegimeError, VerificationError
from .linalg import SubmoduleBasis, hom_dimension, section_dimensions, submodule_closure, vectorize
from .specht import check_simple_regime, dimension_oracle, simple_module, specht_module
from .symmetric_group import cycle_element

CONVENTIONS = ("above", "below")
DEFAULT_CONVENTION = "above"


def _check_shape(ctx: AlgebraContext, L: Multipartition):
    if L.m != ctx.m or L.r != ctx.r:
        raise ContractError(f"multipartition {L} does not match (m, r) = ({ctx.m}, {ctx.r})")


def restricted_generators(ctx: AlgebraContext) -> tuple[int, ...]:
    return tuple(range(ctx.r - 1))


def sub_context(ctx: AlgebraContext) -> AlgebraContext:
    """The context of ``H^{r-1}_m`` at the same ``(q, u)``."""
    if ctx.r < 1:
        raise ContractError("restriction needs r >= 1")
    return context_for(ctx.params.with_r(ctx.r - 1))


@dataclass
class BranchReport:
    multipartition: Multipartition
    params: Any
    records: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "multipartition": str(self.multipartition),
            "params": self.params.to_json(),
            "records": self.records,
            "checks": dict(self.checks),
            **self.info,
            "pass": self.passed,
        }


# -- ordinary branching ---------------------------------------------------------------


def ordinary_filtration(ctx: AlgebraContext, L: Multipartition) -> tuple[list[SubmoduleBasis], BranchReport]:
    """
    The chain ``M_t = z_L T_{j_t, r} H^{r-1} + M_{t-1}`` over the removable
    nodes from top to bottom, with its section dimensions compared to the
    Specht dimensions of ``L`` minus each node.
    """
    _check_shape(ctx, L)
    if ctx.r < 1:
        raise ContractError("the filtration needs r >= 1")
    r = ctx.r
    gens = restricted_generators(ctx)
    z = z_element(ctx, L)
    jn = j_numbers(L)
    chain = [submodule_closure(ctx, [], gens)]
    for node, j in jn:
        v = vectorize(ctx, z * ctx.T(cycle_element(j, r, r)))
        chain.append(submodule_closure(ctx, list(chain[-1].rows) + [v.coords], gens))
    sections = section_dimensions(chain)[1:]
    top_is_specht = chain[-1].same_space(specht_module(ctx, L))
    if not top_is_specht:
        raise VerificationError(f"top of the filtration of {L} is not the Specht module",
                                {"top_rank": chain[-1].rank})
    report = BranchReport(L, ctx.params)
    for (node, j), dim in zip(jn, sections):
        sub = remove_node(L, node)
        report.records.append({
            "node": str(node),
            "j": j,
            "removed": str(sub),
            "section_dimension": dim,
            "expected": dimension_oracle(sub),
        })
    js = [j for _, j in jn]
    report.checks = {
        "sections_match": all(rec["section_dimension"] == rec["expected"] for rec in report.records),
        "j_decreasing": all(a > b for a, b in zip(js, js[1:])),
        "top_is_specht": top_is_specht,
    }
    return chain, report


def restriction_decomposition_check(ctx: AlgebraContext, L: Multipartition) -> BranchReport:
    """In the semisimple regime, each ``S^{L - n}`` occurs once in the restriction and the dimensions add up."""
    _check_shape(ctx, L)
    if not is_semisimple_regime(ctx.params):
        raise RegimeError("restriction decomposition is only checked in the semisimple regime")
    gens = restricted_generators(ctx)
    sub = sub_context(ctx)
    S = specht_module(ctx, L).restrict(gens)
    report = BranchReport(L, ctx.params)
    total = 0
    for node in removable_nodes(L):
        mu = remove_node(L, node)
        Smu = specht_module(sub, mu)
        h = hom_dimension(Smu, S, gens)
        total += Smu.rank
        report.records.append({"node": str(node), "removed": str(mu), "dimension": Smu.rank, "multiplicity": h})
    report.checks = {
        "multiplicities_one": all(rec["multiplicity"] == 1 for rec in report.records),
        "dimensions_add_up": total == S.rank,
    }
    return report


# -- normal and good nodes -----------------------------------------------------------


@dataclass(frozen=True)
class NodeClassification:
    node: Node
    residue: Residue
    status: str  # "removable", "normal" or "good"

    @property
    def normal(self) -> bool:
        return self.status in ("normal", "good")

    @property
    def good(self) -> bool:
        return self.status == "good"

    def to_json(self) -> dict:
        return {"node": self.node.to_json(), "residue": [self.residue.component, self.residue.offset],
                "status": self.status}


def _side_nodes(n: Node, nodes: list[Node], convention: str) -> list[Node]:
    """Nodes of ``n``'s component on the chosen side, nearest first."""
    if convention == "above":
        side = [x for x in nodes if x.comp == n.comp and x.row < n.row]
        return sorted(side, key=lambda x: -x.row)
    side = [x for x in nodes if x.comp == n.comp and x.row > n.row]
    return sorted(side, key=lambda x: x.row)


def _residues(L: Multipartition, P: ParameterSet):
    rem = removable_nodes(L)
    add = addable_nodes(L)
    P = P.with_r(L.r)
    res = {x: residue(x, P) for x in rem + add}
    return rem, add, res


def _is_normal_scan(n: Node, rem, add, res, convention: str) -> bool:
    rn = res[n]
    same = [x for x in rem + add if x != n and res[x] == rn]
    available = 0
    added = set(add)
    for x in _side_nodes(n, same, convention):
        if x in added:
            if available == 0:
                return False
            available -= 1
        else:
            available += 1
    return True


def _is_normal_bruteforce(n: Node, rem, add, res, convention: str) -> bool:
    """Search all injective choices of a removable node strictly between ``n`` and each addable node."""
    rn = res[n]
    addables = [x for x in _side_nodes(n, add, convention) if res[x] == rn]
    removables = [x for x in _side_nodes(n, [y for y in rem if y != n], convention) if res[x] == rn]

    def between(x: Node, m: Node) -> bool:
        lo, hi = sorted((n.row, m.row))
        return lo < x.row < hi

    if len(addables) > len(removables):
        return False
    for choice in permutations(removables, len(addables)):
        if all(between(x, m) for x, m in zip(choice, addables)):
            return True
    return False


def classify_nodes(L: Multipartition, P: ParameterSet, convention: str = DEFAULT_CONVENTION,
                   method: str = "scan") -> list[NodeClassification]:
    """
    Status of each removable node of ``L``.  Residues are compared within a
    component, which is enough once the separation product is nonzero;
    ``good`` marks the lowest normal node of each residue.
    """
    if convention not in CONVENTIONS:
        raise ContractError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    test = {"scan": _is_normal_scan, "bruteforce": _is_normal_bruteforce}.get(method)
    if test is None:
        raise ContractError(f"unknown method {method!r}")
    rem, add, res = _residues(L, P)
    normal = [n for n in rem if test(n, rem, add, res, convention)]
    lowest: dict[Residue, Node] = {}
    for n in normal:
        cur = lowest.get(res[n])
        if cur is None or n.is_lower_than(cur):
            lowest[res[n]] = n
    good = set(lowest.values())
    out = []
    for n in rem:
        status = "good" if n in good else "normal" if n in normal else "removable"
        out.append(NodeClassification(n, res[n], status))
    return out


# -- modular branching ----------------------------------------------------------------


def modular_branching_check(ctx: AlgebraContext, L: Multipartition,
                            convention: str = DEFAULT_CONVENTION) -> BranchReport:
    """
    For each ``l``-regular ``rho`` of size ``r - 1``, compare
    ``dim Hom(S^rho, D^L)`` and ``dim Hom(D^rho, D^L)`` over the subalgebra
    with the normal and good nodes of ``L``.
    """
    _check_shape(ctx, L)
    check_simple_regime(ctx, L)
    P = ctx.params
    l = quantum_characteristic(P)
    gens = restricted_generators(ctx)
    sub = sub_context(ctx)
    D = simple_module(ctx, L).restrict(gens)
    classes = classify_nodes(L, P, convention)
    normal = {str(remove_node(L, c.node)): c.node for c in classes if c.normal}
    good = {str(remove_node(L, c.node)): c.node for c in classes if c.good}
    report = BranchReport(L, P)
    for rho in enumerate_multipartitions(ctx.m, ctx.r - 1):
        if not is_l_regular(rho, l):
            continue
        key = str(rho)
        h_s = hom_dimension(specht_module(sub, rho), D, gens)
        h_d = hom_dimension(simple_module(sub, rho), D, gens)
        report.records.append({
            "rho": key,
            "h_S": h_s,
            "expected_h_S": int(key in normal),
            "h_D": h_d,
            "expected_h_D": int(key in good),
            "node": str(normal[key]) if key in normal else None,
        })
    report.checks = {
        "h_S_matches_normal": all(rec["h_S"] == rec["expected_h_S"] for rec in report.records),
        "h_D_matches_good": all(rec["h_D"] == rec["expected_h_D"] for rec in report.records),
    }
    report.info = {"convention": convention}
    return report


def restricted_hom_dimension(ctx: AlgebraContext, L: Multipartition, rho: Multipartition,
                             source: str = "simple") -> int:
    """``dim Hom(X^rho, D^L)`` over the subalgebra, ``X`` the Specht or simple module of ``rho``."""
    _check_shape(ctx, L)
    if rho.m != ctx.m or rho.r != ctx.r - 1:
        raise ContractError(f"{rho} is not an {ctx.m}-multipartition of {ctx.r - 1}")
    gens = restricted_generators(ctx)
    sub = sub_context(ctx)
    D = simple_module(ctx, L).restrict(gens)
    if source == "specht":
        X = specht_module(sub, rho)
    elif source == "simple":
        X = simple_module(sub, rho)
    else:
        raise ContractError(f"source must be 'specht' or 'simple', got {source!r}")
    return hom_dimension(X, D, gens)
