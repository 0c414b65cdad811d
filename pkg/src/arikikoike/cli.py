"""
Command-line front end.

Exit status: 0 when everything checked passes, 1 when a verification fails,
2 for usage, parameter or regime errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Sequence

from .algebra import context_for, relations_selftest
from .branching import (
    CONVENTIONS,
    DEFAULT_CONVENTION,
    classify_nodes,
    modular_branching_check,
    ordinary_filtration,
    restriction_decomposition_check,
)
from .coefficients import ParameterSet, f5_parameters, generic_parameters, quantum_characteristic
from .combinatorics import (
    Multipartition,
    concatenate,
    dominance_le,
    enumerate_multipartitions,
    j_numbers,
    standard_tableaux,
)
from .errors import ContractError, OracleFault, RegimeError, SizeGuardError, VerificationError
from .specht import (
    dimension_oracle,
    rank_one_check,
    specht_module,
    sum_of_squares,
    twisted_specht_module,
    verify_standard_basis,
)
from .symmetric_group import component_w_factors, w_of_interval, w_of_multipartition


class UsageError(Exception):
    pass


# -- argument helpers -----------------------------------------------------------------


def _parse_lambda(text: str | None) -> Multipartition | None:
    if text is None:
        return None
    try:
        return Multipartition.parse(text)
    except (ContractError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _shape(args) -> tuple[int, int, Multipartition | None]:
    L = _parse_lambda(getattr(args, "lam", None))
    m, r = getattr(args, "m", None), getattr(args, "r", None)
    if L is not None:
        if m is not None and m != L.m:
            raise UsageError(f"--m {m} disagrees with the {L.m} components of --lambda")
        if r is not None and r != L.r:
            raise UsageError(f"--r {r} disagrees with |lambda| = {L.r}")
        return L.m, L.r, L
    if m is None or r is None:
        raise UsageError("give --lambda, or both --m and --r")
    if m < 1 or r < 0:
        raise UsageError("need m >= 1 and r >= 0")
    return m, r, None


def _packaged(name: str) -> Path | None:
    p = resources.files("arikikoike") / "data" / name
    return Path(str(p)) if p.is_file() else None


def _params(args, m: int, r: int) -> ParameterSet:
    source = args.params
    if source == "generic":
        return generic_parameters(m, r)
    if source == "f5":
        return f5_parameters(m, r)
    path = Path(source)
    if not path.is_file():
        fallback = _packaged(path.name)
        if fallback is None:
            raise UsageError(f"parameter file {source!r} not found")
        path = fallback
    try:
        P = ParameterSet.load(path, r)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid parameter file {source!r}: {exc}") from None
    if P.m != m:
        raise UsageError(f"parameter file has m={P.m} but the command needs m={m}")
    return P


def _need_lambda(L: Multipartition | None) -> Multipartition:
    if L is None:
        raise UsageError("this command needs --lambda")
    return L


# -- rendering ------------------------------------------------------------------------


def table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


class Result:
    """What a command produced: JSON payload, text rendering and pass flag."""

    def __init__(self, payload: Any, text: str, ok: bool = True):
        self.payload, self.text, self.ok = payload, text, ok


def _flag(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# -- commands ---------------------------------------------------------------------------


def cmd_enum(args) -> Result:
    m, r, _ = _shape(args)
    Ls = enumerate_multipartitions(m, r)
    return Result([str(L) for L in Ls], "\n".join(str(L) for L in Ls) + f"\n# {len(Ls)} multipartitions")


def cmd_dominance(args) -> Result:
    if args.mu is not None:
        L = _need_lambda(_parse_lambda(args.lam))
        M = _parse_lambda(args.mu)
        if (L.m, L.r) != (M.m, M.r):
            raise UsageError("--lambda and --mu must have the same m and r")
        le, ge = dominance_le(L, M), dominance_le(M, L)
        payload = {"lambda": str(L), "mu": str(M), "lambda_le_mu": le, "mu_le_lambda": ge}
        return Result(payload, f"{L} <= {M}: {le}\n{M} <= {L}: {ge}")
    m, r, _ = _shape(args)
    Ls = enumerate_multipartitions(m, r)
    pairs = [(str(A), str(B)) for A in Ls for B in Ls if A != B and dominance_le(A, B)]
    text = "\n".join(f"{a} <= {b}" for a, b in pairs) or "# no strict relations"
    return Result([list(p) for p in pairs], text)


def cmd_tableaux(args) -> Result:
    L = _need_lambda(_parse_lambda(args.lam))
    count = dimension_oracle(L)
    shown = []
    for k, t in enumerate(standard_tableaux(L)):
        if k >= args.limit:
            break
        comps = []
        for c in range(1, L.m + 1):
            rows = []
            for i, length in enumerate(L[c].parts, 1):
                rows.append([t[n] for n in sorted(t) if n.comp == c and n.row == i])
            comps.append(rows)
        shown.append(comps)
    payload = {"multipartition": str(L), "count": count, "tableaux": shown}
    lines = [f"standard tableaux of {L}: {count}"]
    for comps in shown:
        lines.append(" | ".join("/".join(",".join(map(str, row)) for row in rows) or "-" for rows in comps))
    if count > len(shown):
        lines.append(f"# showing {len(shown)} of {count}")
    return Result(payload, "\n".join(lines))


def cmd_w_elements(args) -> Result:
    L = _need_lambda(_parse_lambda(args.lam))
    comp, a = concatenate(L)
    w = w_of_multipartition(L)
    wa = w_of_interval(a)
    factors = component_w_factors(L)
    jn = j_numbers(L)
    payload = {
        "multipartition": str(L),
        "composition": list(comp.parts),
        "interval": list(a.bounds),
        "w_lambda": list(w.images),
        "w_interval": list(wa.images),
        "component_factors": [list(f.images) for f in factors],
        "j_numbers": [[str(n), j] for n, j in jn],
    }
    lines = [
        f"composition   {list(comp.parts)}",
        f"interval      {list(a.bounds)}",
        f"w_lambda      {w}",
        f"w_interval    {wa}",
    ]
    lines += [f"{f'w_({k})':<14}{f}" for k, f in enumerate(factors, 1)]
    lines += ["", table(["node", "j"], [[str(n), j] for n, j in jn])]
    return Result(payload, "\n".join(lines))


def cmd_selftest(args) -> Result:
    m, r, _ = _shape(args)
    P = _params(args, m, r)
    rep = relations_selftest(context_for(P))
    rows = [[k, _flag(v)] for k, v in rep["relations"].items()]
    text = f"{P}  basis size {rep['basis_size']}\n" + table(["relation", "result"], rows)
    return Result(rep, text, rep["pass"])


def cmd_specht_dim(args) -> Result:
    m, r, L = _shape(args)
    P = _params(args, m, r)
    ctx = context_for(P)
    Ls = [L] if L is not None else enumerate_multipartitions(m, r)
    rows, payload, ok = [], [], True
    for M in Ls:
        d = specht_module(ctx, M).rank
        t = twisted_specht_module(ctx, M).rank
        o = dimension_oracle(M)
        good = d == o == t
        ok &= good
        payload.append({"multipartition": str(M), "specht": d, "twisted": t, "oracle": o, "pass": good})
        rows.append([M, d, t, o, _flag(good)])
    return Result(payload, f"{P}\n" + table(["lambda", "dim S", "dim twisted", "tableaux", ""], rows), ok)


def cmd_verify_standard_basis(args) -> Result:
    m, r, L = _shape(args)
    P = _params(args, m, r)
    ctx = context_for(P)
    Ls = [L] if L is not None else enumerate_multipartitions(m, r)
    reports = [verify_standard_basis(ctx, M) for M in Ls]
    rows = [[rep.multipartition, rep.dimension, rep.oracle_dimension, _flag(rep.passed)] for rep in reports]
    ok = all(rep.passed for rep in reports)
    text = f"{P}\n" + table(["lambda", "dim", "tableaux", "basis"], rows)
    for rep in reports:
        if not rep.passed:
            text += f"\n{rep.multipartition}: {json.dumps(rep.checks)} {json.dumps(rep.details)}"
    return Result([rep.to_json() for rep in reports], text, ok)


def cmd_verify_rank_one(args) -> Result:
    m, r, L = _shape(args)
    P = _params(args, m, r)
    ctx = context_for(P)
    Ls = [L] if L is not None else enumerate_multipartitions(m, r)
    results = [(M, rank_one_check(ctx, M)) for M in Ls]
    payload = [{"multipartition": str(M), "rank_one": ok} for M, ok in results]
    text = f"{P}\n" + table(["lambda", "rank one"], [[M, _flag(ok)] for M, ok in results])
    return Result(payload, text, all(ok for _, ok in results))


def cmd_branch_ordinary(args) -> Result:
    m, r, L = _shape(args)
    P = _params(args, m, r)
    ctx = context_for(P)
    Ls = [L] if L is not None else enumerate_multipartitions(m, r)
    payload, blocks, ok = [], [], True
    for M in Ls:
        _, rep = ordinary_filtration(ctx, M)
        ok &= rep.passed
        payload.append(rep.to_json())
        rows = [[rec["node"], rec["j"], rec["removed"], rec["section_dimension"], rec["expected"]]
                for rec in rep.records]
        blocks.append(f"{M}: {_flag(rep.passed)}\n" + table(["node", "j", "lambda - node", "section", "expected"], rows))
    return Result(payload, f"{P}\n" + "\n\n".join(blocks), ok)


def cmd_branch_semisimple(args) -> Result:
    m, r, L = _shape(args)
    P = _params(args, m, r)
    ctx = context_for(P)
    Ls = [L] if L is not None else enumerate_multipartitions(m, r)
    payload, blocks, ok = [], [], True
    for M in Ls:
        rep = restriction_decomposition_check(ctx, M)
        ok &= rep.passed
        payload.append(rep.to_json())
        rows = [[rec["node"], rec["removed"], rec["dimension"], rec["multiplicity"]] for rec in rep.records]
        blocks.append(f"{M}: {_flag(rep.passed)}\n" + table(["node", "lambda - node", "dim", "multiplicity"], rows))
    return Result(payload, f"{P}\n" + "\n\n".join(blocks), ok)


def cmd_nodes_classify(args) -> Result:
    L = _need_lambda(_parse_lambda(args.lam))
    P = _params(args, L.m, L.r)
    classes = classify_nodes(L, P, args.convention)
    payload = {
        "multipartition": str(L),
        "l": str(quantum_characteristic(P)),
        "convention": args.convention,
        "nodes": [c.to_json() for c in classes],
    }
    rows = [[c.node, c.residue, c.status] for c in classes]
    text = f"{P}  l={quantum_characteristic(P)}  convention={args.convention}\n" + table(["node", "residue", "status"], rows)
    return Result(payload, text)


def cmd_branch_modular(args) -> Result:
    L = _need_lambda(_parse_lambda(args.lam))
    P = _params(args, L.m, L.r)
    rep = modular_branching_check(context_for(P), L, args.convention)
    rows = [[rec["rho"], rec["node"] or "-", rec["h_S"], rec["expected_h_S"], rec["h_D"], rec["expected_h_D"]]
            for rec in rep.records]
    socle = [rec["rho"] for rec in rep.records if rec["h_D"]]
    text = (f"{P}  convention={args.convention}\n"
            + table(["rho", "normal node", "h_S", "expected", "h_D", "expected"], rows)
            + f"\nsocle constituents: {', '.join('D^' + s for s in socle) or 'none'}\n{_flag(rep.passed)}")
    return Result(rep.to_json(), text, rep.passed)


def cmd_sum_of_squares(args) -> Result:
    m, r, _ = _shape(args)
    P = _params(args, m, r)
    rep = sum_of_squares(context_for(P))
    rows = [[k, v] for k, v in rep["dimensions"].items()]
    text = (f"{P}\n" + table(["lambda", "dim S"], rows)
            + f"\nsum of squares {rep['sum_of_squares']}, algebra dimension {rep['algebra_dimension']}: {_flag(rep['pass'])}")
    return Result(rep, text, rep["pass"])


# -- parser ---------------------------------------------------------------------------------


def _common(shape: bool = True, params: bool = True, convention: bool = False) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    if shape:
        p.add_argument("--m", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--lambda", dest="lam", metavar="LAMBDA", help='multipartition such as "3,1|2,2|1"')
    if params:
        p.add_argument("--params", default="generic", help="generic, f5, or a JSON parameter file")
    if convention:
        p.add_argument("--convention", choices=CONVENTIONS, default=DEFAULT_CONVENTION)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arikikoike", description="Exact computations in Ariki-Koike algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(container, name: str, fn: Callable, help_: str, **kw) -> argparse.ArgumentParser:
        p = container.add_parser(name, parents=[_common(**kw)], help=help_)
        p.set_defaults(fn=fn)
        return p

    add(sub, "enum", cmd_enum, "list the m-multipartitions of r", params=False)
    p = add(sub, "dominance", cmd_dominance, "dominance order", params=False)
    p.add_argument("--mu", help="compare --lambda with this multipartition")
    p = add(sub, "tableaux", cmd_tableaux, "standard tableaux of a multipartition", params=False)
    p.add_argument("--limit", type=int, default=20)
    add(sub, "w-elements", cmd_w_elements, "permutations and j-numbers attached to a multipartition", params=False)
    add(sub, "algebra-selftest", cmd_selftest, "check the defining relations on the regular representation")
    add(sub, "specht-dim", cmd_specht_dim, "dimensions of Specht and twisted Specht modules")
    add(sub, "sum-of-squares", cmd_sum_of_squares, "sum of squared Specht dimensions")

    verify = sub.add_parser("verify", help="verification commands").add_subparsers(dest="what", required=True)
    add(verify, "standard-basis", cmd_verify_standard_basis, "standard basis of a Specht module")
    add(verify, "rank-one", cmd_verify_rank_one, "x H y is spanned by z")

    branch = sub.add_parser("branch", help="restriction to the subalgebra of rank r-1").add_subparsers(
        dest="what", required=True)
    add(branch, "ordinary", cmd_branch_ordinary, "Specht filtration of a restricted Specht module")
    add(branch, "semisimple", cmd_branch_semisimple, "decomposition of a restricted Specht module")
    add(branch, "modular", cmd_branch_modular, "socle of a restricted simple module", convention=True)

    nodes = sub.add_parser("nodes", help="node combinatorics").add_subparsers(dest="what", required=True)
    add(nodes, "classify", cmd_nodes_classify, "normal and good removable nodes", convention=True)
    return parser


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        res = args.fn(args)
    except (UsageError, ContractError, RegimeError, SizeGuardError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (VerificationError, OracleFault) as exc:
        details = getattr(exc, "details", {})
        if args.format == "json":
            print(json.dumps({"error": str(exc), "details": details}, indent=2, default=str), file=out)
        else:
            print(f"verification failed: {exc} {details or ''}".rstrip(), file=out)
        return 1
    if args.format == "json":
        print(json.dumps(res.payload, indent=2, default=str), file=out)
    else:
        print(res.text, file=out)
    return 0 if res.ok else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
