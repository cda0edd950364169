"""Command line interface: ``sgfrust <command> ...``.

Exit codes: 0 success, 1 the graph fails the property asked about (not
balanced, not critical, not in S*, wall checks failed), 2 errors and
exhausted budgets.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as sgio
from . import verify
from .balance import is_balanced
from .core import canonical_sorted
from .criticality import is_critical
from .exceptions import (
    BudgetExceededError,
    InternalInconsistencyError,
    MalformedInputError,
    PreconditionError,
    SignedGraphError,
)
from .families import KINDS, generate
from .frustration import BUDGET_ENV, default_time_budget, frustration
from .structure.circuits import two_edge_disjoint_negative_circuits
from .structure.connectivity import verify_s_star_structure
from .structure.decomposition import decompose_exhaustive, trivially_decomposable
from .structure.subdivision import classify_low_critical, reduction_sequence

OK, VIOLATION, ERROR = 0, 1, 2


def _ids(items) -> list:
    return canonical_sorted(items)


class _Input:
    """The graph named on the command line; its digest is recorded in ``ctx``."""

    def __init__(self, args, ctx: dict):
        path = args.file
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        ctx["input"] = {"path": path, "sha256": sgio.digest(text)}
        self.graph, self.signature = sgio.loads(text, path.lower().endswith(".json"))
        ctx["input"].update(vertices=len(self.graph), edges=len(self.graph.edges))


def _budget(args):
    return args.budget if getattr(args, "budget", None) is not None else default_time_budget()


# -- commands ----------------------------------------------------------------


def cmd_gen(args, ctx):
    fam = generate(args.family, args.k)
    text = sgio.dumps(fam.graph, fam.signature, json_format=bool(args.output and args.output.endswith(".json")))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    elif not args.json:
        sys.stdout.write(text)
    meta = {k: v for k, v in fam.metadata.items() if k != "coordinates"}
    coords = fam.metadata.get("coordinates")
    if coords is not None:
        meta["terminals"] = {"x": list(coords.x), "y": list(coords.y)}
        meta["boundary"] = list(coords.boundary)
    result = {"family": meta, "output": args.output, "sha256": sgio.digest(text),
              "vertices": len(fam.graph), "edges": len(fam.graph.edges)}
    if not args.output and args.json:
        result["document"] = sgio.graph_to_dict(fam.graph, fam.signature)
    return OK, result, True, None


def cmd_frustration(args, ctx):
    src = _Input(args, ctx)
    G, sig = src.graph, src.signature
    method = args.method
    if args.all_signatures and method == "bnb":
        raise PreconditionError("--all-signatures needs the enumeration solver")
    res = frustration(G, sig, method=method, collect_all=args.all_signatures, time_budget=_budget(args))
    verify.check_switch(G, sig, res.switch_set, res.witness)
    if len(res.witness) != res.index:
        raise InternalInconsistencyError("witness size differs from the reported index")
    result = {"index": res.index, "witness": _ids(res.witness), "switch_set": _ids(res.switch_set),
              "method": res.method}
    if res.all_min_signatures is not None:
        for s in res.all_min_signatures:
            verify.check_signature_witness(G, sig, s)
        result["all_min_signatures"] = [_ids(s) for s in res.all_min_signatures]
    stats = {k: v for k, v in res.stats.items() if isinstance(v, (int, float, str))}
    if not res.certified:
        error = {"reason": "budget", "message": "time budget exhausted; index is an upper bound"}
        return ERROR, result, False, error, stats
    return OK, result, True, None, stats


def cmd_balance(args, ctx):
    src = _Input(args, ctx)
    cert = is_balanced(src.graph, src.signature)
    verify.check_balance_certificate(src.graph, src.signature, cert)
    result = {"verdict": cert.verdict}
    if cert.balanced:
        result["switch_set"] = _ids(cert.switch_set)
    else:
        result["circuit"] = list(cert.circuit)
    return (OK if cert.balanced else VIOLATION), result, True, None


def cmd_critical(args, ctx):
    src = _Input(args, ctx)
    G, sig = src.graph, src.signature
    report = is_critical(G, sig, method=args.method, time_budget=_budget(args))
    verify.check_critical_report(G, sig, report)
    result = {"verdict": report.verdict, "index": report.index, "method": report.method}
    if report.critical:
        result["per_edge"] = {e: _ids(s) for e, s in report.per_edge.items()}
    else:
        result["failing_edge"] = report.failing_edge
    if not report.certified:
        return ERROR, result, False, {"reason": "budget", "message": "a branch-and-bound run was not certified"}
    return (OK if report.critical else VIOLATION), result, True, None


def cmd_sstar(args, ctx):
    src = _Input(args, ctx)
    G, sig = src.graph, src.signature
    report = is_critical(G, sig, time_budget=_budget(args))
    if not report.critical:
        raise PreconditionError("S* membership is defined for critical graphs only")
    w = two_edge_disjoint_negative_circuits(G, sig)
    result = {"index": report.index, "in_s_star": w is None}
    if w is not None:
        verify.check_disjoint_circuits(G, sig, w)
        result["circuits"] = [_ids(w.first), _ids(w.second)]
    return (OK if w is None else VIOLATION), result, report.certified, None


def cmd_classify(args, ctx):
    src = _Input(args, ctx)
    res = classify_low_critical(src.graph, src.signature)
    result = {"index": res.index, "archetype": res.archetype, "suppressed": list(res.sequence),
              "reduced": sgio.graph_to_dict(res.graph, res.signature)}
    return OK, result, True, None


def cmd_decompose(args, ctx):
    src = _Input(args, ctx)
    G, sig = src.graph, src.signature
    hint = trivially_decomposable(G, sig)
    w = decompose_exhaustive(G, sig, max_edges=args.max_edges, max_index=args.max_index)
    result = {"decomposable": w is not None,
              "trivial_hint": None if hint is None else {"part": _ids(hint.part), "reason": hint.reason}}
    if w is not None:
        verify.check_decomposition(G, sig, w, sum(w.indices))
        result["parts"] = [_ids(p) for p in w.parts]
        result["indices"] = list(w.indices)
    return OK, result, True, None


def cmd_reduce(args, ctx):
    src = _Input(args, ctx)
    H, hsig, steps = reduction_sequence(src.graph, src.signature)
    before = frustration(src.graph, src.signature, time_budget=_budget(args))
    after = frustration(H, hsig, time_budget=_budget(args))
    if before.certified and after.certified and before.index != after.index:
        raise InternalInconsistencyError("suppression changed the frustration index")
    text = sgio.dumps(H, hsig, json_format=bool(args.output and args.output.endswith(".json")))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    result = {"suppressed": list(steps), "index": after.index, "vertices": len(H), "edges": len(H.edges),
              "output": args.output}
    if not args.output:
        result["reduced"] = sgio.graph_to_dict(H, hsig)
    return OK, result, before.certified and after.certified, None


def cmd_verify_wall(args, ctx):
    src = _Input(args, ctx)
    rep = verify_s_star_structure(src.graph, src.signature)
    result = {"checks": {k: {"passed": ok, "detail": d} for k, (ok, d) in rep.checks.items()},
              "passed": rep.passed}
    return (OK if rep.passed else VIOLATION), result, True, None


COMMANDS = {
    "gen": cmd_gen,
    "frustration": cmd_frustration,
    "balance": cmd_balance,
    "critical": cmd_critical,
    "sstar": cmd_sstar,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "reduce": cmd_reduce,
    "verify-wall": cmd_verify_wall,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a machine-readable report")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=float, default=None,
                        help=f"seconds for branch-and-bound (default: ${BUDGET_ENV}, else unbounded)")
    parser = argparse.ArgumentParser(prog="sgfrust", description="Frustration index and critical signed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a named family member")
    p.add_argument("family", choices=KINDS)
    p.add_argument("--k", type=int, default=None, help="family parameter")
    p.add_argument("-o", "--output", default=None, help="output file (.json for the JSON mirror)")

    p = sub.add_parser("frustration", parents=[common, budget], help="frustration index with witness")
    p.add_argument("file")
    p.add_argument("--all-signatures", action="store_true")
    p.add_argument("--method", choices=["auto", "enum", "bnb", "oracle"], default="auto")

    for name, text in (("balance", "balance test with certificate"),
                       ("classify", "classify a 1- or 2-critical graph"),
                       ("verify-wall", "check cubic, cyclic 4-edge-connectivity and no disjoint negative circuits")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")

    p = sub.add_parser("critical", parents=[common, budget], help="criticality test")
    p.add_argument("file")
    p.add_argument("--method", choices=["auto", "union", "per-edge", "both"], default="auto")

    p = sub.add_parser("sstar", parents=[common, budget], help="membership in S*")
    p.add_argument("file")

    p = sub.add_parser("decompose", parents=[common], help="exhaustive decomposition search")
    p.add_argument("file")
    p.add_argument("--max-edges", type=int, default=16)
    p.add_argument("--max-index", type=int, default=4)

    p = sub.add_parser("reduce", parents=[common, budget], help="suppress to an irreducible graph")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    return parser


def _human(value) -> str:
    if isinstance(value, list):
        if not value:
            return "-"
        if all(isinstance(v, list) for v in value):
            return " | ".join(_human(v) for v in value)
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _emit(report: dict, as_json: bool, stream):
    if as_json:
        stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
        return
    for key, value in report.get("result", {}).items():
        if key in ("per_edge", "document", "reduced") and value is not None:
            continue
        stream.write(f"{key}: {_human(value)}\n")
    if report.get("error"):
        stream.write(f"error ({report['error']['reason']}): {report['error']['message']}\n")
    if not report.get("certified", True):
        stream.write("certified: False\n")


def _reason(exc) -> str:
    if isinstance(exc, BudgetExceededError):
        return "budget"
    if isinstance(exc, MalformedInputError):
        return "malformed-input"
    if isinstance(exc, PreconditionError):
        return "precondition"
    if isinstance(exc, InternalInconsistencyError):
        return "internal"
    return "error"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = {"command": args.command}
    ctx: dict = {}
    try:
        out = COMMANDS[args.command](args, ctx)
        code, result, certified, error = out[:4]
        report.update(result=result, certified=certified)
        if len(out) > 4:
            report["stats"] = out[4]
        if error:
            report["error"] = error
    except (SignedGraphError, OSError) as exc:
        code = ERROR
        reason = _reason(exc) if isinstance(exc, SignedGraphError) else "io"
        report.update(result={}, certified=False, error={"reason": reason, "message": str(exc)})
    if "input" in ctx:
        report["input"] = ctx["input"]
    elif getattr(args, "file", None):
        report["input"] = {"path": args.file}
    stream = sys.stdout if code != ERROR or args.json else sys.stderr
    if args.command == "gen" and code == OK and not args.output and not args.json:
        return code  # the graph itself went to standard output
    _emit(report, args.json, stream)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
