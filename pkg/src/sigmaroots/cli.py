"""Command-line surface.

Results go to stdout, errors to stderr.  Exit codes: 0 success, 1 oracle
cross-check mismatch, 2 parse error, 3 precondition violation, 4 budget
exceeded.  Output is byte-identical across reruns; the environment
variable SIGMA_ROOTS_THREADS is accepted as a worker-count hint and never
affects results.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle
from .genetic import GeneticCert, compare, genetic_closure, irreducible_sigma_check, seeds
from .local import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    RepType,
    UGraph,
    local_graph,
    parse_rep_type,
    underlying_graph,
)
from .quiver import DimVector, Quiver, Weight, format_vector, parse_vector
from .roots import RootClass, classify_root, positive_roots_upto
from .sigma import SigmaContext, SigmaReason
from .tame import Embedding, TameSetting, contains_tame, find_all_tame

EXIT_OK = 0
EXIT_ORACLE_MISMATCH = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class CLIParseError(Exception):
    """Bad command-line input (maps to exit code 2)."""


class OracleMismatch(Exception):
    """A cross-check disagreed with the main computation (exit code 1)."""


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise CLIParseError(f"cannot read {path}: {exc}") from None


def _load_quiver(args) -> Quiver:
    if getattr(args, "quiver_inline", None) is not None:
        text = args.quiver_inline.replace(";", "\n")
    else:
        text = _read_text(args.quiver)
    try:
        return Quiver.parse(text)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise CLIParseError(f"bad quiver: {exc}") from None


def _load_graph(args) -> UGraph:
    if getattr(args, "graph_inline", None) is not None:
        text = args.graph_inline
    else:
        text = _read_text(args.graph)
    try:
        return UGraph.from_json(text)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise CLIParseError(f"bad graph: {exc}") from None


def _weight(args, k: int) -> Weight:
    raw = getattr(args, "lam", None)
    if raw is None:
        return Weight.zeros(k)
    try:
        return Weight.parse(raw, k)
    except ValueError as exc:
        raise CLIParseError(f"bad weight: {exc}") from None


def _vector(raw: str, k: int, what: str) -> DimVector:
    try:
        return parse_vector(raw, k)
    except ValueError as exc:
        raise CLIParseError(f"bad {what}: {exc}") from None


def _rep_type(raw: str, k: int) -> RepType:
    try:
        return parse_rep_type(raw, k)
    except ValueError as exc:
        raise CLIParseError(f"bad representation type: {exc}") from None


def _emit(args, lines, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _vec_json(a) -> list:
    return [int(x) for x in a]


def _cert_human(a, cert: GeneticCert | None) -> str:
    if cert is None:
        return f"{format_vector(a)} seed"
    terms = []
    for e, beta in cert.parts:
        terms.append(format_vector(beta) if e == 1 else f"{e}*{format_vector(beta)}")
    return f"{format_vector(a)} depth {cert.depth} via {cert.setting.name} over " + "+".join(terms)


def _cert_json(cert: GeneticCert | None):
    if cert is None:
        return None
    return {
        "depth": cert.depth,
        "setting": cert.setting.name,
        "parts": [{"e": e, "beta": _vec_json(beta)} for e, beta in cert.parts],
    }


def _verdict_human(verdict) -> str:
    if verdict.member:
        return "member"
    if verdict.reason is SigmaReason.NOT_POSITIVE_ROOT:
        return "not a member; not a positive root"
    if verdict.reason is SigmaReason.WEIGHT_PAIRING_NONZERO:
        return "not a member; nonzero weight pairing"
    witness = "+".join(format_vector(b) for b in verdict.witness)
    return f"not a member; blocked by {witness}"


def _verdict_json(verdict) -> dict:
    return {
        "member": verdict.member,
        "reason": verdict.reason.value,
        "witness": None
        if verdict.witness is None
        else [_vec_json(b) for b in verdict.witness],
    }


def _rep_type_json(t: RepType | None):
    if t is None:
        return None
    return {"parts": [{"d": d, "beta": _vec_json(beta)} for d, beta in t.parts]}


def _embedding_json(setting: TameSetting, emb: Embedding) -> dict:
    return {
        "setting": setting.name,
        "delta": _vec_json(setting.delta),
        "map": [t + 1 for t in emb.map],
    }


def _embedding_human(setting: TameSetting, emb: Embedding) -> str:
    pairs = " ".join(f"{u + 1}->{t + 1}" for u, t in enumerate(emb.map))
    return f"contains {setting.name}: {pairs}"


# ----------------------------------------------------------------------
# commands

def cmd_roots(args) -> int:
    q = _load_quiver(args)
    bound = _vector(args.bound, q.k, "bound")
    found = positive_roots_upto(q, bound)
    lines = [f"{format_vector(a)} {cls.value}" for a, cls in found]
    payload = {
        "bound": _vec_json(bound),
        "roots": [{"class": cls.value, "vector": _vec_json(a)} for a, cls in found],
    }
    if args.oracle:
        real = {a for a, cls in found if cls is RootClass.REAL}
        imag = {a for a, cls in found if cls is RootClass.IMAGINARY}
        if real != oracle.weyl_real_roots(q, bound):
            raise OracleMismatch("real roots disagree with the reflection-orbit oracle")
        if imag != oracle.imaginary_roots_closure(q, bound):
            raise OracleMismatch("imaginary roots disagree with the fundamental-region oracle")
        lines.append(f"oracle: agree ({len(found)} roots)")
        payload["oracle"] = "agree"
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_is_root(args) -> int:
    q = _load_quiver(args)
    alpha = _vector(args.alpha, q.k, "alpha")
    cls = classify_root(q, alpha)
    text = {"not_root": "not a root", "real": "real", "imaginary": "imaginary"}[cls.value]
    lines = [text]
    payload = {"class": cls.value, "vector": _vec_json(alpha)}
    if args.oracle:
        in_real = alpha in oracle.weyl_real_roots(q, alpha)
        in_imag = alpha in oracle.imaginary_roots_closure(q, alpha)
        expected = {
            RootClass.REAL: (True, False),
            RootClass.IMAGINARY: (False, True),
            RootClass.NOT_ROOT: (False, False),
        }[cls]
        if (in_real, in_imag) != expected:
            raise OracleMismatch("classification disagrees with the orbit oracles")
        lines.append("oracle: agree")
        payload["oracle"] = "agree"
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_p(args) -> int:
    q = _load_quiver(args)
    alpha = _vector(args.alpha, q.k, "alpha")
    value = q.p(alpha)
    _emit(args, [str(value)], {"p": value, "vector": _vec_json(alpha)})
    return EXIT_OK


def cmd_sigma(args) -> int:
    q = _load_quiver(args)
    lam = _weight(args, q.k)
    bound = _vector(args.bound, q.k, "bound")
    ctx = SigmaContext(q, lam)
    members = ctx.members_upto(bound)
    lines = [format_vector(a) for a in members]
    payload = {
        "bound": _vec_json(bound),
        "lambda": [str(x) for x in lam],
        "members": [_vec_json(a) for a in members],
    }
    if args.oracle:
        from .quiver import iter_box

        checked = 0
        for a in iter_box(bound):
            if a.grade() > oracle.BRUTE_CAP:
                continue
            if oracle.brute_in_sigma(q, lam, a) != ctx.is_member(a):
                raise OracleMismatch(f"membership of {format_vector(a)} disagrees with brute force")
            checked += 1
        lines.append(f"oracle: agree ({checked} vectors checked)")
        payload["oracle"] = "agree"
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_in_sigma(args) -> int:
    q = _load_quiver(args)
    lam = _weight(args, q.k)
    alpha = _vector(args.alpha, q.k, "alpha")
    verdict = SigmaContext(q, lam).verdict(alpha)
    lines = [_verdict_human(verdict)]
    payload = dict(_verdict_json(verdict), vector=_vec_json(alpha))
    if args.oracle:
        if oracle.brute_in_sigma(q, lam, alpha) != verdict.member:
            raise OracleMismatch("membership disagrees with brute-force decomposition")
        lines.append("oracle: agree")
        payload["oracle"] = "agree"
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_seeds(args) -> int:
    q = _load_quiver(args)
    lam = _weight(args, q.k)
    bound = _vector(args.bound, q.k, "bound")
    found = seeds(q, lam, bound, mode=args.seed)
    _emit(
        args,
        [format_vector(a) for a in found],
        {"mode": args.seed, "seeds": [_vec_json(a) for a in found]},
    )
    return EXIT_OK


def cmd_local_graph(args) -> int:
    q = _load_quiver(args)
    t = _rep_type(args.rep_type, q.k)
    graph = local_graph(q, t.betas)
    lines = [f"vertices {graph.l}"]
    lines += [f"loops {' '.join(str(x) for x in graph.loops)}"]
    lines += [f"edge {i + 1} {j + 1} {m}" for i, j, m in graph.edge_list()]
    _emit(args, lines, {"graph": graph.to_json(), "type": _rep_type_json(t)})
    return EXIT_OK


def cmd_tame_check(args) -> int:
    g = _load_graph(args)
    alpha = _vector(args.alpha, g.l, "alpha")
    if args.all:
        found = find_all_tame(g, alpha)
        lines = [_embedding_human(s, e) for s, e in found] or ["none"]
        payload = {"containments": [_embedding_json(s, e) for s, e in found]}
    else:
        got = contains_tame(g, alpha)
        if got is None:
            lines = ["none"]
            payload = {"containment": None}
        else:
            setting, emb = got
            emb.validate(setting, g, alpha)
            lines = [_embedding_human(setting, emb)]
            payload = {"containment": _embedding_json(setting, emb)}
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_genetic(args) -> int:
    q = _load_quiver(args)
    lam = _weight(args, q.k)
    bound = _vector(args.bound, q.k, "bound")
    closure = genetic_closure(q, lam, bound, seed_mode=args.seed, budget=args.budget)
    lines = [_cert_human(a, cert) for a, cert in closure]
    payload = {
        "bound": _vec_json(bound),
        "members": [
            {"vector": _vec_json(a), "certificate": _cert_json(cert)} for a, cert in closure
        ],
        "seed_mode": args.seed,
    }
    if args.oracle:
        ctx = SigmaContext(q, lam)
        for a, cert in closure:
            if cert is not None:
                cert.revalidate(q)
            if args.seed == "minimal" and not ctx.is_member(a):
                raise OracleMismatch(f"closure member {format_vector(a)} fails the membership test")
        lines.append(f"oracle: certificates revalidate ({len(closure)} members)")
        payload["oracle"] = "agree"
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_irred_check(args) -> int:
    q = _load_quiver(args)
    lam = _weight(args, q.k)
    alpha = _vector(args.alpha, q.k, "alpha")
    holds, failing = irreducible_sigma_check(
        q, lam, alpha, budget=args.budget, threshold=args.refine_threshold
    )
    if holds:
        lines = ["true"]
    else:
        lines = [f"false; failing type {failing.label()}"]
    _emit(
        args,
        lines,
        {
            "holds": holds,
            "failing_type": _rep_type_json(failing),
            "vector": _vec_json(alpha),
        },
    )
    return EXIT_OK


def cmd_compare(args) -> int:
    q = _load_quiver(args)
    lam = _weight(args, q.k)
    bound = _vector(args.bound, q.k, "bound")
    report = compare(q, lam, bound, budget=args.budget)
    lines = [
        "sigma: " + (" ".join(format_vector(a) for a in report.sigma_members) or "-"),
        "genetic: " + (" ".join(format_vector(a) for a in report.closure_members) or "-"),
        "irreducible: " + (" ".join(format_vector(a) for a in report.irreducible_members) or "-"),
    ]
    if report.closure_budget_exceeded:
        lines.append("note: closure budget exceeded; closure set is partial")
    if not report.discrepancies:
        lines.append("discrepancies: none")
    else:
        lines.append(f"discrepancies: {len(report.discrepancies)}")
        for disc in report.discrepancies:
            rec = disc["record"]
            detail = _verdict_human(rec.verdict)
            extra = ""
            if rec.irreducible is False and rec.failing_type is not None:
                extra = f"; failing type {rec.failing_type.label()}"
            lines.append(
                f"  {format_vector(disc['alpha'])} only in {disc['only_in']} "
                f"(of {disc['pair'][0]}/{disc['pair'][1]}): {detail}{extra}"
            )
    records = [
        {
            "alpha": _vec_json(rec.alpha),
            "sigma": _verdict_json(rec.verdict),
            "closure": {"member": rec.in_closure, "certificate": _cert_json(rec.closure_cert)},
            "irreducible": {
                "holds": rec.irreducible,
                "failing_type": _rep_type_json(rec.failing_type),
                "budget_exceeded": rec.budget_exceeded,
            },
        }
        for rec in report.records
    ]
    payload = {
        "bound": _vec_json(bound),
        "sigma": [_vec_json(a) for a in report.sigma_members],
        "genetic": [_vec_json(a) for a in report.closure_members],
        "irreducible": [_vec_json(a) for a in report.irreducible_members],
        "discrepancies": [
            {
                "alpha": _vec_json(d["alpha"]),
                "pair": list(d["pair"]),
                "only_in": d["only_in"],
            }
            for d in report.discrepancies
        ],
        "records": records,
        "closure_budget_exceeded": report.closure_budget_exceeded,
    }
    _emit(args, lines, payload)
    return EXIT_OK


# ----------------------------------------------------------------------
# parser

def _add_quiver_opts(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--quiver", metavar="PATH", help="quiver file (text or JSON)")
    group.add_argument(
        "--quiver-inline",
        metavar="TEXT",
        help="inline quiver, ';' separates lines, e.g. \"vertices 2; arrow 1 2 2\"",
    )


def _add_common_opts(p, lam=True):
    if lam:
        p.add_argument(
            "--lambda",
            dest="lam",
            metavar="RATIONALS",
            help="comma-separated exact rationals, e.g. 1/2,-1/3 (default: zeros)",
        )
    p.add_argument("--json", action="store_true", help="machine output, stable key order")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigma-roots",
        description="Root combinatorics for quivers: positive roots, simple "
        "dimension vectors at a rational weight, local graphs, tame "
        "containment and the genetic closure.",
        epilog="SIGMA_ROOTS_THREADS is read as a worker-count hint only; "
        "results never depend on it.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("roots", help="positive roots up to a bound")
    _add_quiver_opts(p)
    _add_common_opts(p, lam=False)
    p.add_argument("--bound", required=True, metavar="VEC")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("is-root", help="classify one vector")
    _add_quiver_opts(p)
    _add_common_opts(p, lam=False)
    p.add_argument("--alpha", required=True, metavar="VEC")
    p.set_defaults(func=cmd_is_root)

    p = sub.add_parser("p", help="number of parameters p(alpha)")
    _add_quiver_opts(p)
    _add_common_opts(p, lam=False)
    p.add_argument("--alpha", required=True, metavar="VEC")
    p.set_defaults(func=cmd_p)

    p = sub.add_parser("sigma", help="simple dimension vectors up to a bound")
    _add_quiver_opts(p)
    _add_common_opts(p)
    p.add_argument("--bound", required=True, metavar="VEC")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("in-sigma", help="membership verdict with witness")
    _add_quiver_opts(p)
    _add_common_opts(p)
    p.add_argument("--alpha", required=True, metavar="VEC")
    p.set_defaults(func=cmd_in_sigma)

    p = sub.add_parser("seeds", help="induction seeds up to a bound")
    _add_quiver_opts(p)
    _add_common_opts(p)
    p.add_argument("--bound", required=True, metavar="VEC")
    p.add_argument("--seed", choices=["minimal", "real-roots"], default="minimal")
    p.set_defaults(func=cmd_seeds)

    p = sub.add_parser("local-graph", help="local graph of a representation type")
    _add_quiver_opts(p)
    _add_common_opts(p, lam=False)
    p.add_argument(
        "--rep-type", required=True, metavar="TYPE", help='e.g. "(1,1,0);(1,0,1)"'
    )
    p.set_defaults(func=cmd_local_graph)

    p = sub.add_parser("tame-check", help="tame setting contained in (graph, alpha)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="PATH", help="graph JSON file")
    group.add_argument("--graph-inline", metavar="JSON")
    _add_common_opts(p, lam=False)
    p.add_argument("--alpha", required=True, metavar="VEC")
    p.add_argument("--all", action="store_true", help="all containment classes")
    p.set_defaults(func=cmd_tame_check)

    p = sub.add_parser("genetic", help="genetic closure with certificates")
    _add_quiver_opts(p)
    _add_common_opts(p)
    p.add_argument("--bound", required=True, metavar="VEC")
    p.add_argument("--seed", choices=["minimal", "real-roots"], default="minimal")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_genetic)

    p = sub.add_parser("irred-check", help="tame containment over all types")
    _add_quiver_opts(p)
    _add_common_opts(p)
    p.add_argument("--alpha", required=True, metavar="VEC")
    p.add_argument("--refine-threshold", type=int, choices=[0, 1], default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_irred_check)

    p = sub.add_parser("compare", help="compare the three descriptions over a box")
    _add_quiver_opts(p)
    _add_common_opts(p)
    p.add_argument("--bound", required=True, metavar="VEC")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    # worker-count hint; accepted for compatibility, never changes results
    os.environ.get("SIGMA_ROOTS_THREADS")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def entry() -> None:
    sys.exit(main())
