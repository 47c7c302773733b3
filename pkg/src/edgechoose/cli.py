"""Command-line entry point.

Exit codes: 0 ok, 1 verified negative, 2 usage or I/O error, 3 contract gap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from dataclasses import asdict, dataclass, field

from .chooser import choose_72, plan_route
from .chooser.dispatch import Route
from .colors import (
    assignment_from_json,
    assignment_to_json,
    coloring_from_json,
    coloring_to_json,
    make_uniform_assignment,
    verify_set_coloring,
)
from .decomposition import MedSearch, find_med_by_long_cycle, find_med_exhaustive, find_proper_3ec
from .errors import BudgetExceeded, ContractGap, Graph6Error, GraphError, Unsupported
from .graph import encode_graph6, generate_named, parse_graph6
from .oracle import brute_force_choose, brute_force_rs_colorable, exhaustive_choosability_check

OK, NEGATIVE, USAGE, GAP = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    input_digest: str
    outcome: str
    counts: dict = field(default_factory=lambda: {"trials": 0, "successes": 0, "failures": 0,
                                                  "contract_gaps": 0})
    wall_time: float = 0.0
    seed: int | None = None

    def to_json(self) -> dict:
        return asdict(self)


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _read_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path}: invalid JSON: {exc}") from exc


def _load_graph(path: str):
    text = _read_text(path)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise _UsageError("empty graph input")
    return parse_graph6(lines[0].strip()), hashlib.sha256(text.encode()).hexdigest()


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _write_trace(path: str | None, trace) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(trace, fh, sort_keys=True, default=sorted)


def _default_seed() -> int:
    raw = os.environ.get("CHOOSE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise _UsageError(f"CHOOSE_SEED must be an integer, got {raw!r}") from exc


def cmd_gen(args) -> int:
    try:
        g = generate_named(args.name)
    except (ValueError, GraphError) as exc:
        raise _UsageError(str(exc)) from exc
    print(encode_graph6(g))
    return OK


def cmd_decompose(args) -> int:
    g, _ = _load_graph(args.input)
    if args.method == "long-cycle":
        med = find_med_by_long_cycle(g)
        nodes = None
    else:
        try:
            search = MedSearch(g, args.budget)
            med = search.run()
            nodes = search.nodes
        except BudgetExceeded as exc:
            _emit({"verdict": "budget_exceeded", "nodes": exc.nodes})
            return NEGATIVE
    if med is None:
        _emit({"verdict": "none", "method": args.method, "nodes": nodes})
        return NEGATIVE
    _emit({"verdict": "found", "method": args.method, "nodes": nodes, "med": med.to_json()})
    return OK


def _route_for(g, method: str) -> Route:
    if method == "auto":
        return plan_route(g)
    if method == "3ec":
        tec = find_proper_3ec(g)
        if tec is None:
            raise Unsupported("no proper 3-edge-coloring")
        return Route("3ec", tec=tec)
    if method == "med":
        med = find_med_by_long_cycle(g) or find_med_exhaustive(g)
        if med is None:
            raise Unsupported("no MED decomposition")
        return Route("med", med=med)
    return Route("gstar")


def cmd_color(args) -> int:
    g, _ = _load_graph(args.input)
    lists = assignment_from_json(g, _read_json(args.lists))
    trace: list = []
    try:
        route = _route_for(g, args.method)
        res = choose_72(g, lists, route)
        trace = res.trace
    except Unsupported as exc:
        _emit({"outcome": "unsupported", "reason": str(exc)})
        return NEGATIVE
    except ContractGap as exc:
        _write_trace(args.trace, exc.trace)
        _emit({"outcome": "contract_gap", "message": str(exc)})
        return GAP
    if verify_set_coloring(g, lists, res.coloring, 2):
        _emit({"outcome": "contract_gap", "message": "output failed verification"})
        return GAP
    _write_trace(args.trace, trace)
    _emit({"outcome": "ok", "method": res.method, "coloring": coloring_to_json(res.coloring)})
    return OK


def cmd_verify(args) -> int:
    g, _ = _load_graph(args.input)
    lists = assignment_from_json(g, _read_json(args.lists))
    phi = coloring_from_json(_read_json(args.coloring))
    bad = verify_set_coloring(g, lists, phi, args.s)
    if bad:
        for v in bad:
            print(f"violation {v.rule} edges={list(v.edges)} {v.detail}")
        return NEGATIVE
    print("ok")
    return OK


def cmd_fuzz(args) -> int:
    g, digest = _load_graph(args.input)
    seed = args.seed if args.seed is not None else _default_seed()
    report = RunReport("fuzz", digest, "ok", seed=seed)
    t0 = time.perf_counter()
    try:
        route = _route_for(g, args.method)
    except Unsupported:
        report.outcome = "unsupported"
        report.wall_time = time.perf_counter() - t0
        _emit(report.to_json())
        return NEGATIVE
    rng = random.Random(seed)
    gaps = []
    for trial in range(args.trials):
        lists = make_uniform_assignment(g, args.r, args.palette, rng.getrandbits(64))
        report.counts["trials"] += 1
        try:
            res = choose_72(g, lists, route)
        except ContractGap as exc:
            report.counts["contract_gaps"] += 1
            gaps.append({"trial": trial, "message": str(exc), "lists": assignment_to_json(g, lists),
                         "trace": exc.trace})
            continue
        if verify_set_coloring(g, lists, res.coloring, 2):
            report.counts["failures"] += 1
        else:
            report.counts["successes"] += 1
    if gaps:
        report.outcome = "contract_gap"
    elif report.counts["failures"]:
        report.outcome = "failures"
    report.wall_time = time.perf_counter() - t0
    _write_trace(args.trace, gaps)
    _emit(report.to_json())
    if gaps:
        return GAP
    return NEGATIVE if report.counts["failures"] else OK


def cmd_oracle(args) -> int:
    g, _ = _load_graph(args.input)
    try:
        if args.lists:
            lists = assignment_from_json(g, _read_json(args.lists))
            res = brute_force_choose(g, lists, args.s, args.budget)
            kind = "choose"
        elif args.palette is not None:
            res = exhaustive_choosability_check(g, args.r, args.s, args.palette, args.budget)
            kind = "choosability"
        else:
            res = brute_force_rs_colorable(g, args.r, args.s, args.budget)
            kind = "colorable"
    except BudgetExceeded as exc:
        _emit({"verdict": "budget_exceeded", "nodes": exc.nodes})
        return NEGATIVE
    out = {"check": kind, "verdict": res.verdict, "nodes": res.nodes}
    if res.witness is not None:
        w = res.witness
        out["witness"] = coloring_to_json(w) if hasattr(w, "chosen") else [sorted(x) for x in w]
    _emit(out)
    return OK if res.ok else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgechoose", description="(7,2) list edge-coloring tools")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="emit graph6 for a named graph")
    s.add_argument("name", help="petersen, gstar, two_k4, k4, prism, k33, flower:K, cycle:LEN, path:N")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("decompose", help="search for a MED decomposition")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--method", choices=["long-cycle", "exhaustive"], default="long-cycle")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("color", help="choose 2 colors per edge from the given lists")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--lists", required=True)
    s.add_argument("--method", choices=["auto", "3ec", "med", "gstar"], default="auto")
    s.add_argument("--trace")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a set coloring against lists")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--lists", required=True)
    s.add_argument("--coloring", required=True)
    s.add_argument("--s", type=int, default=2)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("fuzz", help="run the chooser on random uniform lists")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--r", type=int, default=7)
    s.add_argument("--palette", type=int, default=14)
    s.add_argument("--method", choices=["auto", "3ec", "med", "gstar"], default="auto")
    s.add_argument("--trace")
    s.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("oracle", help="exhaustive ground truth")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--r", type=int, default=7)
    s.add_argument("--s", type=int, default=2)
    s.add_argument("--lists")
    s.add_argument("--palette", type=int, default=None,
                   help="check every r-list assignment over this many colors")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (_UsageError, Graph6Error, GraphError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
