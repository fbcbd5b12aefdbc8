"""Command-line front end with JSON output.

Every subcommand prints a single JSON document to stdout; logs and errors
go to stderr. Exit codes: 0 success (predicate verdicts live in the JSON,
never in the exit code), 2 malformed input or violated precondition, 3
enumeration/search cap exceeded, 4 internal invariant failure such as an
oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .digraph import Digraph, digraph_from_json_dict, digraph_to_json_dict, full_laplacian, random_digraph, reduced_laplacian, source_components
from .dynamics import DEFAULT_ENUMERATION_CAP, c_max, is_stable, stabilize
from .errors import (
    ChipFiringError,
    EnumerationCapExceededError,
    GraphError,
    InvariantViolationError,
    NegativeInputError,
    NegativeScriptError,
    NotStableError,
    SearchBoundExceededError,
    SingularMatrixError,
)
from .linalg import rational_to_str, vec_sub
from .oracle import cross_check
from .order import conjecture_scan, energy_vector, linseq_chain, partition_classes
from .recognition import is_critical_bounded, is_critical_fixpoint, is_superstable
from .scripts import minimum_strong_script

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4


def _load_graph(path: str) -> Digraph:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    return digraph_from_json_dict(obj)


def _parse_config(text: str, n: int) -> tuple[int, ...]:
    try:
        entries = tuple(int(x.strip()) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad configuration {text!r}: {exc}") from exc
    if len(entries) != n:
        raise ValueError(f"configuration has {len(entries)} entries, graph has {n} non-sink vertices")
    return entries


def _emit(payload: dict) -> int:
    sys.stdout.write(json.dumps(payload) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_validate(args) -> int:
    g = _load_graph(args.graph)
    return _emit(
        {
            "valid": True,
            "nonsink_vertices": g.n,
            "sink": g.sink,
            "out_degrees": list(g.out_degrees),
            "source_components": [list(c) for c in source_components(g)],
            "graph": digraph_to_json_dict(g),
        }
    )


def _cmd_laplacian(args) -> int:
    g = _load_graph(args.graph)
    m = full_laplacian(g) if args.full else reduced_laplacian(g)
    return _emit({"laplacian": [list(row) for row in m]})


def _cmd_stabilize(args) -> int:
    g = _load_graph(args.graph)
    config = _parse_config(args.config, g.n)
    stable, script = stabilize(g, config)
    return _emit({"stable": list(stable), "script": list(script)})


def _cmd_sigma_min(args) -> int:
    g = _load_graph(args.graph)
    return _emit({"sigma_min": list(minimum_strong_script(g))})


def _cmd_is_critical(args) -> int:
    g = _load_graph(args.graph)
    config = _parse_config(args.config, g.n)
    verdict, script = is_critical_fixpoint(g, config)
    witness = None
    if not verdict:
        _, witness = is_critical_bounded(g, config)
    return _emit(
        {
            "result": verdict,
            "witness": list(witness) if witness is not None else None,
            "script": list(script),
        }
    )


def _cmd_is_superstable(args) -> int:
    g = _load_graph(args.graph)
    config = _parse_config(args.config, g.n)
    verdict, witness = is_superstable(g, config)
    return _emit(
        {
            "result": verdict,
            "witness": list(witness) if witness is not None else None,
            "script": None,
        }
    )


def _cmd_dual(args) -> int:
    g = _load_graph(args.graph)
    config = _parse_config(args.config, g.n)
    if not is_stable(g, config):
        raise NotStableError(f"configuration {config} has an active vertex")
    dual = vec_sub(c_max(g), config)
    crit, _ = is_critical_fixpoint(g, config)
    sup, witness = is_superstable(g, dual)
    return _emit(
        {
            "dual": list(dual),
            "config_is_critical": crit,
            "dual_is_superstable": sup,
            "witness": list(witness) if witness is not None else None,
        }
    )


def _cmd_classes(args) -> int:
    g = _load_graph(args.graph)
    reports = partition_classes(g, cap=args.cap)
    if args.parallel > 1:
        with ThreadPoolExecutor(max_workers=args.parallel) as pool:
            payload = list(pool.map(lambda r: r.as_json_dict(), reports))
    else:
        payload = [r.as_json_dict() for r in reports]
    return _emit({"class_count": len(reports), "classes": payload})


def _cmd_energy(args) -> int:
    g = _load_graph(args.graph)
    config = _parse_config(args.config, g.n)
    return _emit({"energy": [rational_to_str(x) for x in energy_vector(g, config)]})


def _cmd_chain(args) -> int:
    g = _load_graph(args.graph)
    config = _parse_config(args.config, g.n)
    chain = linseq_chain(g, config)
    return _emit(
        {
            "chain": [
                {
                    "config": list(c),
                    "energy": [rational_to_str(x) for x in energy_vector(g, c)],
                }
                for c in chain
            ]
        }
    )


def _cmd_conjecture(args) -> int:
    g = _load_graph(args.graph)
    report = conjecture_scan(g, cap=args.cap)
    return _emit(report.as_json_dict())


def _cmd_cross_check(args) -> int:
    g = _load_graph(args.graph)
    report = cross_check(g, cap=args.cap)
    _emit(report.as_json_dict())
    return EXIT_OK if report.ok else EXIT_INVARIANT


def _cmd_fuzz(args) -> int:
    seeds = list(range(args.seed, args.seed + args.seeds))

    def run(seed: int) -> dict:
        g = random_digraph(args.n, args.mult, seed)
        report = cross_check(g, cap=args.cap)
        entry = {"seed": seed, "ok": report.ok, "stable_checked": report.stable_checked}
        if not report.ok:
            entry["graph"] = digraph_to_json_dict(g)
            entry["report"] = report.as_json_dict()
        return entry

    if args.parallel > 1:
        with ThreadPoolExecutor(max_workers=args.parallel) as pool:
            entries = list(pool.map(run, seeds))
    else:
        entries = [run(s) for s in seeds]
    failures = [e for e in entries if not e["ok"]]
    _emit(
        {
            "graphs_checked": len(entries),
            "disagreements": failures,
            "ok": not failures,
        }
    )
    return EXIT_OK if not failures else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="Exact chip-firing computations on digraphs with a global sink.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, graph=True, config=False, cap=False, parallel=False):
        p = sub.add_parser(name)
        if graph:
            p.add_argument("graph", help="graph JSON file")
        if config:
            p.add_argument("-c", "--config", required=True, help="comma-separated chip counts")
        if cap:
            p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
        if parallel:
            p.add_argument("--parallel", type=int, default=1)
        p.set_defaults(handler=handler)
        return p

    add("validate", _cmd_validate)
    p = add("laplacian", _cmd_laplacian)
    p.add_argument("--full", action="store_true")
    add("stabilize", _cmd_stabilize, config=True)
    add("sigma-min", _cmd_sigma_min)
    add("is-critical", _cmd_is_critical, config=True)
    add("is-superstable", _cmd_is_superstable, config=True)
    add("dual", _cmd_dual, config=True)
    add("classes", _cmd_classes, cap=True, parallel=True)
    add("energy", _cmd_energy, config=True)
    add("chain", _cmd_chain, config=True)
    add("conjecture", _cmd_conjecture, cap=True, parallel=True)
    add("cross-check", _cmd_cross_check, cap=True, parallel=True)
    p = add("fuzz", _cmd_fuzz, graph=False, cap=True, parallel=True)
    p.add_argument("--n", type=int, required=True, help="non-sink vertex count")
    p.add_argument("--mult", type=int, required=True, help="maximum arc multiplicity")
    p.add_argument("--seeds", type=int, default=1, help="number of graphs")
    p.add_argument("--seed", type=int, default=0, help="first seed")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors (and --help)
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (EnumerationCapExceededError, SearchBoundExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (
        GraphError,
        NegativeInputError,
        NegativeScriptError,
        NotStableError,
        SingularMatrixError,
        ChipFiringError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
