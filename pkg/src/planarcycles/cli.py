"""Command-line interface: ``planarcycles <subcommand> ...``.

Graphs are read as graph6 lines (or ``n m`` edge-list blocks) from a file or
standard input; results are newline-delimited JSON on standard output.
Exit status: 0 success, 1 property violations, 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass
from typing import Optional, TextIO

from .constructions import FormulaTable, build_blowup, is_in_family, parse_selector, random_selector
from .cycles import MAX_K, MIN_K, count_induced_cycles
from .graph6 import StreamError, edge_list_format, graph6_encode, read_graphs
from .planarity import is_planar
from .search import enumerate_planar, max_induced_6cycles, property_suite_many
from .structure import analyze

DEFAULT_SEED = 0


@dataclass
class RunConfig:
    subcommand: str
    input: Optional[str] = None
    input_format: str = "graph6"
    output_format: str = "graph6"
    k: int = 6
    seed: int = DEFAULT_SEED
    tau: int = 2
    half_length: int = 3
    probe_threshold: Optional[float] = None
    jobs: int = 1
    n: Optional[int] = None
    m: Optional[int] = None
    prime: bool = False
    family: Optional[str] = None
    sidecar: Optional[str] = None
    labeled: bool = False
    max_path_len: int = 6


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj) + "\n")


def _open_input(cfg: RunConfig, stdin: TextIO):
    if cfg.input in (None, "-"):
        return stdin, False
    return open(cfg.input, encoding="utf-8"), True


def _report_errors(errors: list[StreamError], err: TextIO) -> None:
    for e in errors:
        err.write(f"line {e.line}: {e.message}\n")


def _cmd_gen(cfg: RunConfig, out: TextIO) -> int:
    n, m = cfg.n, cfg.m
    if cfg.family is not None:
        if m != 6:
            raise ValueError("--family only applies to m = 6")
        if cfg.family == "random":
            selector = random_selector(n, random.Random(cfg.seed))
        else:
            selector = parse_selector(cfg.family)
    else:
        selector = "all" if cfg.prime else None
    g, _, layout = build_blowup(n, m, selector)
    if cfg.output_format == "graph6":
        out.write(graph6_encode(g) + "\n")
    elif cfg.output_format == "edge-list":
        out.write(edge_list_format(g))
    else:
        _dump({"graph6": graph6_encode(g), "n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]}, out)
    if cfg.sidecar:
        meta = {
            "n": n,
            "m": m,
            "hubs": list(layout.hubs),
            "classes": [list(c) for c in layout.classes],
            "class_between": [list(layout.class_between(i)) for i in range(len(layout.classes))],
        }
        with open(cfg.sidecar, "w", encoding="utf-8") as fh:
            json.dump(meta, fh)
            fh.write("\n")
    return 0


def _per_graph(cfg: RunConfig, stdin: TextIO, out: TextIO, err: TextIO, fn) -> int:
    errors: list[StreamError] = []
    fh, close = _open_input(cfg, stdin)
    try:
        for lineno, g in read_graphs(fh, cfg.input_format, errors):
            _dump({"line": lineno, **fn(g)}, out)
    finally:
        if close:
            fh.close()
    _report_errors(errors, err)
    return 2 if errors else 0


def _cmd_search(cfg: RunConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    errors: list[StreamError] = []
    if cfg.input is None:
        stream = enumerate_planar(cfg.n, unique=not cfg.labeled)
        report = max_induced_6cycles(stream, cfg.n, jobs=cfg.jobs, complete=True)
    else:
        fh, close = _open_input(cfg, stdin)
        try:
            graphs = [g for _, g in read_graphs(fh, cfg.input_format, errors)]
        finally:
            if close:
                fh.close()
        report = max_induced_6cycles(iter(graphs), cfg.n, jobs=cfg.jobs)
    _dump(report.to_dict(), out)
    _report_errors(errors, err)
    return 2 if errors else 0


def _cmd_verify(cfg: RunConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    errors: list[StreamError] = []
    fh, close = _open_input(cfg, stdin)
    try:
        records = list(read_graphs(fh, cfg.input_format, errors))
    finally:
        if close:
            fh.close()
    planar = []
    for lineno, g in records:
        if is_planar(g).planar:
            planar.append((lineno, g))
        else:
            errors.append(StreamError(lineno, "graph is not planar"))
    results = property_suite_many([g for _, g in planar], jobs=cfg.jobs, max_path_len=cfg.max_path_len)
    found = 0
    for (lineno, g), violations in zip(planar, results):
        found += len(violations)
        _dump({"line": lineno, "graph6": graph6_encode(g), "violations": violations}, out)
    _report_errors(errors, err)
    if errors:
        return 2
    return 1 if found else 0


def run(
    cfg: RunConfig,
    stdin: Optional[TextIO] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Execute one subcommand; returns the process exit status."""
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if not MIN_K <= cfg.k <= MAX_K:
            raise ValueError(f"k must be in {MIN_K}..{MAX_K}")
        sub = cfg.subcommand
        if sub == "gen":
            return _cmd_gen(cfg, out)
        if sub == "formula":
            _dump(FormulaTable.at(cfg.n).to_dict(), out)
            return 0
        if sub == "count":
            return _per_graph(cfg, stdin, out, err, lambda g: count_induced_cycles(g, cfg.k).to_dict())
        if sub == "check-family":
            return _per_graph(cfg, stdin, out, err, lambda g: is_in_family(g).to_dict())
        if sub == "analyze":
            return _per_graph(
                cfg,
                stdin,
                out,
                err,
                lambda g: analyze(g, k_half=cfg.half_length, tau=cfg.tau, probe_threshold=cfg.probe_threshold),
            )
        if sub == "search":
            return _cmd_search(cfg, stdin, out, err)
        if sub == "verify":
            return _cmd_verify(cfg, stdin, out, err)
        raise ValueError(f"unknown subcommand {sub!r}")
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planarcycles", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_input(p):
        p.add_argument("-i", "--input", help="input file ('-' for stdin; default stdin)")
        p.add_argument("--input-format", choices=["graph6", "edge-list"], default="graph6")

    p = sub.add_parser("gen", help="generate F(n,m), F'(n,m) or a family member")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--prime", action="store_true", help="add a path through each blown-up class")
    grp.add_argument("--family", metavar="SELECTOR", help="none | all | random | per-class positions like '0,1;;2' (m = 6)")
    p.add_argument("--format", dest="output_format", choices=["graph6", "edge-list", "json"], default="graph6")
    p.add_argument("--sidecar", help="write hubs and classes as JSON to this path")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("count", help="count induced k-cycles")
    add_input(p)
    p.add_argument("-k", type=int, default=6)

    p = sub.add_parser("analyze", help="principal neighbours, good 6-cycles, empty K_{2,7}, probes")
    add_input(p)
    p.add_argument("--tau", type=int, default=2, help="common-neighbourhood threshold for the hub-cycle probe")
    p.add_argument("--half-length", type=int, default=3, help="number of hubs in the hub-cycle probe")
    p.add_argument("--probe-threshold", type=float, help="minimum per-vertex 6-cycle count for probing (default n^2/10)")

    p = sub.add_parser("check-family", help="decide membership in the extremal family")
    add_input(p)

    p = sub.add_parser("formula", help="closed-form counts for order n")
    p.add_argument("n", type=int)

    p = sub.add_parser("search", help="maximise induced 6-cycles over a stream or all planar graphs of order n")
    p.add_argument("n", type=int)
    add_input(p)
    p.add_argument("--labeled", action="store_true", help="internal enumeration over labelled graphs")
    p.add_argument("-j", "--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="run the property suite over a stream")
    add_input(p)
    p.add_argument("-j", "--jobs", type=int, default=1)
    p.add_argument("--max-path-len", type=int, default=6)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    fields = set(RunConfig.__dataclass_fields__)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in fields})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
