"""Command-line front end.

Exit status: 0 on success, 1 on I/O or parse errors, 2 when the input
violates a precondition of the requested computation (including exceeded
caps).  Failures print one line ``bettisplit: <kind>: <reason>`` to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import betti as engine
from .complex import DEFAULT_FACET_CAP, SimplicialComplex, is_simplicial_forest, pure_dimension
from .errors import BettiSplitError, InputError, PreconditionError, ResourceError
from .graph import Graph, complement, induced_matching_number, is_forest, shortest_hole
from .ideal import edge_ideal, facet_ideal
from .oracle import DEFAULT_VERTEX_CAP, FieldSpec, betti_oracle
from .splitting import (
    DEFAULT_SUBSET_CAP,
    check_edge_split,
    check_facet_split,
    check_vertex_split,
    is_splitting_edge,
    is_splitting_facet,
    is_splitting_vertex,
)
from .table import BettiTable

COMMANDS = (
    "betti", "oracle", "reg", "pd", "induced-matching", "check-split",
    "n2p", "froberg", "linear-strand", "pure-linear-strand",
)


@dataclass
class RunConfig:
    command: str
    path: str
    kind: str  # "graph" or "complex"
    characteristic: int = 0
    vertex_cap: int = DEFAULT_VERTEX_CAP
    facet_cap: int = DEFAULT_FACET_CAP
    subset_cap: int = DEFAULT_SUBSET_CAP
    fmt: str = "table"
    imax: int | None = None
    split: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        for name in ("vertex_cap", "facet_cap", "subset_cap"):
            if getattr(self, name) < 1:
                raise InputError(f"{name.replace('_', '-')} must be positive")
        if self.imax is not None and self.imax < 0:
            raise InputError("imax must be nonnegative")
        FieldSpec(self.characteristic)


# ---------------------------------------------------------------------------
# input formats


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> Graph:
    """One edge per line; ``isolated: a b c`` declares isolated vertices."""
    order: dict[str, None] = {}
    edges = []
    for lineno, line in _content_lines(text):
        if line.startswith("isolated:"):
            for v in line[len("isolated:"):].split():
                order.setdefault(v)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two vertex names, got {len(parts)}")
        if parts[0] == parts[1]:
            raise InputError(f"line {lineno}: loop at {parts[0]}")
        for v in parts:
            order.setdefault(v)
        edges.append(parts)
    return Graph.from_edges(edges, vertices=order)


def parse_complex(text: str) -> SimplicialComplex:
    """One facet per line, vertex names separated by whitespace."""
    return SimplicialComplex.from_facets([line.split() for _, line in _content_lines(text)])


def _load(cfg: RunConfig):
    try:
        with open(cfg.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {cfg.path}: {exc.strerror or exc}") from exc
    return parse_graph(text) if cfg.kind == "graph" else parse_complex(text)


class _IOFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# commands


def _ideal(cfg: RunConfig, obj):
    return edge_ideal(obj) if cfg.kind == "graph" else facet_ideal(obj)


def _oracle(cfg: RunConfig, obj) -> BettiTable:
    return betti_oracle(_ideal(cfg, obj), cfg.characteristic, vertex_cap=cfg.vertex_cap)


def _recursion(cfg: RunConfig, obj) -> BettiTable:
    if cfg.kind == "graph":
        try:
            return engine.forest_betti(obj)
        except PreconditionError as exc:
            raise PreconditionError(f"{exc}; use the oracle command for general graphs",
                                    witness=exc.witness) from exc
    try:
        return engine.simplicial_forest_betti(obj, facet_cap=cfg.facet_cap)
    except PreconditionError as exc:
        raise PreconditionError(f"{exc}; use the oracle command for general complexes",
                                witness=exc.witness) from exc


def _emit_table(cfg: RunConfig, t: BettiTable) -> str:
    return t.to_json() if cfg.fmt == "json" else t.render()


def _is_forest_input(cfg: RunConfig, obj) -> bool:
    if cfg.kind == "graph":
        return is_forest(obj)
    return len(obj.facets) <= cfg.facet_cap and is_simplicial_forest(obj, cfg.facet_cap)


def _invariant(cfg: RunConfig, obj, which: str) -> str:
    if cfg.kind == "graph" and is_forest(obj) and obj.num_edges:
        reg, pd = engine.reg_and_pd_forest(obj)
        method = "forest recursion"
    elif _is_forest_input(cfg, obj):
        t = _recursion(cfg, obj)
        reg, pd, method = t.reg, t.pd, "forest recursion"
    else:
        t = _oracle(cfg, obj)
        reg, pd, method = t.reg, t.pd, "oracle"
    value = reg if which == "reg" else pd
    if cfg.fmt == "json":
        return json.dumps({"schema": 1, which: value, "method": method})
    return f"{which} = {'undefined' if value is None else value}"


def _need_graph(cfg: RunConfig, what: str):
    if cfg.kind != "graph":
        raise InputError(f"{what} needs --graph")


def _need_complex(cfg: RunConfig, what: str):
    if cfg.kind != "complex":
        raise InputError(f"{what} needs --complex")


def _check_split(cfg: RunConfig, obj) -> str:
    s = cfg.split
    if "edge" in s:
        _need_graph(cfg, "check-split --edge")
        e = tuple(s["edge"])
        criterion = is_splitting_edge(obj, e)
        verdict = check_edge_split(obj, e, cfg.subset_cap)
        label = f"edge {e[0]} {e[1]}"
    elif "vertex" in s:
        _need_graph(cfg, "check-split --vertex")
        v = s["vertex"]
        criterion = is_splitting_vertex(obj, v)
        verdict = check_vertex_split(obj, v, cfg.subset_cap)
        label = f"vertex {v}"
    else:
        _need_complex(cfg, "check-split --facet")
        F = tuple(s["facet"])
        criterion = is_splitting_facet(obj, F)
        verdict = check_facet_split(obj, F, cfg.subset_cap)
        label = f"facet {','.join(F)}"
    witness = verdict.witness
    if witness is not None and not isinstance(witness, str):
        witness = ["*".join(m) if not isinstance(m, str) else m for m in witness]
    if cfg.fmt == "json":
        return json.dumps({
            "schema": 1, "split": label, "criterion": criterion,
            "verified": verdict.verified, "method": verdict.method,
            "reason": verdict.reason, "witness": witness,
        })
    lines = [
        f"{label}: criterion {'holds' if criterion else 'fails'}",
        f"verifier: {'verified' if verdict.verified else 'not verified'}"
        + (f" ({verdict.method})" if verdict.method else ""),
        f"reason: {verdict.reason}",
    ]
    if witness:
        lines.append("witness: " + (witness if isinstance(witness, str) else ", ".join(witness)))
    return "\n".join(lines)


def _strand(cfg: RunConfig, values: list[int], degree: int) -> str:
    if cfg.fmt == "json":
        return json.dumps({"schema": 1, "degree": degree,
                           "strand": [{"i": i, "j": i + degree, "value": v} for i, v in enumerate(values)]})
    return "\n".join(f"beta_{i},{i + degree} = {v}" for i, v in enumerate(values))


def execute(cfg: RunConfig) -> str:
    obj = _load(cfg)
    cmd = cfg.command
    if cmd == "betti":
        return _emit_table(cfg, _recursion(cfg, obj))
    if cmd == "oracle":
        return _emit_table(cfg, _oracle(cfg, obj))
    if cmd in ("reg", "pd"):
        return _invariant(cfg, obj, cmd)
    if cmd == "check-split":
        return _check_split(cfg, obj)
    if cmd == "pure-linear-strand":
        _need_complex(cfg, cmd)
        imax = cfg.imax if cfg.imax is not None else max(len(obj.vertices) - 1, 0)
        values = engine.pure_forest_linear_strand(obj, imax, cfg.facet_cap)
        return _strand(cfg, values, pure_dimension(obj))
    _need_graph(cfg, cmd)
    if cmd == "induced-matching":
        m = induced_matching_number(obj)
        return json.dumps({"schema": 1, "induced_matching": m}) if cfg.fmt == "json" else str(m)
    if cmd == "n2p":
        p = engine.n2p_max(obj)
        if cfg.fmt == "json":
            return json.dumps({"schema": 1, "p": None if p == math.inf else p, "linear": p == math.inf})
        return "linear resolution" if p == math.inf else f"p = {p}"
    if cmd == "froberg":
        hole = shortest_hole(complement(obj))
        if cfg.fmt == "json":
            return json.dumps({"schema": 1, "linear": hole is None, "complement_hole": hole})
        if hole is None:
            return "linear resolution: yes (complement chordal)"
        return f"linear resolution: no (complement has minimal cycle {' '.join(hole)})"
    if cmd == "linear-strand":
        imax = cfg.imax if cfg.imax is not None else max(obj.n - 2, 0)
        return _strand(cfg, engine.linear_strand_no_C4(obj, imax), 2)
    raise InputError(f"unknown command {cmd!r}")


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="PATH", help="edge list file")
    src.add_argument("--complex", metavar="PATH", help="facet list file")
    common.add_argument("--char", type=int, default=0, help="field characteristic, 0 or a prime")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--imax", type=int, default=None, help="last homological index of a strand")
    common.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    common.add_argument("--facet-cap", type=int, default=DEFAULT_FACET_CAP)
    common.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP)

    parser = argparse.ArgumentParser(prog="bettisplit", description="Graded Betti numbers of edge and facet ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "betti": "Betti table by the forest or simplicial-forest recursion",
        "oracle": "Betti table by Hochster's formula",
        "reg": "Castelnuovo-Mumford regularity",
        "pd": "projective dimension",
        "induced-matching": "induced matching number of a graph",
        "check-split": "test and verify a splitting edge, vertex or facet",
        "n2p": "largest p with property N_{2,p}",
        "froberg": "linear resolution test via the complement",
        "linear-strand": "beta_{i,i+2} for graphs without an induced 4-cycle",
        "pure-linear-strand": "linear strand of a pure simplicial forest",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "check-split":
            which = p.add_mutually_exclusive_group(required=True)
            which.add_argument("--edge", nargs=2, metavar=("U", "V"))
            which.add_argument("--vertex", metavar="V")
            which.add_argument("--facet", metavar="F1,F2,...")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    split = {}
    if ns.command == "check-split":
        if ns.edge:
            split["edge"] = ns.edge
        elif ns.vertex:
            split["vertex"] = ns.vertex
        else:
            split["facet"] = [x for x in ns.facet.split(",") if x]
    return RunConfig(
        command=ns.command,
        path=ns.graph if ns.graph is not None else ns.complex,
        kind="graph" if ns.graph is not None else "complex",
        characteristic=ns.char,
        vertex_cap=ns.vertex_cap,
        facet_cap=ns.facet_cap,
        subset_cap=ns.subset_cap,
        fmt=ns.format,
        imax=ns.imax,
        split=split,
    )


def _fail(kind: str, message: str, code: int) -> int:
    print(f"bettisplit: {kind}: {' '.join(str(message).split())}", file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        cfg = config_from_args(ns)
        text = execute(cfg)
    except _IOFailure as exc:
        return _fail("io", exc, 1)
    except (PreconditionError, ResourceError) as exc:
        return _fail(exc.kind, exc, 2)
    except (InputError, BettiSplitError) as exc:
        return _fail(exc.kind, exc, 1)
    print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
