#!/usr/bin/env python3
"""
straight command line.

Shapes and contents are comma separated flags; fillings are read from files
(one row per line) or from stdin with ``-``. Exit codes: 0 ok, 2 invalid
input, 3 resource cap hit, 4 methods disagree.
"""

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from . import config
from .bench import export_to_csv, format_table, run_bench, save_run
from .enumeration import SSYTBasis, enumerate_ssyt, kostka
from .errors import DisagreementError, StraightError
from .graph import active_vertices, build_graph, export_dot, straighten_paths
from .rearrangement import rcoeff, rcoeff_matrix
from .straightening import (
    CHAIN,
    CLASSICAL,
    CLOSED,
    METHODS,
    ORACLE,
    PATHS,
    Straightening,
    build_dbasis,
    straighten_chain,
    straighten_classical,
    straighten_closed,
    straighten_oracle,
)
from .tableau import Content, Filling, Partition, content_of, format_filling, parse_filling
from .utils import log, parse_int_list, read_text


@dataclass
class RunConfig:
    """Everything one invocation needs, validated before dispatch."""
    command: str
    shape: Optional[Partition] = None
    content: Optional[Content] = None
    inputs: List[str] = field(default_factory=list)
    output: str = "text"
    method: str = CLOSED
    seed: int = config.DEFAULT_SEED
    trials: int = 0
    verify: bool = False
    save: bool = False
    csv: Optional[str] = None
    path_cap: int = config.DEFAULT_PATH_CAP
    oracle_cap: int = config.DEFAULT_ORACLE_CAP
    rewrite_cap: int = config.DEFAULT_REWRITE_CAP
    threads: int = config.THREADS

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        shape = getattr(args, "shape", None)
        content = getattr(args, "content", None)
        inputs = [p for p in (getattr(args, "fillings", None) or []) if p]
        if getattr(args, "filling", None):
            inputs.append(args.filling)
        output = "text"
        if getattr(args, "json", False):
            output = "json"
        elif getattr(args, "dot", False):
            output = "dot"
        return cls(
            command=args.command,
            shape=Partition(parse_int_list(shape, "shape")) if shape else None,
            content=Content(parse_int_list(content, "content")) if content else None,
            inputs=inputs,
            output=output,
            method=getattr(args, "method", CLOSED),
            seed=getattr(args, "seed", config.DEFAULT_SEED),
            trials=getattr(args, "trials", 0),
            verify=getattr(args, "verify", False),
            save=getattr(args, "save", False),
            csv=getattr(args, "csv", None),
            path_cap=getattr(args, "path_cap", config.DEFAULT_PATH_CAP),
            oracle_cap=getattr(args, "oracle_cap", config.DEFAULT_ORACLE_CAP),
            rewrite_cap=getattr(args, "rewrite_cap", config.DEFAULT_REWRITE_CAP),
        )


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _read_filling(source: str) -> Filling:
    return parse_filling(read_text(source))


def _basis_for(filling: Filling) -> SSYTBasis:
    return enumerate_ssyt(filling.shape, content_of(filling))


# ============================================================================
# Commands
# ============================================================================

def cmd_ssyt(cfg: RunConfig):
    basis = enumerate_ssyt(cfg.shape, cfg.content)
    if cfg.output == "json":
        _emit(basis.to_dict())
        return
    for i, tableau in enumerate(basis, 1):
        print(f"S{i}")
        print(format_filling(tableau))


def cmd_kostka(cfg: RunConfig):
    count = kostka(cfg.shape, cfg.content)
    if cfg.output == "json":
        _emit({"format": config.JSON_FORMAT_VERSION, "kostka": count})
    else:
        print(count)


def cmd_rcoeff(cfg: RunConfig):
    e, f = (_read_filling(source) for source in cfg.inputs)
    value = rcoeff(e, f)
    if cfg.output == "json":
        _emit({"format": config.JSON_FORMAT_VERSION, "rcoeff": value})
    else:
        print(value)


def cmd_matrix(cfg: RunConfig):
    basis = enumerate_ssyt(cfg.shape, cfg.content)
    matrix = rcoeff_matrix(basis, cfg.threads)
    if cfg.output == "json":
        _emit(matrix.to_dict())
        return
    for row in matrix.entries:
        print(" ".join(f"{v:>3}" for v in row))


def straighten(filling: Filling, cfg: RunConfig) -> Straightening:
    """Straighten one filling with the configured method."""
    basis = _basis_for(filling)
    if cfg.method == CLASSICAL:
        return straighten_classical(filling, basis, cfg.rewrite_cap)
    if cfg.method == ORACLE:
        return straighten_oracle(filling, basis, cfg.oracle_cap)
    matrix = rcoeff_matrix(basis, cfg.threads)
    if cfg.method == CHAIN:
        return straighten_chain(filling, basis, matrix)
    if cfg.method == PATHS:
        return straighten_paths(filling, build_graph(basis, matrix), cfg.path_cap)
    return straighten_closed(filling, basis, build_dbasis(basis, matrix))


def cmd_straighten(cfg: RunConfig):
    filling = _read_filling(cfg.inputs[0])
    result = straighten(filling, cfg)
    if cfg.verify and cfg.method != ORACLE:
        expected = straighten_oracle(filling, result.basis, cfg.oracle_cap)
        if expected.coefficients != result.coefficients:
            raise DisagreementError(
                f"{cfg.method} gives {result.text()} but elimination gives {expected.text()}"
            )
        log(f"Verified {cfg.method} against elimination")
    if cfg.output == "json":
        _emit(result.to_dict())
    else:
        print(result.text())


def cmd_graph(cfg: RunConfig):
    basis = enumerate_ssyt(cfg.shape, cfg.content)
    graph = build_graph(basis, rcoeff_matrix(basis, cfg.threads))
    filling = _read_filling(cfg.inputs[0]) if cfg.inputs else None
    if cfg.output == "dot":
        print(export_dot(graph, filling))
        return
    active = sorted(active_vertices(filling, basis)) if filling is not None else None
    if cfg.output == "json":
        doc = graph.to_dict()
        if active is not None:
            doc["active"] = active
        _emit(doc)
        return
    for i, j in graph.edges:
        print(f"S{i} -> S{j}  {graph.weight(i, j)}")
    if active is not None:
        print("V_F: " + " ".join(f"S{i}" for i in active))


def cmd_dbasis(cfg: RunConfig):
    basis = enumerate_ssyt(cfg.shape, cfg.content)
    dbasis = build_dbasis(basis, rcoeff_matrix(basis, cfg.threads))
    if cfg.output == "json":
        _emit({
            "format": config.JSON_FORMAT_VERSION,
            "kostka": len(basis),
            "rows": [list(row) for row in dbasis.rows],
            "depths": list(dbasis.depths),
        })
        return
    for j in range(1, len(basis) + 1):
        print(f"D(S{j}) = {dbasis.text(j)}")


def cmd_depth(cfg: RunConfig):
    basis = enumerate_ssyt(cfg.shape, cfg.content)
    dbasis = build_dbasis(basis, rcoeff_matrix(basis, cfg.threads))
    if cfg.output == "json":
        _emit({"format": config.JSON_FORMAT_VERSION, "depths": list(dbasis.depths)})
        return
    for j, d in enumerate(dbasis.depths, 1):
        print(f"S{j} {d}")


def cmd_bench(cfg: RunConfig):
    run = run_bench(cfg.shape, cfg.content, cfg.trials, cfg.seed, cfg.rewrite_cap, cfg.threads)
    if cfg.output == "json":
        _emit({
            "format": config.JSON_FORMAT_VERSION,
            "shape": list(run.shape.parts),
            "content": list(run.content.counts),
            "kostka": run.kostka,
            "seed": run.seed,
            "dbasis_ms": run.dbasis_ms,
            "closed_median_ms": run.closed_median_ms,
            "classical_median_ms": run.classical_median_ms,
            "median_steps": run.median_steps,
            "agreements": run.agreements,
            "trials": len(run.trials),
        })
    else:
        print(format_table(run))
    if cfg.save:
        save_run(run)
    if cfg.csv:
        export_to_csv(Path(cfg.csv))
    if run.agreements != len(run.trials):
        raise DisagreementError(
            f"Methods disagreed on {len(run.trials) - run.agreements} of {len(run.trials)} fillings"
        )


COMMANDS = {
    "ssyt": cmd_ssyt,
    "kostka": cmd_kostka,
    "rcoeff": cmd_rcoeff,
    "matrix": cmd_matrix,
    "straighten": cmd_straighten,
    "graph": cmd_graph,
    "dbasis": cmd_dbasis,
    "depth": cmd_depth,
    "bench": cmd_bench,
}


def build_parser():
    import argparse

    parser = argparse.ArgumentParser(
        description="Straighten fillings of Young diagrams via rearrangement coefficients"
    )
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    def with_shape(p, json_flag=True):
        p.add_argument("--shape", required=True, help="Partition, e.g. 4,3,2")
        p.add_argument("--content", required=True, help="Multiplicities of 1..n, e.g. 2,2,3,2")
        if json_flag:
            p.add_argument("--json", action="store_true", help="Output as JSON")
        return p

    with_shape(subparsers.add_parser("ssyt", help="List the semistandard tableaux S_1..S_K"))
    with_shape(subparsers.add_parser("kostka", help="Count the semistandard tableaux"))
    with_shape(subparsers.add_parser("matrix", help="Rearrangement matrix R[S_i, S_j]"))
    with_shape(subparsers.add_parser("dbasis", help="D-basis expansions"))
    with_shape(subparsers.add_parser("depth", help="D-basis depths"))

    rcoeff_parser = subparsers.add_parser("rcoeff", help="Rearrangement coefficient R[F, S]")
    rcoeff_parser.add_argument("fillings", nargs=2, metavar="FILE",
                               help="Files holding F and S (- for stdin)")
    rcoeff_parser.add_argument("--json", action="store_true", help="Output as JSON")

    straighten_parser = subparsers.add_parser("straighten", help="Straighten a filling")
    straighten_parser.add_argument("filling", metavar="FILE", help="Filling file (- for stdin)")
    straighten_parser.add_argument("--method", choices=METHODS, default=CLOSED,
                                   help="Straightening method (default: closed)")
    straighten_parser.add_argument("--verify", action="store_true",
                                   help="Cross-check against exact elimination")
    straighten_parser.add_argument("--json", action="store_true", help="Output as JSON")
    straighten_parser.add_argument("--path-cap", type=int, default=config.DEFAULT_PATH_CAP)
    straighten_parser.add_argument("--oracle-cap", type=int, default=config.DEFAULT_ORACLE_CAP)
    straighten_parser.add_argument("--rewrite-cap", type=int, default=config.DEFAULT_REWRITE_CAP)

    graph_parser = with_shape(subparsers.add_parser("graph", help="Coefficient graph"))
    graph_parser.add_argument("--dot", action="store_true", help="Output as DOT")
    graph_parser.add_argument("--filling", help="Mark V_F of this filling (filled nodes in DOT, listed otherwise)")

    bench_parser = with_shape(subparsers.add_parser("bench", help="Closed vs classical timings"))
    bench_parser.add_argument("--trials", type=int, default=100, help="Random fillings (default: 100)")
    bench_parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="Workload seed")
    bench_parser.add_argument("--save", action="store_true", help="Record the run in the history")
    bench_parser.add_argument("--csv", metavar="PATH", help="Export the run history to CSV")
    bench_parser.add_argument("--rewrite-cap", type=int, default=config.DEFAULT_REWRITE_CAP)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 0

    try:
        cfg = RunConfig.from_args(args)
        COMMANDS[cfg.command](cfg)
    except StraightError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
