"""Command-line front end.

Subcommands: spectrum | classify | generate | compose | simulate.
Reports go to standard output as JSON; diagnostics go to standard
error.  CSV trajectories and figure files are written only when an
explicit output path is given.  Exit codes: 0 success, 2 parse error,
3 validation error, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .classifier import check_lemma2, check_theorem1, classify
from .consensus import SimConfig, simulate, write_trajectory_csv
from .graph import Digraph, build_digraph, laplacian
from .io import GraphFormatError, graph_to_text, load_cross_edges, load_graph, write_graph
from .multilayer import (
    augmented_first_block,
    build_dcid,
    build_udcec,
    compose,
    corollary2_applies,
    corollary3_applies,
)
from .spectra import DEFAULT_REALNESS_TOL, SpectralReport, eigenvalues

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NUMERICAL = 4

BASE_PRESETS = {
    "single_node": lambda: build_digraph(1, []),
    "two_node_complete": lambda: build_digraph(2, [(1, 2, 1.0), (2, 1, 1.0)]),
}


def _report(command: str, g: Digraph, payload: dict) -> dict:
    return {
        "command": command,
        "input": {"n": g.n, "edges": g.edge_count},
        "payload": payload,
        "version": __version__,
    }


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    report = SpectralReport.from_matrix(laplacian(g), args.tolerance)
    if args.plot:
        from .plotting import plot_spectrum

        plot_spectrum(report.eigenvalues, args.plot)
    _emit(_report("spectrum", g, report.to_dict()))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    verdict = classify(g, with_numerics=args.numeric)
    payload = verdict.to_dict()
    payload["lemma2_holds"] = check_lemma2(g)
    _emit(_report("classify", g, payload))
    return EXIT_OK


def _load_base(spec: str) -> Digraph:
    if Path(spec).exists():
        return load_graph(spec)
    if spec in BASE_PRESETS:
        return BASE_PRESETS[spec]()
    raise ValueError(
        f"base {spec!r} is neither a file nor one of {sorted(BASE_PRESETS)}")


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "cycle":
        if args.n is None:
            raise ValueError("cycle generation requires -n")
        if args.n < 3:
            raise ValueError("a directed cycle needs at least 3 nodes")
        edges = [(k, k % args.n + 1, 1.0) for k in range(1, args.n + 1)]
        g = build_digraph(args.n, edges)
    elif args.kind == "udcec":
        if args.n is None or args.m is None:
            raise ValueError("udcec generation requires -n and -m")
        g = build_udcec(args.n, args.m)
    else:  # dcid
        if args.m is None or args.base is None:
            raise ValueError("dcid generation requires -m and --base")
        g = build_dcid(_load_base(args.base), args.m).result
    if args.out:
        write_graph(g, args.out)
    else:
        sys.stdout.write(graph_to_text(g))
    return EXIT_OK


def cmd_compose(args: argparse.Namespace) -> int:
    g1 = load_graph(args.g1)
    g2 = load_graph(args.g2)
    e12, e21 = load_cross_edges(args.cross)
    c = compose(g1, g2, e12, e21)
    if args.out:
        write_graph(c.result, args.out)
    spec_g2 = SpectralReport.from_matrix(laplacian(g2))
    if check_theorem1(g2).holds:
        g2_realness = "certified"  # structural guarantee, not just numerics
    else:
        g2_realness = "numerical" if spec_g2.is_real else "complex"
    payload = {
        "corollary2": corollary2_applies(c),
        "corollary3": corollary3_applies(c),
        "g2_realness": g2_realness,
        "spectrum_first_block": SpectralReport.from_matrix(
            laplacian(augmented_first_block(c))).to_dict(),
        "spectrum_g2": spec_g2.to_dict(),
        "spectrum_composed": SpectralReport.from_matrix(laplacian(c.result)).to_dict(),
    }
    _emit(_report("compose", c.result, payload))
    return EXIT_OK


def _initial_state(args: argparse.Namespace, n: int) -> np.ndarray:
    if args.x0:
        values = [float(tok) for tok in Path(args.x0).read_text().split()]
        return np.asarray(values)
    rng = np.random.default_rng(args.seed)
    return rng.uniform(-1.0, 1.0, size=n)


def cmd_simulate(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    cfg = SimConfig(
        tau=args.tau,
        x0=_initial_state(args, g.n),
        step=args.step,
        t_max=args.tmax,
        threshold=args.threshold,
    )
    result = simulate(g, cfg)
    if args.out:
        write_trajectory_csv(result, args.out)
    if args.plot:
        from .plotting import plot_trajectory

        plot_trajectory(result, args.plot, title=f"tau={args.tau}")
    _emit(_report("simulate", g, result.to_summary()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digraph-spectra",
        description="Spectral analysis of directed-graph Laplacians.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues and realness of a graph file")
    p.add_argument("graph")
    p.add_argument("--tolerance", type=float, default=DEFAULT_REALNESS_TOL)
    p.add_argument("--plot", metavar="FIG", help="write a complex-plane figure")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="structural realness classification")
    p.add_argument("graph")
    p.add_argument("--numeric", action="store_true",
                   help="attach a numerical spectrum to the verdict")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="build cycle / udcec / dcid instances")
    p.add_argument("kind", choices=["cycle", "udcec", "dcid"])
    p.add_argument("-n", type=int, help="node count (cycle, udcec)")
    p.add_argument("-m", type=int, help="cycle length (udcec) or layer count (dcid)")
    p.add_argument("--base", help="base graph file or preset name (dcid)")
    p.add_argument("-o", "--out", help="output graph file ('.json' for JSON form)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compose", help="join two graphs with cross edges")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("cross", help="cross-edge file with e12/e21 sections")
    p.add_argument("-o", "--out", help="write the composed graph here")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("simulate", help="delayed consensus simulation")
    p.add_argument("graph")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--tmax", type=float, default=20.0)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--threshold", type=float, default=1e-3)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--x0", help="file of whitespace-separated initial values")
    group.add_argument("--seed", type=int, default=0,
                       help="seed for uniform random initial values in [-1, 1]")
    p.add_argument("--out", metavar="CSV", help="write the trajectory CSV here")
    p.add_argument("--plot", metavar="FIG", help="write a trajectory figure")
    p.set_defaults(func=cmd_simulate)
    return parser


def _error(kind: str, message: str, line: int | None = None) -> None:
    obj: dict = {"error": {"kind": kind, "message": message}}
    if line is not None:
        obj["error"]["line"] = line
    json.dump(obj, sys.stderr)
    sys.stderr.write("\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        _error("parse", str(exc), exc.line)
        return EXIT_PARSE
    except (ValueError, OSError) as exc:
        _error("validation", str(exc))
        return EXIT_VALIDATION
    except np.linalg.LinAlgError as exc:
        _error("numerical", str(exc))
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
