"""Command line interface.

Subcommands: ``greedy`` (2-approximation with certificate), ``exact``
(brute-force oracles), ``embed`` (build or verify a rotation-system
embedding), ``gen`` (graph generators), ``bench`` (scaling harness).

Exit codes: 0 success, 1 unreadable input or output, 2 invalid or
disconnected graph (also argparse usage errors), 3 edge-list or rotation
parse error, 4 exact-oracle limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, replace

from . import __version__
from .bench import BenchConfig, format_summary, run_bench, run_pipeline, summarize
from .embedding import RotationSystem, build_embedding, genus_of, trace_faces
from .generators import FAMILIES, GeneratorSpec
from .graph import (
    DisconnectedError,
    GraphError,
    MultiGraph,
    ParseError,
    format_edge_list,
    parse_edge_list,
)
from .greedy import POLICIES
from .oracle import (
    LimitExceededError,
    exact_max_genus_pairs,
    exact_max_genus_rotations,
    xuong_max_genus,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_LIMIT = 4


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_graph(path: str | None) -> MultiGraph:
    return parse_edge_list(_read_text(path))


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", default=None, metavar="FILE",
                   help="edge-list file, '-' or absent for stdin")


def _add_greedy_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=("dfs", "dynamic"), default="dfs")
    p.add_argument("--policy", choices=POLICIES, default="edge-id")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--raw", action="store_true",
                   help="skip the parallel/loop preprocessing pass")


def cmd_greedy(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    out = run_pipeline(
        g, label=args.graph or "stdin", backend=args.backend,
        policy=args.policy, seed=args.seed, preprocess=not args.raw,
    )
    rep = out.report
    if args.embed:
        emb = build_embedding(g, out.pairs, check=args.check)
        rep = replace(rep, embedding_genus=emb.genus)
    if args.json:
        print(rep.to_json())
        return EXIT_OK
    inst = rep.instance
    print(f"n={inst.n_vertices} m={inst.n_edges} beta={inst.cycle_rank}")
    print(f"pairs: {rep.lower} ({rep.preprocess_pairs} preprocessed + "
          f"{rep.lower - rep.preprocess_pairs} greedy)")
    print(f"gamma_M in [{rep.lower}, {rep.upper}]")
    if rep.lower <= 20:
        for e, f, w in rep.pairs:
            print(f"  pair {e},{f} at {w}")
    else:
        print("  (certificate elided; use --json for the pair list)")
    if rep.embedding_genus is not None:
        print(f"embedding genus: {rep.embedding_genus}")
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    methods = (("pairs", "xuong", "rotations")
               if args.method == "all" else (args.method,))
    values: dict[str, int] = {}
    skipped: dict[str, str] = {}
    for name in methods:
        try:
            if name == "pairs":
                k, _ = exact_max_genus_pairs(g, max_edges=args.max_edges)
                values[name] = k
            elif name == "xuong":
                genus, cert = xuong_max_genus(g, limit=args.tree_limit)
                values[name] = genus
            else:
                values[name] = exact_max_genus_rotations(
                    g, limit=args.rotation_limit)
        except LimitExceededError as exc:
            if args.method != "all":
                raise
            skipped[name] = str(exc)
    for name in methods:
        if name in values:
            print(f"method={name} gamma_M={values[name]}")
        else:
            print(f"method={name} skipped: {skipped[name]}")
    if not values:
        raise LimitExceededError("all exact methods exceeded their limits")
    distinct = set(values.values())
    assert len(distinct) == 1, f"oracle disagreement: {values}"
    print(f"gamma_M = {distinct.pop()}")
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.rotation is not None:
        rot = RotationSystem.from_text(_read_text(args.rotation))
        genus = genus_of(g, rot)
        faces = trace_faces(g, rot)
        print(f"genus={genus} faces={len(faces)} "
              f"sizes={','.join(map(str, faces.sizes()))}")
        return EXIT_OK
    out = run_pipeline(
        g, label=args.graph or "stdin", backend=args.backend,
        policy=args.policy, seed=args.seed, preprocess=not args.raw,
    )
    emb = build_embedding(g, out.pairs, check=args.check)
    sys.stdout.write(emb.rotation.to_text())
    print(f"certified pairs={emb.pairs_used} genus={emb.genus} "
          f"faces={emb.n_faces}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GeneratorSpec(
        family=args.family, n=args.n, m=args.m, k=args.k, seed=args.seed,
        loop_prob=args.loop_prob, parallel_prob=args.parallel_prob,
    )
    text = format_edge_list(spec.build())
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = BenchConfig.parse(_read_text(args.config))
    reports = run_bench(cfg, jobs=args.jobs)
    if args.json:
        payload = json.dumps([asdict(r) for r in reports], indent=2,
                             sort_keys=True)
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    print(format_summary(summarize(reports)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maxgenus",
        description="2-approximate maximum genus of connected multigraphs "
                    "with certified embeddings and exact oracles.",
    )
    ap.add_argument("--version", action="version",
                    version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("greedy", help="greedy 2-approximation with bounds")
    _add_graph_arg(p)
    _add_greedy_opts(p)
    p.add_argument("--embed", action="store_true",
                   help="also build a certifying embedding")
    p.add_argument("--check", action="store_true",
                   help="audit embedding invariants at every step")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("exact", help="exact maximum genus (small graphs)")
    _add_graph_arg(p)
    p.add_argument("--method", choices=("pairs", "xuong", "rotations", "all"),
                   default="all")
    p.add_argument("--max-edges", type=int, default=16,
                   help="edge limit for the pair search")
    p.add_argument("--tree-limit", type=int, default=100_000,
                   help="spanning-tree enumeration limit")
    p.add_argument("--rotation-limit", type=int, default=1_000_000,
                   help="rotation-system enumeration limit")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser(
        "embed",
        help="emit a certifying rotation system, or verify one",
    )
    _add_graph_arg(p)
    _add_greedy_opts(p)
    p.add_argument("--rotation", metavar="FILE",
                   help="verify this rotation instead of building one")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("gen", help="generate an edge list")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("-n", type=int, default=None,
                   help="size for tight-star/random/complete")
    p.add_argument("-m", type=int, default=None, help="edges for random")
    p.add_argument("-k", type=int, default=None,
                   help="size for bouquet/dipole")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--loop-prob", type=float, default=0.15)
    p.add_argument("--parallel-prob", type=float, default=0.15)
    p.add_argument("-o", "--output", default=None, metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a benchmark config")
    p.add_argument("config", metavar="CONFIG")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (overrides the config)")
    p.add_argument("--json", metavar="FILE",
                   help="also dump all reports as JSON")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
