"""Command-line front end.

Subcommands:

* ``spectrum``: print the certified radius enclosure of one graph.
* ``certify``: run the certification pipeline; exit code encodes the outcome
  (0 certified/exact-yes, 1 exact-no/exceptional-confirmed/not-connected,
  2 inconclusive or unconfirmed-exceptional, 3 timeout, 4 input error).
* ``family``: emit family hosts or enumerated members as graph6 lines, with
  an optional JSON sidecar describing the partitions.
* ``verify``: run one named verification suite and print its stable report.
* ``hunt``: random/exhaustive certifier-vs-oracle consistency search.

Input graphs are read from a file (or stdin with ``-``); the format is
sniffed from the first line: ``"n m"`` headers select the edge-list reader,
anything else is treated as graph6.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certifier import CertifyConfig, certify, explain
from .errors import HamqError, ParseError
from .families import build_S, build_T, enumerate_class
from .graph import Graph, emit_graph6, parse_edgelist, parse_graph6
from .spectral import perron_pair, upper_bound_edge_count
from .verify import SUITES, run_hunt, run_suite

EXIT_INPUT_ERROR = 4


def _read_graph(source: str) -> Graph:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input", 0)
    first = stripped.splitlines()[0].split()
    if len(first) == 2 and all(p.isdigit() for p in first):
        return parse_edgelist(text)
    return parse_graph6(stripped.splitlines()[0])


def _cmd_spectrum(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    est = perron_pair(g, tol=args.tol)
    bound = upper_bound_edge_count(g)
    print(f"n = {g.n}  m = {g.m}")
    print(f"q_hat    = {est.q_hat!r}")
    print(f"interval = [{est.lo!r}, {est.hi!r}]  (width {est.width:.3e})")
    print(f"residual = {est.residual:.3e}  iterations = {est.iterations}"
          f"  converged = {est.converged}")
    print(f"edge-count upper bound 2m/(n-1)+n-2 = {bound} = {float(bound)!r}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    cfg = CertifyConfig(oracle_gate=args.oracle_gate, pair_budget=args.budget)
    cert = certify(g, cfg)
    if args.json:
        print(json.dumps(explain(cert), sort_keys=True))
    else:
        print(f"outcome: {cert.outcome}")
        if cert.fired_condition:
            print(f"fired:   {cert.fired_condition}")
        for entry in cert.trace:
            k = f" k={entry['k']}" if "k" in entry else ""
            print(f"  {entry['condition']}{k}: {entry['verdict']}")
    return cert.exit_code()


def _cmd_family(args: argparse.Namespace) -> int:
    out = sys.stdout if args.out is None else open(args.out, "w")
    sidecars = []
    try:
        if args.clazz is None:
            handle = (build_S if args.kind == "S" else build_T)(args.n, args.k)
            members = [handle]
        else:
            members = enumerate_class(
                args.clazz, args.n, args.k,
                mode=args.mode, seed=args.seed, count=args.count,
            )
        count = 0
        for handle in members:
            print(emit_graph6(handle.graph), file=out)
            count += 1
            if args.sidecar:
                sidecars.append(handle.sidecar())
    finally:
        if out is not sys.stdout:
            out.close()
    if args.sidecar:
        Path(args.sidecar).write_text(json.dumps(sidecars, sort_keys=True))
    print(f"emitted {count} member(s)", file=sys.stderr)
    return 0


def _parse_int_list(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",") if p]


def _cmd_verify(args: argparse.Namespace) -> int:
    params: dict = {}
    if args.suite in ("appendix",):
        if args.k:
            params["k_values"] = _parse_int_list(args.k)
    elif args.suite in ("corollary", "family-nonhc"):
        if args.k:
            params["k_values"] = _parse_int_list(args.k)
        if args.n:
            params["n_values"] = _parse_int_list(args.n)
    elif args.suite in ("q-lower", "q-upper"):
        if args.k and args.n:
            mode = args.mode or "exhaustive"
            count = args.count or 0
            params["cases"] = [
                (k, n, mode, count)
                for k in _parse_int_list(args.k)
                for n in _parse_int_list(args.n)
            ]
        if args.seed is not None:
            params["seed"] = args.seed
    elif args.suite in ("ore",):
        if args.trials is not None:
            params["trials"] = args.trials
        if args.seed is not None:
            params["seed"] = args.seed
    elif args.suite in ("kelmans", "qbound"):
        if args.count is not None:
            params["count"] = args.count
        if args.seed is not None:
            params["seed"] = args.seed
    elif args.suite in ("closure",):
        if args.count is not None:
            params["random_per_n"] = args.count
        if args.seed is not None:
            params["seed"] = args.seed
    report = run_suite(args.suite, **params)
    print(report.to_stable_json())
    print(f"suite {report.suite}: {report.cases} cases, "
          f"{len(report.failures)} failure(s), {report.elapsed:.1f}s",
          file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_hunt(args: argparse.Namespace) -> int:
    trials: int | str = args.trials
    if isinstance(trials, str) and trials != "exhaustive":
        trials = int(trials)
    model = args.model
    if trials == "exhaustive" and model != "all-connected":
        model = "all-connected"
    report = run_hunt(n=args.n, trials=trials, seed=args.seed, model=model)
    print(report.to_stable_json())
    print(f"hunt: {report.cases} cases, {len(report.failures)} disagreement(s), "
          f"{report.elapsed:.1f}s", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamq",
        description="Hamilton-connectivity certification via signless "
        "Laplacian spectral conditions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="certified radius enclosure of a graph")
    p.add_argument("input", help="graph file (graph6 or edge list), - for stdin")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("certify", help="run the certification pipeline")
    p.add_argument("input", help="graph file (graph6 or edge list), - for stdin")
    p.add_argument("--oracle-gate", type=int, default=9,
                   help="run the exact oracle only when n <= gate")
    p.add_argument("--budget", type=int, default=10**8,
                   help="node-expansion budget per path search")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("family", help="emit family hosts or class members")
    p.add_argument("kind", choices=["S", "T"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="clazz", choices=["S1", "T1", "S2", "T2"])
    p.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p.add_argument("--out", help="write graph6 lines here instead of stdout")
    p.add_argument("--sidecar", help="write a JSON partition sidecar here")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--k", help="k values: '3' or '2,3' or '2..12'")
    p.add_argument("--n", help="n values: same syntax as --k")
    p.add_argument("--mode", choices=["exhaustive", "sample"])
    p.add_argument("--count", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hunt", help="certifier-vs-oracle consistency search")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--trials", default="10000",
                   help="integer, or 'exhaustive' for the all-connected model")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--model", default="gnp(0.5)",
                   help="gnp(p) | gnm(m) | dense-above-edge-threshold(k=K) "
                   "| all-connected")
    p.set_defaults(func=_cmd_hunt)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HamqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
