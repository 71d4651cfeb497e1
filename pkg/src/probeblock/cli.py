"""Command-line front end.

Subcommands: `check` (recognition with certificates), `witness` (forbidden
induced pattern search), `enhance` (forced-edge closure of a partition),
`generate` (instances), `oracle` (brute-force verdicts), `bench` (timing
CSV), `pattern` (catalog dump).

Exit codes: 0 for a "yes" verdict, 1 for a "no" verdict, 2 for usage or
input errors.  `--json` switches reports to a machine-readable object with
the same content; a "yes" report carries n1/n2/added_edges, a "no" report
carries a refutation {stage, detail}.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .gen import GenSpec, plant, random_block_graph, random_graph
from .graphs import Graph, ParseError, parse_graph, to_edge_list, to_graph6
from .oracle import OracleSizeError, WITNESS_FAMILIES, brute_kprobe, forbidden_witness
from .patterns import pattern as get_pattern
from .probe import (Refutation, dump_partition, enhanced_graph, load_partition,
                    recognize_2probe_block, recognize_2probe_complete,
                    recognize_probe_block, verify_partitioned)
from .structure import complete_split, is_block_graph

CHECK_CLASSES = ("block", "complete-split", "2probe-complete", "probe-block", "2probe-block")
ORACLE_CLASSES = CHECK_CLASSES + ("probe-complete",)


class UsageError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    p = Path(path)
    if p.suffix == ".el":
        fmt = "edge-list"
    elif p.suffix == ".g6":
        fmt = "graph6"
    else:
        raise UsageError(f"cannot sniff graph format of {path!r}: use .el or .g6")
    try:
        text = p.read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path!r}: {e}") from None
    try:
        return parse_graph(text, fmt)
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _load_partition_file(path: str) -> tuple[frozenset, frozenset]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path!r}: {e}") from None
    try:
        return load_partition(text)
    except (ValueError, json.JSONDecodeError) as e:
        raise UsageError(f"{path}: {e}") from None


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if key in ("n1", "n2"):
            print(f"{key.upper()}: {' '.join(map(str, value))}")
        elif key == "added_edges":
            pairs = " ".join(f"({u},{v})" for u, v in value)
            print(f"added edges ({len(value)}): {pairs}")
        elif key == "refutation":
            print(f"refutation: {json.dumps(value)}")
        elif key == "timing":
            print("timing: " + " ".join(f"{k}={v:.3f}ms" for k, v in value.items()))
        else:
            print(f"{key}: {value}")


def _outcome_report(cls: str, g: Graph, outcome) -> tuple[dict, int]:
    report: dict = {"class": cls, "n": g.n, "m": g.m, "verdict": outcome.verdict}
    if outcome.verdict == "yes":
        report["n1"] = sorted(outcome.partition.n1)
        report["n2"] = sorted(outcome.partition.n2)
        report["added_edges"] = [[int(u), int(v)] for u, v in outcome.embedding.added_array]
        code = 0
    else:
        report["refutation"] = outcome.refutation.to_json()
        code = 1
    if outcome.timings:
        report["timing"] = outcome.timings
    return report, code


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    cls = args.cls
    if args.partition is not None:
        if cls in ("block", "complete-split"):
            raise UsageError(f"--partition is not meaningful for class {cls!r}")
        n1, n2 = _load_partition_file(args.partition)
        if cls == "probe-block":
            if n2:
                raise UsageError("class probe-block takes a partition with empty N2")
            outcome = verify_partitioned(g, n1, (), target="block")
        elif cls == "2probe-block":
            outcome = verify_partitioned(g, n1, n2, target="block")
        else:
            outcome = verify_partitioned(g, n1, n2, target="complete")
        report, code = _outcome_report(cls, g, outcome)
        _emit(report, args.json)
        return code
    if cls == "block":
        res = is_block_graph(g)
        if res:
            report = {"class": cls, "n": g.n, "m": g.m, "verdict": "yes",
                      "n1": [], "n2": [], "added_edges": []}
            code = 0
        else:
            refu = Refutation(stage="block-clique", pair=res.witness, block=res.block)
            report = {"class": cls, "n": g.n, "m": g.m, "verdict": "no",
                      "refutation": refu.to_json()}
            code = 1
        _emit(report, args.json)
        return code
    if cls == "complete-split":
        res = complete_split(g)
        if res:
            outcome = verify_partitioned(g, sorted(res.independent), (), target="complete")
            report, code = _outcome_report(cls, g, outcome)
        else:
            refu = Refutation(stage="complete-split", tag=res.pattern,
                              detail={"vertices": list(res.vertices)})
            report = {"class": cls, "n": g.n, "m": g.m, "verdict": "no",
                      "refutation": refu.to_json()}
            code = 1
        _emit(report, args.json)
        return code
    recognizer = {"2probe-complete": recognize_2probe_complete,
                  "probe-block": recognize_probe_block,
                  "2probe-block": recognize_2probe_block}[cls]
    report, code = _outcome_report(cls, g, recognizer(g))
    _emit(report, args.json)
    return code


def _cmd_witness(args) -> int:
    g = _load_graph(args.graph)
    try:
        hit = forbidden_witness(g, args.family, max_n=args.max_n)
    except OracleSizeError as e:
        raise UsageError(str(e)) from None
    if hit is None:
        _emit({"family": args.family, "verdict": "no"}, args.json)
        return 1
    name, mapping = hit
    _emit({"family": args.family, "verdict": "yes", "pattern": name,
           "mapping": list(mapping)}, args.json)
    return 0


def _cmd_enhance(args) -> int:
    g = _load_graph(args.graph)
    n1, n2 = _load_partition_file(args.partition)
    mode = "diamond" if args.mode == "diamond" else "diamond-c4"
    try:
        emb = enhanced_graph(g, n1, n2, mode=mode)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit({"mode": mode, "n": g.n, "m": g.m, "verdict": "yes",
           "n1": sorted(n1), "n2": sorted(n2),
           "added_edges": [[int(u), int(v)] for u, v in emb.added_array]},
          args.json)
    return 0


def _cmd_generate(args) -> int:
    spec = GenSpec(n=args.n, seed=args.seed, max_block=args.max_block,
                   blocks_per_cut=args.blocks_per_cut, draft_frac=args.draft_frac)
    partition_text = None
    if args.kind == "block":
        g = random_block_graph(spec)
    elif args.kind in ("plant1", "plant2"):
        g, part = plant(1 if args.kind == "plant1" else 2, spec)
        partition_text = dump_partition(part.n1, part.n2)
    else:
        if args.p is None:
            raise UsageError("--kind gnp requires --p")
        g = random_graph(args.n, args.p, args.seed)
    text = to_graph6(g) + "\n" if args.format == "g6" else to_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if partition_text is not None:
        if not args.partition_out:
            raise UsageError(f"--kind {args.kind} requires --partition-out")
        Path(args.partition_out).write_text(partition_text)
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    cls = args.cls
    try:
        if cls == "block":
            res = is_block_graph(g)
            report = {"class": cls, "verdict": "yes" if res else "no"}
            code = 0 if res else 1
        elif cls == "complete-split":
            res = complete_split(g)
            report = {"class": cls, "verdict": "yes" if res else "no"}
            code = 0 if res else 1
        else:
            k, target = {"probe-block": (1, "block"), "2probe-block": (2, "block"),
                         "2probe-complete": (2, "complete"),
                         "probe-complete": (1, "complete")}[cls]
            outcome = brute_kprobe(g, k, target, max_n=args.max_n)
            report, code = _outcome_report(cls, g, outcome)
    except OracleSizeError as e:
        raise UsageError(str(e)) from None
    _emit(report, args.json)
    return code


def _cmd_bench(args) -> int:
    sizes = []
    for tok in args.sizes.split(","):
        tok = tok.strip()
        if tok:
            sizes.append(int(float(tok)))
    if not sizes:
        raise UsageError("--sizes must list at least one size")
    # warm the JIT path outside the timed region
    wg, _ = plant(2, GenSpec(n=1000, seed=args.seed))
    recognize_2probe_block(wg)
    print("n,m,millis,verdict")
    for i, size in enumerate(sizes):
        g, _ = plant(2, GenSpec(n=size, seed=args.seed + i + 1))
        best = float("inf")
        verdict = "?"
        for _ in range(args.repeats):
            fresh = Graph._from_canonical(g.n, g.edge_array)
            t0 = time.perf_counter()
            out = recognize_2probe_block(fresh)
            best = min(best, (time.perf_counter() - t0) * 1e3)
            verdict = out.verdict
        print(f"{g.n},{g.m},{best:.3f},{verdict}")
    return 0


def _cmd_pattern(args) -> int:
    try:
        g = get_pattern(args.name)
    except KeyError as e:
        raise UsageError(str(e)) from None
    text = to_graph6(g) + "\n" if args.format == "g6" else to_edge_list(g)
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="probeblock",
                                 description="probe block / probe complete graph recognition")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="recognize a graph, emitting a certificate")
    c.add_argument("--class", dest="cls", required=True, choices=CHECK_CLASSES)
    c.add_argument("--partition", help="JSON partition file for the partitioned variants")
    c.add_argument("--json", action="store_true")
    c.add_argument("graph")
    c.set_defaults(func=_cmd_check)

    w = sub.add_parser("witness", help="find a forbidden induced pattern")
    w.add_argument("--family", required=True, choices=WITNESS_FAMILIES)
    w.add_argument("--max-n", type=int, default=16)
    w.add_argument("--json", action="store_true")
    w.add_argument("graph")
    w.set_defaults(func=_cmd_witness)

    e = sub.add_parser("enhance", help="forced-edge closure of a partition")
    e.add_argument("--mode", choices=("diamond", "diamond-c4"), default="diamond-c4")
    e.add_argument("--partition", required=True)
    e.add_argument("--json", action="store_true")
    e.add_argument("graph")
    e.set_defaults(func=_cmd_enhance)

    g = sub.add_parser("generate", help="generate instances")
    g.add_argument("--kind", required=True, choices=("block", "plant1", "plant2", "gnp"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--p", type=float)
    g.add_argument("--max-block", type=int, default=6)
    g.add_argument("--blocks-per-cut", type=float, default=2.0)
    g.add_argument("--draft-frac", type=float, default=0.5)
    g.add_argument("--format", choices=("el", "g6"), default="el")
    g.add_argument("--out")
    g.add_argument("--partition-out")
    g.set_defaults(func=_cmd_generate)

    o = sub.add_parser("oracle", help="brute-force verdict (desk scale)")
    o.add_argument("--class", dest="cls", required=True, choices=ORACLE_CLASSES)
    o.add_argument("--max-n", type=int, default=12)
    o.add_argument("--json", action="store_true")
    o.add_argument("graph")
    o.set_defaults(func=_cmd_oracle)

    b = sub.add_parser("bench", help="time recognition on planted instances (CSV)")
    b.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=int, default=2)
    b.set_defaults(func=_cmd_bench)

    p = sub.add_parser("pattern", help="emit a catalog pattern")
    p.add_argument("--name", required=True)
    p.add_argument("--format", choices=("el", "g6"), default="el")
    p.set_defaults(func=_cmd_pattern)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
