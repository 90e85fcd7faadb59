"""Command-line entry point: ``sfnets generate | metrics | experiment``.

Exit status is 0 on success, 1 for invalid input, 2 for I/O failures.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .degrees import read_degree_sequence
from .generators import ALGORITHMS, GeneratorParams, generate, generate_ba
from .graph import EdgeListError, make_rng, read_edge_list, write_edge_list
from .harness import ExperimentConfig, format_value, load_config, run_experiment
from .metrics import full_record

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


def _csv_out(header, row) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerow([format_value(x) for x in row])


def cmd_generate(args) -> int:
    alg = args.algorithm.upper()
    rng = make_rng(args.seed)
    if alg == "BA":
        g, rep = generate_ba(GeneratorParams(args.n, args.m), rng)
    else:
        if args.degseq:
            targets = read_degree_sequence(args.degseq)
        else:
            # no sequence given: grow a BA network first and reuse its degrees
            targets = generate_ba(GeneratorParams(args.n, args.m), rng)[1].realized
        g, rep = generate(alg, rng, targets=targets)
    write_edge_list(g, args.out)
    _csv_out(
        ("algorithm", "n", "m", "seed", "edges", "target_sum", "realized_sum",
         "discarded_stubs", "rejected_pairs"),
        (alg, g.n, args.m, args.seed, g.edge_count, rep.target.total, rep.realized.total,
         rep.discarded_stubs, rep.rejected_pairs),
    )
    return EXIT_OK


def cmd_metrics(args) -> int:
    g = read_edge_list(args.graph)
    rec = full_record(g)
    _csv_out(
        ("n", "edges", "components", "giant_pct", "cc", "cpd", "ge", "r"),
        (rec.n, rec.edges, rec.components, rec.giant_pct, rec.cc, rec.cpd, rec.ge, rec.r),
    )
    if args.knn_out:
        with open(args.knn_out, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(("k", "knn_mean"))
            for k, v in sorted(rec.knn.items()):
                w.writerow((k, format_value(v)))
    return EXIT_OK


def cmd_experiment(args) -> int:
    overrides = {
        "n": args.n,
        "m_values": args.m_values,
        "replicates": args.replicates,
        "master_seed": args.seed,
        "algorithms": args.algorithms,
        "sequence_mode": args.mode,
        "model_b_order": args.model_b_order,
        "workers": args.workers,
        "output_dir": args.out_dir,
    }
    if args.config:
        cfg = load_config(args.config, **overrides)
    else:
        cfg = ExperimentConfig(**{k: v for k, v in overrides.items() if v is not None})
    if cfg.output_dir is None:
        raise ValueError("an output directory is required (--out-dir or out_dir in the config)")
    run_experiment(cfg)
    print((Path(cfg.output_dir) / "table1.txt").read_text(), end="")
    return EXIT_OK


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _name_list(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sfnets", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build one network and write its edge list")
    g.add_argument("--algorithm", required=True, type=str.lower,
                   choices=[a.lower() for a in ALGORITHMS])
    g.add_argument("--n", type=int, default=1000)
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--degseq", help="target degree file (one integer per line)")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_generate)

    mt = sub.add_parser("metrics", help="structural measures of an edge-list file")
    mt.add_argument("--graph", required=True)
    mt.add_argument("--knn-out")
    mt.set_defaults(func=cmd_metrics)

    e = sub.add_parser("experiment", help="run the replicated comparison")
    e.add_argument("--config")
    e.add_argument("--n", type=int)
    e.add_argument("--m-values", type=_int_list)
    e.add_argument("--replicates", type=int)
    e.add_argument("--seed", type=int)
    e.add_argument("--algorithms", type=_name_list)
    e.add_argument("--mode", choices=["exact", "resample"])
    e.add_argument("--model-b-order", choices=["descending", "random"])
    e.add_argument("--workers", type=int)
    e.add_argument("--out-dir")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except (EdgeListError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
