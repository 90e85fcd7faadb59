"""
Replicated comparison of the five generators.

For every replicate a fresh BA network is grown; its degree sequence feeds the
other four generators, so within one replicate all five graphs share the same
degree distribution. Each ``(algorithm, m, replicate)`` cell has its own seed,
derived from the master seed, so any single cell can be replayed alone.
"""

from __future__ import annotations

import configparser
import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

import numpy as np

from . import __version__
from .degrees import degrees_of, distribution_from_sequence, sample_sequence
from .generators import ALGORITHMS, GeneratorParams, generate, generate_ba
from .graph import make_rng
from .metrics import full_record

__all__ = [
    "ExperimentConfig",
    "Summary",
    "SummaryTable",
    "CellResult",
    "GEClass",
    "CPDClass",
    "cell_seed",
    "run_cell",
    "run_replicates",
    "run_experiment",
    "summarize",
    "summarize_cells",
    "classify_ge",
    "classify_cpd",
    "emit_table1",
    "load_config",
]

REPLICATE_FIELDS = (
    "algorithm", "m", "replicate", "seed", "n", "edges",
    "components", "giant_pct", "cc", "cpd", "ge", "r",
)
METRIC_FIELDS = ("edges", "components", "giant_pct", "cc", "cpd", "ge", "r")
QUARTILE_RULE = "numpy.percentile(method='linear') at 25/50/75; None values excluded"

_ALG_CODE = {name: i for i, name in enumerate(ALGORITHMS)}


@dataclass(frozen=True)
class ExperimentConfig:
    n: int = 1000
    m_values: tuple[int, ...] = (1, 2)
    replicates: int = 100
    algorithms: tuple[str, ...] = ALGORITHMS
    master_seed: int = 2013
    sequence_mode: str = "exact"
    model_b_order: str = "descending"
    workers: int = 1
    output_dir: str | None = None

    def __post_init__(self):
        algs = tuple(a.upper() for a in self.algorithms)
        bad = [a for a in algs if a not in _ALG_CODE]
        if bad:
            raise ValueError(f"unknown algorithm(s) {bad}; choose from {list(ALGORITHMS)}")
        if not algs:
            raise ValueError("at least one algorithm is required")
        object.__setattr__(self, "algorithms", tuple(sorted(set(algs), key=_ALG_CODE.get)))
        object.__setattr__(self, "m_values", tuple(sorted(set(int(m) for m in self.m_values))))
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        if not self.m_values or any(not 1 <= m < self.n for m in self.m_values):
            raise ValueError(f"every m must satisfy 1 <= m < n={self.n}")
        if self.sequence_mode not in ("exact", "resample"):
            raise ValueError("sequence_mode must be 'exact' or 'resample'")
        if self.model_b_order not in ("descending", "random"):
            raise ValueError("model_b_order must be 'descending' or 'random'")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def cells(self):
        for alg in self.algorithms:
            for m in self.m_values:
                for rep in range(self.replicates):
                    yield alg, m, rep

    def echo(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__ if k not in ("workers", "output_dir")}
        d["m_values"] = list(self.m_values)
        d["algorithms"] = list(self.algorithms)
        return d


def cell_seed(master_seed: int, algorithm: str, m: int, replicate: int) -> int:
    """64-bit seed for one cell, a pure function of its coordinates."""
    ss = np.random.SeedSequence([master_seed, _ALG_CODE[algorithm.upper()], m, replicate])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass
class CellResult:
    algorithm: str
    m: int
    replicate: int
    seed: int
    row: dict
    knn: dict[int, float]
    discarded_stubs: int
    rejected_pairs: int


def run_cell(cfg: ExperimentConfig, algorithm: str, m: int, replicate: int) -> CellResult:
    algorithm = algorithm.upper()
    base_seed = cell_seed(cfg.master_seed, "BA", m, replicate)
    ba, report = generate_ba(GeneratorParams(cfg.n, m), make_rng(base_seed))
    seed = cell_seed(cfg.master_seed, algorithm, m, replicate)
    if algorithm == "BA":
        g = ba
    else:
        rng = make_rng(seed)
        targets = degrees_of(ba)
        if cfg.sequence_mode == "resample":
            targets = sample_sequence(distribution_from_sequence(targets), cfg.n, rng)
        extra = {"order": cfg.model_b_order} if algorithm == "MB" else {}
        g, report = generate(algorithm, rng, targets=targets, **extra)
    rec = full_record(g)
    row = {
        "algorithm": algorithm, "m": m, "replicate": replicate, "seed": seed,
        "n": rec.n, "edges": rec.edges, "components": rec.components,
        "giant_pct": rec.giant_pct, "cc": rec.cc, "cpd": rec.cpd, "ge": rec.ge, "r": rec.r,
    }
    return CellResult(algorithm, m, replicate, seed, row, rec.knn,
                      report.discarded_stubs, report.rejected_pairs)


def _run_cell_args(args):
    return run_cell(*args)


def run_replicates(cfg: ExperimentConfig) -> list[CellResult]:
    """Run every cell; the result order is fixed regardless of ``cfg.workers``."""
    work = [(cfg, alg, m, rep) for alg, m, rep in cfg.cells()]
    if cfg.workers == 1:
        results = [_run_cell_args(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_run_cell_args, work, chunksize=4))
    results.sort(key=lambda c: (_ALG_CODE[c.algorithm], c.m, c.replicate))
    return results


@dataclass(frozen=True)
class Summary:
    mean: float | None
    median: float | None
    q1: float | None
    q3: float | None
    count: int
    excluded: int


def summarize(values) -> Summary:
    """Mean, median and quartiles of ``values``, skipping ``None`` entries."""
    values = list(values)
    if not values:
        raise ValueError("summarize needs at least one value")
    kept = np.array([v for v in values if v is not None and not _isnan(v)], dtype=np.float64)
    excluded = len(values) - kept.size
    if kept.size == 0:
        return Summary(None, None, None, None, 0, excluded)
    q1, med, q3 = np.percentile(kept, [25, 50, 75], method="linear")
    return Summary(float(kept.mean()), float(med), float(q1), float(q3), int(kept.size), excluded)


def _isnan(v) -> bool:
    return isinstance(v, float) and math.isnan(v)


class GEClass(str, Enum):
    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"
    VERY_LOW = "Very low"


class CPDClass(str, Enum):
    VERY_HIGH = "Very high"
    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"
    VERY_LOW = "Very low"


def _check_unit(x: float, what: str) -> float:
    if x is None or not 0.0 <= x <= 1.0:
        raise ValueError(f"{what} must lie in [0, 1], got {x!r}")
    return x


def classify_ge(ge: float) -> GEClass:
    """Efficiency band. A value exactly on a threshold goes to the lower band."""
    ge = _check_unit(ge, "global efficiency")
    if ge > 0.12:
        return GEClass.HIGH
    if ge > 0.05:
        return GEClass.MEDIUM
    if ge > 0.01:
        return GEClass.LOW
    return GEClass.VERY_LOW


def classify_cpd(cpd: float) -> CPDClass:
    """Central-point-dominance band. A value exactly on a threshold goes to the lower band."""
    cpd = _check_unit(cpd, "central point dominance")
    if cpd > 0.7:
        return CPDClass.VERY_HIGH
    if cpd > 0.4:
        return CPDClass.HIGH
    if cpd > 0.2:
        return CPDClass.MEDIUM
    if cpd > 0.1:
        return CPDClass.LOW
    return CPDClass.VERY_LOW


@dataclass
class SummaryTable:
    cells: dict[tuple[str, int], dict[str, Summary]] = field(default_factory=dict)

    def ge_class(self, algorithm: str, m: int) -> GEClass | None:
        s = self.cells.get((algorithm, m), {}).get("ge")
        return None if s is None or s.median is None else classify_ge(s.median)

    def cpd_class(self, algorithm: str, m: int) -> CPDClass | None:
        s = self.cells.get((algorithm, m), {}).get("cpd")
        return None if s is None or s.median is None else classify_cpd(s.median)


def summarize_cells(results: list[CellResult]) -> SummaryTable:
    groups: dict[tuple[str, int], list[dict]] = {}
    for c in results:
        groups.setdefault((c.algorithm, c.m), []).append(c.row)
    table = SummaryTable()
    for key in sorted(groups, key=lambda k: (_ALG_CODE[k[0]], k[1])):
        rows = groups[key]
        table.cells[key] = {f: summarize(r[f] for r in rows) for f in METRIC_FIELDS}
    return table


def format_value(v) -> str:
    """CSV text for one value: ``NA`` for None, ``repr`` for floats."""
    if v is None:
        return "NA"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([format_value(x) for x in r])


def emit_table1(s: SummaryTable, cells=None) -> tuple[str, str]:
    """Render the components / giant size / GE band / CPD band table as ``(csv, text)``.

    Numbers are cell means; bands classify cell medians. Cells absent from
    ``s`` render as ``NA``.
    """
    cells = list(s.cells) if cells is None else list(cells)
    cols = [f"{a} m={m}" for a, m in cells]

    def mean(a, m, f):
        summ = s.cells.get((a, m), {}).get(f)
        return "NA" if summ is None or summ.mean is None else f"{summ.mean:.2f}"

    def band(c):
        return "NA" if c is None else c.value

    rows = [
        ("No. components", [mean(a, m, "components") for a, m in cells]),
        ("GC size (%)", [mean(a, m, "giant_pct") for a, m in cells]),
        ("Efficiency (GE)", [band(s.ge_class(a, m)) for a, m in cells]),
        ("Dependence (CPD)", [band(s.cpd_class(a, m)) for a, m in cells]),
    ]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["measure"] + cols)
    for label, vals in rows:
        w.writerow([label] + vals)

    widths = [max(len(r[0]) for r in rows)] + [
        max(len(cols[i]), *(len(r[1][i]) for r in rows)) for i in range(len(cols))
    ]
    lines = ["  ".join(x.ljust(wd) for x, wd in zip([""] + cols, widths)).rstrip()]
    for label, vals in rows:
        lines.append("  ".join(x.ljust(wd) for x, wd in zip([label] + vals, widths)).rstrip())
    return buf.getvalue(), "\n".join(lines) + "\n"


def write_outputs(cfg: ExperimentConfig, results: list[CellResult], table: SummaryTable) -> None:
    out = Path(cfg.output_dir)
    _write_csv(out / "replicates.csv", REPLICATE_FIELDS,
               ([c.row[f] for f in REPLICATE_FIELDS] for c in results))
    _write_csv(out / "knn_long.csv", ("algorithm", "m", "replicate", "k", "knn_mean"),
               ((c.algorithm, c.m, c.replicate, k, v) for c in results for k, v in sorted(c.knn.items())))
    _write_csv(out / "generation.csv",
               ("algorithm", "m", "replicate", "seed", "discarded_stubs", "rejected_pairs"),
               ((c.algorithm, c.m, c.replicate, c.seed, c.discarded_stubs, c.rejected_pairs)
                for c in results))
    _write_csv(out / "summary.csv",
               ("algorithm", "m", "metric", "mean", "median", "q1", "q3", "count", "excluded"),
               ((a, m, f, su.mean, su.median, su.q1, su.q3, su.count, su.excluded)
                for (a, m), fields in table.cells.items() for f, su in fields.items()))
    table_csv, table_txt = emit_table1(table)
    (out / "table1.csv").write_text(table_csv)
    (out / "table1.txt").write_text(table_txt)
    meta = {
        "package_version": __version__,
        "config": cfg.echo(),
        "rng": f"numpy {np.__version__} Generator(PCG64(SeedSequence(seed)))",
        "cell_seed": "SeedSequence([master_seed, algorithm_code, m, replicate]).generate_state(1, uint64)",
        "algorithm_codes": _ALG_CODE,
        "quartile_rule": QUARTILE_RULE,
        "classification": "cell median; values on a threshold fall to the lower band",
        "undefined_value": "NA",
    }
    (out / "run_metadata.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")


def run_experiment(cfg: ExperimentConfig) -> SummaryTable:
    """Run the full grid, aggregate, and (if ``cfg.output_dir`` is set) write all artifacts."""
    if cfg.output_dir is not None:
        Path(cfg.output_dir).mkdir(parents=True, exist_ok=True)
    results = run_replicates(cfg)
    table = summarize_cells(results)
    if cfg.output_dir is not None:
        write_outputs(cfg, results, table)
    return table


_CONFIG_KEYS = {
    "n": int,
    "m_values": lambda s: tuple(int(x) for x in s.split(",") if x.strip()),
    "replicates": int,
    "algorithms": lambda s: tuple(x.strip() for x in s.split(",") if x.strip()),
    "master_seed": int,
    "seed": int,
    "sequence_mode": str,
    "mode": str,
    "model_b_order": str,
    "workers": int,
    "output_dir": str,
    "out_dir": str,
}
_ALIASES = {"seed": "master_seed", "mode": "sequence_mode", "out_dir": "output_dir"}


def load_config(path, **overrides) -> ExperimentConfig:
    """Read a flat ``key=value`` file; missing keys keep their defaults."""
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"))
    parser.optionxform = str
    text = Path(path).read_text()
    parser.read_string("[experiment]\n" + text)
    kwargs = {}
    for key, raw in parser["experiment"].items():
        if key not in _CONFIG_KEYS:
            raise ValueError(f"unknown config key {key!r}")
        try:
            kwargs[_ALIASES.get(key, key)] = _CONFIG_KEYS[key](raw.strip())
        except ValueError as exc:
            raise ValueError(f"bad value for {key!r}: {raw!r}") from exc
    kwargs.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(**kwargs)


def replay_cell(cfg: ExperimentConfig, algorithm: str, m: int, replicate: int) -> dict:
    """Recompute one row of ``replicates.csv`` without running the rest of the grid."""
    return run_cell(replace(cfg, workers=1), algorithm, m, replicate).row
