"""Degree sequences, empirical degree distributions and their file formats."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import Graph, make_rng

__all__ = [
    "DegreeSequence",
    "DegreeDistribution",
    "degrees_of",
    "distribution_from_sequence",
    "sample_sequence",
    "read_degree_sequence",
    "write_degree_sequence",
    "write_distribution",
    "read_distribution",
]


@dataclass(frozen=True)
class DegreeSequence:
    """Target degree per vertex. Odd totals are allowed; generators drop the spare stub."""

    targets: tuple[int, ...]

    def __post_init__(self):
        targets = tuple(int(k) for k in self.targets)
        if any(k < 0 for k in targets):
            raise ValueError("degrees must be non-negative")
        object.__setattr__(self, "targets", targets)

    def __len__(self) -> int:
        return len(self.targets)

    def __iter__(self):
        return iter(self.targets)

    def __getitem__(self, i):
        return self.targets[i]

    @property
    def total(self) -> int:
        return sum(self.targets)

    @property
    def pairable(self) -> bool:
        return self.total % 2 == 0

    def as_array(self) -> np.ndarray:
        return np.asarray(self.targets, dtype=np.int64)


@dataclass(frozen=True)
class DegreeDistribution:
    support: tuple[int, ...]
    probability: tuple[float, ...]

    def __post_init__(self):
        if len(self.support) != len(self.probability) or not self.support:
            raise ValueError("support and probability must be non-empty and of equal length")
        if any(p < 0 for p in self.probability):
            raise ValueError("probabilities must be non-negative")
        if abs(sum(self.probability) - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {sum(self.probability)!r}, not 1")
        if any(k < 0 for k in self.support) or len(set(self.support)) != len(self.support):
            raise ValueError("support must hold distinct non-negative degrees")

    def as_dict(self) -> dict[int, float]:
        return dict(zip(self.support, self.probability))

    def mean(self) -> float:
        return float(np.dot(self.support, self.probability))


def degrees_of(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(g.degrees().tolist()))


def distribution_from_sequence(s) -> DegreeDistribution:
    """Empirical P(k) = count(k) / n, support ascending."""
    values = np.asarray(list(s), dtype=np.int64)
    if values.size == 0:
        raise ValueError("cannot build a distribution from an empty sequence")
    ks, counts = np.unique(values, return_counts=True)
    return DegreeDistribution(tuple(ks.tolist()), tuple((counts / values.size).tolist()))


def sample_sequence(d: DegreeDistribution, n: int, rng) -> DegreeSequence:
    """Draw ``n`` i.i.d. degrees from ``d``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = make_rng(rng)
    p = np.asarray(d.probability, dtype=np.float64)
    idx = rng.choice(len(d.support), size=n, p=p / p.sum())
    support = np.asarray(d.support, dtype=np.int64)
    return DegreeSequence(tuple(support[idx].tolist()))


def write_degree_sequence(s: DegreeSequence, path) -> None:
    Path(path).write_text("".join(f"{k}\n" for k in s), encoding="ascii")


def read_degree_sequence(path) -> DegreeSequence:
    targets = []
    for lineno, line in enumerate(Path(path).read_text(encoding="ascii").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            k = int(line)
        except ValueError:
            raise ValueError(f"line {lineno}: not an integer: {line!r}") from None
        if k < 0:
            raise ValueError(f"line {lineno}: negative degree {k}")
        targets.append(k)
    if not targets:
        raise ValueError(f"{path}: empty degree sequence")
    return DegreeSequence(tuple(targets))


def write_distribution(d: DegreeDistribution, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["k", "probability"])
        for k, p in zip(d.support, d.probability):
            w.writerow([k, repr(float(p))])


def read_distribution(path) -> DegreeDistribution:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return DegreeDistribution(
        tuple(int(r["k"]) for r in rows), tuple(float(r["probability"]) for r in rows)
    )
