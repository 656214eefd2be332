"""Sampling AUC estimation and the repeated-partition experiment harness.

AUC is estimated by n paired draws: a uniform withheld edge against a
sampled nonexistent pair, tallying strict wins as n' and everything else
(ties included) as n''; AUC = (n' + 0.5 n'') / n. Experiments use a paired
design: every level (index kind, c value, dimension, ...) is evaluated on
the same train/test partitions, trial by trial.
"""

from __future__ import annotations

import csv
import hashlib
import math
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence, Union

from .graph import EdgePartition, Graph, sample_non_neighbor, split_edges

ScoreFn = Callable[[Graph, int, int], float]


@dataclass(frozen=True)
class AucTally:
    n: int
    n_higher: int  # existing edge scored strictly greater
    n_not_higher: int  # existing edge scored less than or equal

    @property
    def auc(self) -> float:
        return (self.n_higher + 0.5 * self.n_not_higher) / self.n


@dataclass(frozen=True)
class Scorer:
    """A pair-scoring function over a training graph, with an identity tag."""

    tag: str
    score: ScoreFn


@dataclass(frozen=True)
class ScorerFactory:
    """Builds a Scorer from a training graph; ``build(g_train, seed)``.

    The seed covers any internal randomness (walk generation, negative
    sampling); stateless scorers ignore it.
    """

    tag: str
    build: Callable[[Graph, int], Scorer]


def derive_seed(seed: int, *labels: object) -> int:
    """Stable sub-seed so distinct random streams never share state."""
    digest = hashlib.sha256(repr((seed, labels)).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def estimate_auc(
    partition: EdgePartition,
    scorer: Scorer,
    n: int = 1000,
    seed: int = 0,
) -> AucTally:
    """n paired comparisons of a random withheld edge vs a sampled non-edge.

    A withheld edge whose endpoint is absent from the training graph scores
    0. The nonexistent pair is a uniform training-graph node plus a uniform
    non-neighbor of it (not uniform over all non-edges; it leans toward
    pairs incident to sparse neighborhoods). Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError("need at least one comparison")
    if not partition.test:
        raise ValueError("empty test set")
    g_train = Graph(partition.train)
    if g_train.num_edges == 0:
        raise ValueError("empty training graph")
    rng = random.Random(seed)
    adjacency = g_train.adjacency
    nodes = g_train.node_list
    higher = 0
    not_higher = 0
    for _ in range(n):
        u, v = rng.choice(partition.test)
        if u not in adjacency or v not in adjacency:
            existing = 0.0
        else:
            existing = scorer.score(g_train, u, v)
        a = rng.choice(nodes)
        b = sample_non_neighbor(g_train, a, rng)
        nonexistent = scorer.score(g_train, a, b)
        if existing > nonexistent:
            higher += 1
        else:
            not_higher += 1
    return AucTally(n=n, n_higher=higher, n_not_higher=not_higher)


@dataclass(frozen=True)
class TrialRecord:
    trial_seed: int
    level: str
    auc: float


@dataclass(frozen=True)
class ExperimentResult:
    records: tuple[TrialRecord, ...]

    def levels(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for record in self.records:
            seen.setdefault(record.level, None)
        return tuple(seen)

    def aucs(self, level: str) -> tuple[float, ...]:
        return tuple(r.auc for r in self.records if r.level == level)


def run_experiment(
    g_full: Graph,
    levels: Sequence[ScorerFactory],
    trials: int = 100,
    test_fraction: float = 0.1,
    comparisons: int = 1000,
    base_seed: int = 0,
) -> ExperimentResult:
    """Paired repeated-partition experiment.

    Trial t uses partition seed base_seed + t; every level is built on and
    evaluated against that same partition, and shares the trial's comparison
    draws, so per-trial differences are within-partition. Deterministic end
    to end.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if not levels:
        raise ValueError("no levels to evaluate")
    records: list[TrialRecord] = []
    for t in range(trials):
        part_seed = base_seed + t
        partition = split_edges(g_full, test_fraction, part_seed)
        g_train = Graph(partition.train)
        eval_seed = derive_seed(part_seed, "auc")
        for factory in levels:
            scorer = factory.build(g_train, derive_seed(part_seed, "build", factory.tag))
            tally = estimate_auc(partition, scorer, comparisons, eval_seed)
            records.append(TrialRecord(part_seed, factory.tag, tally.auc))
    return ExperimentResult(tuple(records))


@dataclass(frozen=True)
class LevelSummary:
    level: str
    mean: float
    std: float
    stderr: float
    ci_low: float
    ci_high: float


def summarize(result: ExperimentResult) -> dict[str, LevelSummary]:
    """Per-level mean, unbiased std, standard error, and normal 95% CI."""
    by_level: dict[str, list[float]] = {}
    for record in result.records:
        by_level.setdefault(record.level, []).append(record.auc)
    summaries: dict[str, LevelSummary] = {}
    for level, values in by_level.items():
        m = len(values)
        if m < 2:
            raise ValueError(f"level {level!r} has {m} trial(s); need at least 2")
        mean = sum(values) / m
        std = math.sqrt(sum((x - mean) ** 2 for x in values) / (m - 1))
        stderr = std / math.sqrt(m)
        summaries[level] = LevelSummary(
            level=level,
            mean=mean,
            std=std,
            stderr=stderr,
            ci_low=mean - 1.96 * stderr,
            ci_high=mean + 1.96 * stderr,
        )
    return summaries


def paired_difference(
    result: ExperimentResult, level_a: str, level_b: str
) -> tuple[float, float]:
    """Mean and standard error of per-trial AUC differences (a - b).

    Trials are matched by partition seed; raises if the two levels were not
    run on identical partitions.
    """
    a = {r.trial_seed: r.auc for r in result.records if r.level == level_a}
    b = {r.trial_seed: r.auc for r in result.records if r.level == level_b}
    if not a or a.keys() != b.keys():
        raise ValueError(f"levels {level_a!r} and {level_b!r} are not paired")
    diffs = [a[s] - b[s] for s in a]
    m = len(diffs)
    if m < 2:
        raise ValueError("need at least two paired trials")
    mean = sum(diffs) / m
    std = math.sqrt(sum((d - mean) ** 2 for d in diffs) / (m - 1))
    return mean, std / math.sqrt(m)


def write_records_csv(result: ExperimentResult, path: Union[str, Path]) -> None:
    """Per-trial CSV: header trial_seed,level,auc; UTF-8 with LF endings."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["trial_seed", "level", "auc"])
        for record in result.records:
            writer.writerow([record.trial_seed, record.level, repr(record.auc)])


def write_summary_csv(
    summaries: dict[str, LevelSummary], path: Union[str, Path]
) -> None:
    """Summary CSV: level,mean,std,stderr,ci_low,ci_high."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["level", "mean", "std", "stderr", "ci_low", "ci_high"])
        for summary in summaries.values():
            writer.writerow(
                [
                    summary.level,
                    repr(summary.mean),
                    repr(summary.std),
                    repr(summary.stderr),
                    repr(summary.ci_low),
                    repr(summary.ci_high),
                ]
            )
