"""Walk corpora for embedding training.

Two samplers: second-order (p, q)-weighted walks with O(1) alias draws, and
restart walks that jump back to their start node. A walk of length ``l``
visits ``l + 1`` nodes (start plus l steps).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .graph import Graph

Walk = list[int]


@dataclass(frozen=True)
class AliasEntry:
    """Vose prob/alias arrays over the neighbors of one walk position.

    Column i accepts with probability ``prob[i]`` and otherwise falls back
    to column ``alias[i]``; ``nodes[i]`` is the node id behind column i.
    """

    prob: np.ndarray
    alias: np.ndarray
    nodes: tuple[int, ...]


@dataclass(frozen=True)
class AliasTable:
    """One AliasEntry per directed orientation (prev, curr) of every edge."""

    p: float
    q: float
    entries: dict[tuple[int, int], AliasEntry]


@dataclass(frozen=True)
class WalkParams:
    """Corpus-generation settings.

    ``mode`` is "alias_weighted" for (p, q)-biased second-order walks or
    "restart" for walks that return to their start node with probability
    1 - c at each step.
    """

    length: int
    walks_per_node: int
    p: float = 1.0
    q: float = 1.0
    c: float = 0.9
    mode: str = "alias_weighted"

    def __post_init__(self):
        if self.mode not in ("alias_weighted", "restart"):
            raise ValueError(f"unknown walk mode {self.mode!r}")
        if self.length < 1:
            raise ValueError("walk length must be >= 1")
        if self.walks_per_node < 1:
            raise ValueError("walks_per_node must be >= 1")
        if self.p <= 0 or self.q <= 0:
            raise ValueError("p and q must be positive")
        if not 0.0 <= self.c <= 1.0:
            raise ValueError("restart parameter c must be in [0, 1]")


def transition_weight(g: Graph, prev: int, curr: int, nxt: int, p: float, q: float) -> float:
    """Unnormalized weight for stepping curr -> nxt when curr was reached from prev."""
    if nxt == prev:
        return 1.0 / p
    if nxt in g.adjacency[prev]:
        return 1.0
    return 1.0 / q


def _vose(weights: list[float]) -> tuple[np.ndarray, np.ndarray]:
    """prob/alias arrays encoding the normalized ``weights`` (Vose's method)."""
    n = len(weights)
    total = sum(weights)
    scaled = [w * n / total for w in weights]
    prob = [0.0] * n
    alias = list(range(n))
    small = [i for i, s in enumerate(scaled) if s < 1.0]
    large = [i for i, s in enumerate(scaled) if s >= 1.0]
    while small and large:
        lo = small.pop()
        hi = large.pop()
        prob[lo] = scaled[lo]
        alias[lo] = hi
        scaled[hi] = (scaled[hi] + scaled[lo]) - 1.0
        if scaled[hi] < 1.0:
            small.append(hi)
        else:
            large.append(hi)
    for leftover in (large, small):
        while leftover:
            prob[leftover.pop()] = 1.0
    return np.array(prob), np.array(alias, dtype=np.int64)


def build_alias_table(g: Graph, p: float, q: float) -> AliasTable:
    """Precompute alias entries for both orientations of every edge.

    For the directed orientation (t, x) the distribution over N(x) weights a
    neighbor 1/p if it is t itself, 1 if it is also a neighbor of t, and 1/q
    otherwise, normalized.
    """
    if p <= 0 or q <= 0:
        raise ValueError("p and q must be positive")
    entries: dict[tuple[int, int], AliasEntry] = {}
    for u, v in g.edge_list:
        for prev, curr in ((u, v), (v, u)):
            nbrs = sorted(g.adjacency[curr])
            prev_nbrs = g.adjacency[prev]
            weights = []
            for w in nbrs:
                if w == prev:
                    weights.append(1.0 / p)
                elif w in prev_nbrs:
                    weights.append(1.0)
                else:
                    weights.append(1.0 / q)
            prob, alias = _vose(weights)
            entries[(prev, curr)] = AliasEntry(prob=prob, alias=alias, nodes=tuple(nbrs))
    return AliasTable(p=p, q=q, entries=entries)


def alias_draw(entry: AliasEntry, rng: random.Random) -> int:
    """O(1) draw: uniform column, then accept or take the column's alias."""
    i = rng.randrange(len(entry.nodes))
    if rng.random() < entry.prob[i]:
        return entry.nodes[i]
    return entry.nodes[int(entry.alias[i])]


def alias_distribution(entry: AliasEntry) -> dict[int, float]:
    """Sampling distribution encoded by an entry, reconstructed exactly.

    Column i contributes prob[i]/n to its own node and (1 - prob[i])/n to
    its alias node; summing recovers the normalized weights.
    """
    n = len(entry.nodes)
    mass = [entry.prob[i] / n for i in range(n)]
    for j in range(n):
        mass[int(entry.alias[j])] += (1.0 - entry.prob[j]) / n
    return {entry.nodes[i]: mass[i] for i in range(n)}


def weighted_walk(g: Graph, table: AliasTable, x: int, length: int, rng: random.Random) -> Walk:
    """Second-order walk from x: first step uniform, then alias draws."""
    walk = [x]
    first_nbrs = sorted(g.adjacency[x])
    for _ in range(length):
        if len(walk) == 1:
            walk.append(rng.choice(first_nbrs))
        else:
            entry = table.entries[(walk[-2], walk[-1])]
            walk.append(alias_draw(entry, rng))
    return walk


def restart_walk(g: Graph, x: int, length: int, c: float, rng: random.Random) -> Walk:
    """Walk from x that moves to a uniform neighbor with probability c and
    otherwise returns to x."""
    if x not in g.adjacency:
        raise KeyError(x)
    walk = [x]
    for _ in range(length):
        if rng.random() < c:
            walk.append(rng.choice(sorted(g.adjacency[walk[-1]])))
        else:
            walk.append(x)
    return walk


def generate_corpus(g: Graph, params: WalkParams, seed: int) -> list[Walk]:
    """r walks per start node, iterated as r outer passes over the node list.

    Deterministic for a fixed seed; one RNG drives the whole corpus.
    """
    rng = random.Random(seed)
    table = None
    if params.mode == "alias_weighted":
        table = build_alias_table(g, params.p, params.q)
    corpus: list[Walk] = []
    for _ in range(params.walks_per_node):
        for x in g.node_list:
            if table is not None:
                corpus.append(weighted_walk(g, table, x, params.length, rng))
            else:
                corpus.append(restart_walk(g, x, params.length, params.c, rng))
    return corpus
