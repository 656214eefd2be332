"""Neighborhood-based similarity scores for candidate edges.

All six scores share the signature ``(g, u, v) -> float`` and assume a
simple undirected graph with ``u != v`` and both degrees >= 1. Logarithms
are base 10 throughout; AUC ranking is invariant to the base.
"""

from __future__ import annotations

import math

from .graph import Graph

# Denominators smaller than this are treated as zero (single-edge endpoints
# make log10(k_u * k_v) exactly 0 in the variant index).
ZERO_DENOMINATOR_EPS = 1e-9


def common_neighbors(g: Graph, u: int, v: int) -> float:
    return float(len(g.shared_neighbors(u, v)))


def hub_promoted(g: Graph, u: int, v: int) -> float:
    """Shared-neighbor count normalized by the smaller endpoint degree."""
    return len(g.shared_neighbors(u, v)) / min(g.degree(u), g.degree(v))


def hub_depressed(g: Graph, u: int, v: int) -> float:
    """Shared-neighbor count normalized by the larger endpoint degree."""
    return len(g.shared_neighbors(u, v)) / max(g.degree(u), g.degree(v))


def lhn1(g: Graph, u: int, v: int) -> float:
    """Shared-neighbor count normalized by the product of endpoint degrees."""
    return len(g.shared_neighbors(u, v)) / (g.degree(u) * g.degree(v))


def adamic_adar(g: Graph, u: int, v: int) -> float:
    """Sum of 1/log10(degree) over the common neighbors.

    Degree-1 common neighbors would divide by zero and are skipped, but a
    common neighbor of two distinct nodes always has degree >= 2 in a simple
    graph, so the guard is purely defensive.
    """
    score = 0.0
    for w in g.shared_neighbors(u, v):
        k = g.degree(w)
        if k == 1:
            continue
        score += 1.0 / math.log10(k)
    return score


def lhn1_variant(g: Graph, u: int, v: int) -> float:
    """Shared-neighbor count over log10 of the degree product.

    A zero denominator (both endpoints degree 1) yields score 0.
    """
    denominator = math.log10(g.degree(u) * g.degree(v))
    if abs(denominator) < ZERO_DENOMINATOR_EPS:
        return 0.0
    return len(g.shared_neighbors(u, v)) / denominator


LOCAL_INDICES = {
    "cn": common_neighbors,
    "hub_prom": hub_promoted,
    "hub_depr": hub_depressed,
    "lhn1": lhn1,
    "aa": adamic_adar,
    "lhn1_var": lhn1_variant,
}
