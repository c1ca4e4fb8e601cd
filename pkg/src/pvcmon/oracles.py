"""Exhaustive subset-enumeration baselines used to cross-check the solvers.

These deliberately share no search code with the branch-and-bound path in
:mod:`pvcmon.pvc`; they enumerate every vertex subset.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import InfeasibleTargetError
from .graph import Graph


def cover_profile(graph: Graph, max_n: int = 20) -> list[int]:
    """For each subset size k, the max number of edges coverable by k vertices."""
    if graph.n > max_n:
        raise ValueError(f"enumeration guard: n={graph.n} > {max_n}")
    eu = np.array([u for u, _ in graph.edges], dtype=np.int64)
    ev = np.array([v for _, v in graph.edges], dtype=np.int64)
    return [int(x) for x in kernels.cover_profile(graph.n, eu, ev)]


def min_cover_size(graph: Graph, t: int, max_n: int = 20) -> int:
    """Minimum subset size covering at least t edges, by full enumeration."""
    if t < 0 or t > graph.m:
        raise InfeasibleTargetError(f"target {t} outside [0, {graph.m}]")
    profile = cover_profile(graph, max_n=max_n)
    for k, cov in enumerate(profile):
        if cov >= t:
            return k
    raise AssertionError("profile must reach m")  # t <= m makes this unreachable


def max_independent_set_size(graph: Graph, max_n: int = 20) -> int:
    """Brute-force independence number (used to cross-check cover boundaries)."""
    if graph.n > max_n:
        raise ValueError(f"enumeration guard: n={graph.n} > {max_n}")
    adj_masks = [0] * graph.n
    for u, v in graph.edges:
        adj_masks[u] |= 1 << v
        adj_masks[v] |= 1 << u
    best = 0
    for mask in range(1 << graph.n):
        ok = True
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj_masks[v] & mask:
                ok = False
                break
        if ok:
            best = max(best, mask.bit_count())
    return best
