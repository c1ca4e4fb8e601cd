"""Hot search kernels: numba-jitted by default, numpy/python fallback on demand.

The backend is chosen once at import time. Set ``PVCMON_NUMBA=0`` to skip
jitting: the subset-enumeration profile and the min-plus merge then run as
vectorized numpy, while the branch-and-bound search runs the same loop
uncompiled. ``benchmarks/bench_kernels.py`` compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

INF = int(np.int64(1) << np.int64(40))


def _numba_requested() -> bool:
    flag = os.environ.get("PVCMON_NUMBA", "1").strip().lower()
    return flag not in ("0", "false", "off", "no")


NUMBA_ENABLED = False
if _numba_requested():
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:
        pass


def backend() -> str:
    """Name of the active kernel backend: 'numba' or 'numpy'."""
    return "numba" if NUMBA_ENABLED else "numpy"


# ---------------------------------------------------------------------------
# subset-enumeration coverage profile


def _cover_profile_loop(n, edge_u, edge_v):
    # best[k] = max number of edges covered by any vertex subset of size k
    m = edge_u.shape[0]
    best = np.zeros(n + 1, dtype=np.int64)
    for mask in range(1 << n):
        cov = 0
        for j in range(m):
            if ((mask >> edge_u[j]) & 1) | ((mask >> edge_v[j]) & 1):
                cov += 1
        size = 0
        rest = mask
        while rest:
            rest &= rest - 1
            size += 1
        if cov > best[size]:
            best[size] = cov
    for k in range(1, n + 1):
        if best[k] < best[k - 1]:
            best[k] = best[k - 1]
    return best


def _cover_profile_numpy(n, edge_u, edge_v):
    best = np.zeros(n + 1, dtype=np.int64)
    chunk = 1 << min(n, 20)  # bound peak memory on large enumerations
    for start in range(0, 1 << n, chunk):
        masks = np.arange(start, start + chunk, dtype=np.int64)
        cov = np.zeros(masks.shape[0], dtype=np.int64)
        for j in range(edge_u.shape[0]):
            cov += ((masks >> int(edge_u[j])) | (masks >> int(edge_v[j]))) & 1
        sizes = np.bitwise_count(masks).astype(np.int64)
        np.maximum.at(best, sizes, cov)
    np.maximum.accumulate(best, out=best)
    return best


_cover_profile_py = _cover_profile_loop
if NUMBA_ENABLED:
    _cover_profile_jit = njit(cache=True)(_cover_profile_loop)


def cover_profile(n: int, edge_u: np.ndarray, edge_v: np.ndarray) -> np.ndarray:
    """Max coverage per subset size over all 2^n subsets (full enumeration)."""
    if n > 26:
        raise ValueError(f"subset enumeration guard: n={n} > 26")
    if NUMBA_ENABLED:
        return _cover_profile_jit(n, edge_u, edge_v)
    return _cover_profile_numpy(n, edge_u, edge_v)


# ---------------------------------------------------------------------------
# branch-and-bound minimum partial cover


def _bb_min_cover_loop(n, indptr, nbrs, eids, n_edges, target, cap, init_size, init_flags, first_found):
    # Searches for the smallest vertex set covering >= target edges, looking
    # only below the incumbent init_size (whose flags must then be a valid
    # witness) and never deeper than cap. Branches on the free vertex of
    # maximum residual degree; prunes when the remaining budget times that
    # degree cannot reach the residual target. The explicit op stack keeps
    # this jittable: 0 explore, 1/2 apply/undo include, 3/4 apply/undo skip.
    status = np.zeros(n, dtype=np.int8)
    resdeg = np.empty(n, dtype=np.int64)
    for v in range(n):
        resdeg[v] = indptr[v + 1] - indptr[v]
    cover_cnt = np.zeros(n_edges, dtype=np.int8)
    best_size = init_size
    best_flags = init_flags.copy()
    cur_flags = np.zeros(n, dtype=np.int8)
    covered = 0
    chosen = 0
    stack_cap = 6 * n + 16
    op_kind = np.empty(stack_cap, dtype=np.int8)
    op_vert = np.empty(stack_cap, dtype=np.int64)
    op_kind[0] = 0
    op_vert[0] = -1
    sp = 1
    while sp > 0:
        sp -= 1
        kind = op_kind[sp]
        v = op_vert[sp]
        if kind == 1:
            status[v] = 1
            chosen += 1
            cur_flags[v] = 1
            for ii in range(indptr[v], indptr[v + 1]):
                e = eids[ii]
                cover_cnt[e] += 1
                if cover_cnt[e] == 1:
                    covered += 1
                    resdeg[nbrs[ii]] -= 1
                    resdeg[v] -= 1
            continue
        if kind == 2:
            status[v] = 0
            chosen -= 1
            cur_flags[v] = 0
            for ii in range(indptr[v], indptr[v + 1]):
                e = eids[ii]
                cover_cnt[e] -= 1
                if cover_cnt[e] == 0:
                    covered -= 1
                    resdeg[nbrs[ii]] += 1
                    resdeg[v] += 1
            continue
        if kind == 3:
            status[v] = 2
            continue
        if kind == 4:
            status[v] = 0
            continue
        # explore current node
        if covered >= target:
            if chosen < best_size:
                best_size = chosen
                for i in range(n):
                    best_flags[i] = cur_flags[i]
                if first_found and best_size <= cap:
                    break
            continue
        avail = best_size - 1 - chosen
        if avail <= 0:
            continue
        pivot = -1
        bestdeg = 0
        for i in range(n):
            if status[i] == 0 and resdeg[i] > bestdeg:
                bestdeg = resdeg[i]
                pivot = i
        if pivot < 0:
            continue
        if avail * bestdeg < target - covered:
            continue
        op_kind[sp] = 4
        op_vert[sp] = pivot
        sp += 1
        op_kind[sp] = 0
        op_vert[sp] = -1
        sp += 1
        op_kind[sp] = 3
        op_vert[sp] = pivot
        sp += 1
        op_kind[sp] = 2
        op_vert[sp] = pivot
        sp += 1
        op_kind[sp] = 0
        op_vert[sp] = -1
        sp += 1
        op_kind[sp] = 1
        op_vert[sp] = pivot
        sp += 1
    return best_size, best_flags


_bb_min_cover_py = _bb_min_cover_loop
if NUMBA_ENABLED:
    _bb_min_cover_jit = njit(cache=True)(_bb_min_cover_loop)


def bb_min_cover(n, indptr, nbrs, eids, n_edges, target, cap, init_size, init_flags, first_found):
    """Best-improving branch-and-bound below the incumbent (see loop impl)."""
    impl = _bb_min_cover_jit if NUMBA_ENABLED else _bb_min_cover_py
    size, flags = impl(
        n, indptr, nbrs, eids, n_edges,
        int(target), int(cap), int(init_size), init_flags, bool(first_found),
    )
    return int(size), flags


# ---------------------------------------------------------------------------
# min-plus (tropical) convolution for the tree knapsack merge


def _minplus_loop(a, b):
    na = a.shape[0]
    nb = b.shape[0]
    out = np.full(na + nb - 1, INF, dtype=np.int64)
    for i in range(na):
        ai = a[i]
        if ai >= INF:
            continue
        for j in range(nb):
            s = ai + b[j]
            if s < out[i + j]:
                out[i + j] = s
    for k in range(out.shape[0]):
        if out[k] > INF:
            out[k] = INF
    return out


def _minplus_numpy(a, b):
    if a.shape[0] > b.shape[0]:
        a, b = b, a
    out = np.full(a.shape[0] + b.shape[0] - 1, INF, dtype=np.int64)
    for i in range(a.shape[0]):
        ai = int(a[i])
        if ai >= INF:
            continue
        seg = out[i:i + b.shape[0]]
        np.minimum(seg, ai + b, out=seg)
    np.minimum(out, INF, out=out)
    return out


_minplus_py = _minplus_loop
if NUMBA_ENABLED:
    _minplus_jit = njit(cache=True)(_minplus_loop)


def minplus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Min-plus convolution; INF marks unreachable entries."""
    if NUMBA_ENABLED:
        return _minplus_jit(a, b)
    return _minplus_numpy(a, b)
