"""Pure-numpy fallbacks for the numba kernels.

Same signatures and contracts as :mod:`pprlab.kernels.numba_impl`.  The
random-stream consumers draw from the identical counter-based stream, so
graphs sampled under either backend are bit-identical.  The push loop is
plain Python and noticeably slower; it exists so the package works (and
stays testable) where numba is unavailable.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np

from .._rng import uniform_batch

_BATCH = 1 << 16


def geometric_positions(base, count, rate):
    if rate <= 0.0 or count <= 0:
        return np.empty(0, dtype=np.int64)
    if rate >= 1.0:
        return np.arange(count, dtype=np.int64)
    log_keep = math.log1p(-rate)
    chunks = []
    pos = -1
    start = 0
    while True:
        u = uniform_batch(base, start, _BATCH)
        start += _BATCH
        skips = np.floor(np.log(u) / log_keep).astype(np.int64) + 1
        positions = pos + np.cumsum(skips)
        keep = positions < count
        if keep.all():
            chunks.append(positions)
            pos = int(positions[-1])
        else:
            chunks.append(positions[keep])
            break
    return np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)


def _row_sums(values, offsets):
    n = offsets.shape[0] - 1
    m = values.shape[0]
    if m == 0:
        return np.zeros(n, dtype=np.float64)
    starts = offsets[:-1]
    empty = starts == offsets[1:]
    out = np.add.reduceat(values, np.minimum(starts, m - 1))
    out[empty] = 0.0
    return out


def transition_matvec(offsets, targets, degrees, pi, nu):
    y = np.zeros_like(pi)
    live = degrees > 0
    y[live] = pi[live] / degrees[live]
    dangling = float(pi[~live].sum())
    return _row_sums(y[targets], offsets) + dangling * nu


def ppr_fixed_point(offsets, targets, degrees, nu, alpha, tol, max_iter):
    pi = nu.copy()
    delta = 0.0
    it = 0
    for it in range(1, max_iter + 1):
        pnext = (1.0 - alpha) * nu + alpha * transition_matvec(
            offsets, targets, degrees, pi, nu)
        delta = float(np.abs(pnext - pi).sum())
        pi = pnext
        if delta <= tol:
            return pi, it, delta
    return pi, it, delta


def ppr_partial_sum(offsets, targets, degrees, nu, alpha, t):
    acc = nu.copy()
    w = nu.copy()
    scale = 1.0
    for _ in range(t - 1):
        w = transition_matvec(offsets, targets, degrees, w, nu)
        scale *= alpha
        acc += scale * w
    return (1.0 - alpha) * acc


def push_scores(offsets, targets, degrees, seed_nodes, seed_weights,
                alpha, eps, lazy, budget):
    n = degrees.shape[0]
    p = np.zeros(n, dtype=np.float64)
    r = np.zeros(n, dtype=np.float64)
    for node, w in zip(seed_nodes, seed_weights):
        r[node] += w
    queue = deque()
    in_queue = np.zeros(n, dtype=bool)
    for node in seed_nodes:
        node = int(node)
        if not in_queue[node] and degrees[node] > 0 and r[node] >= eps * degrees[node]:
            queue.append(node)
            in_queue[node] = True
    pushes = 0
    while queue:
        u = queue.popleft()
        in_queue[u] = False
        du = int(degrees[u])
        ru = float(r[u])
        if ru < eps * du:
            continue
        pushes += 1
        if pushes > budget:
            return p, r, pushes, 1
        p[u] += (1.0 - alpha) * ru
        if lazy:
            share = alpha * ru / (2.0 * du)
            r[u] = alpha * ru / 2.0
            if r[u] >= eps * du:
                queue.append(u)
                in_queue[u] = True
        else:
            share = alpha * ru / du
            r[u] = 0.0
        for t in range(int(offsets[u]), int(offsets[u + 1])):
            v = int(targets[t])
            r[v] += share
            if not in_queue[v] and degrees[v] > 0 and r[v] >= eps * degrees[v]:
                queue.append(v)
                in_queue[v] = True
    return p, r, pushes, 0


def sweep_prefix_conductance(offsets, targets, degrees, order, total_volume):
    n = degrees.shape[0]
    length = order.shape[0]
    cond = np.full(length, np.inf, dtype=np.float64)
    in_set = np.zeros(n, dtype=bool)
    vol = 0
    cut = 0
    filled = 0
    for idx in range(length):
        v = int(order[idx])
        nbrs = targets[int(offsets[v]):int(offsets[v + 1])]
        internal = int(in_set[nbrs].sum())
        vol += int(degrees[v])
        cut += int(degrees[v]) - 2 * internal
        in_set[v] = True
        other = int(total_volume) - vol
        if other <= 0:
            break
        filled = idx + 1
        if vol > 0:
            cond[idx] = cut / min(vol, other)
    return cond, filled


def walk_apply(offsets, targets, degrees, v):
    return _row_sums(v[targets], offsets) / degrees


def walk_apply_t(offsets, targets, degrees, u):
    return _row_sums((u / degrees)[targets], offsets)
