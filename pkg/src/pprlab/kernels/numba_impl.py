"""Hot loops compiled with numba.

Each function here has a drop-in twin in :mod:`pprlab.kernels.numpy_impl`;
the pair must consume identical random streams and satisfy the same
contracts.  Keep the bodies free of Python objects so they stay in
nopython mode.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

U64_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
U64_C1 = np.uint64(0xBF58476D1CE4E5B9)
U64_C2 = np.uint64(0x94D049BB133111EB)
INV_2_53 = 1.0 / 9007199254740992.0


@njit(cache=True)
def _u01(base, i):
    # draw i of stream `base`: splitmix64 finalizer of base + (i+1)*GOLDEN
    z = np.uint64(base) + (np.uint64(i) + np.uint64(1)) * U64_GOLDEN
    z = z + U64_GOLDEN
    z = (z ^ (z >> np.uint64(30))) * U64_C1
    z = (z ^ (z >> np.uint64(27))) * U64_C2
    z = z ^ (z >> np.uint64(31))
    return (np.float64(z >> np.uint64(11)) + 1.0) * INV_2_53


@njit(cache=True)
def geometric_positions(base, count, rate):
    """Indices in [0, count) kept independently with probability ``rate``.

    Geometric skipping: one uniform per kept index, in stream order.
    """
    if rate <= 0.0 or count <= 0:
        return np.empty(0, dtype=np.int64)
    if rate >= 1.0:
        return np.arange(count, dtype=np.int64)
    log_keep = math.log1p(-rate)
    cap = int(count * rate + 12.0 * math.sqrt(count * rate + 1.0)) + 64
    out = np.empty(cap, dtype=np.int64)
    n_out = 0
    pos = np.int64(-1)
    draw = np.int64(0)
    while True:
        u = _u01(base, draw)
        draw += 1
        pos += np.int64(math.floor(math.log(u) / log_keep)) + 1
        if pos >= count:
            break
        if n_out == cap:
            cap *= 2
            grown = np.empty(cap, dtype=np.int64)
            grown[:n_out] = out[:n_out]
            out = grown
        out[n_out] = pos
        n_out += 1
    return out[:n_out].copy()


@njit(cache=True)
def transition_matvec(offsets, targets, degrees, pi, nu):
    """One application of the walk operator from the left: pi -> pi P.

    Degree-0 rows of P are the restart distribution nu.
    """
    n = pi.shape[0]
    y = np.zeros(n, dtype=np.float64)
    dangling = 0.0
    for i in range(n):
        if degrees[i] > 0:
            y[i] = pi[i] / degrees[i]
        else:
            dangling += pi[i]
    out = np.empty(n, dtype=np.float64)
    for j in range(n):
        s = 0.0
        for t in range(offsets[j], offsets[j + 1]):
            s += y[targets[t]]
        out[j] = s + dangling * nu[j]
    return out


@njit(cache=True)
def ppr_fixed_point(offsets, targets, degrees, nu, alpha, tol, max_iter):
    """Fixed-point iteration for the restarted-walk score vector.

    Returns (pi, iterations, last L1 step).  Convergence means the L1
    distance between successive iterates fell to ``tol`` or below.
    """
    pi = nu.copy()
    delta = 0.0
    it = 0
    for it in range(1, max_iter + 1):
        pnext = transition_matvec(offsets, targets, degrees, pi, nu)
        delta = 0.0
        for i in range(pi.shape[0]):
            v = (1.0 - alpha) * nu[i] + alpha * pnext[i]
            delta += abs(v - pi[i])
            pi[i] = v
        if delta <= tol:
            return pi, it, delta
    return pi, it, delta


@njit(cache=True)
def ppr_partial_sum(offsets, targets, degrees, nu, alpha, t):
    """Score mass carried by walks of length < t: (1-a) * sum a^l nu P^l."""
    acc = nu.copy()
    w = nu.copy()
    scale = 1.0
    for _ in range(t - 1):
        w = transition_matvec(offsets, targets, degrees, w, nu)
        scale *= alpha
        for i in range(acc.shape[0]):
            acc[i] += scale * w[i]
    for i in range(acc.shape[0]):
        acc[i] *= 1.0 - alpha
    return acc


@njit(cache=True)
def push_scores(offsets, targets, degrees, seed_nodes, seed_weights,
                alpha, eps, lazy, budget):
    """Residual push until every r(v) < eps * d(v).

    FIFO order over above-threshold nodes.  Returns (p, r, pushes, status)
    with status 0 on success and 1 once ``budget`` pushes are exceeded.
    """
    n = degrees.shape[0]
    p = np.zeros(n, dtype=np.float64)
    r = np.zeros(n, dtype=np.float64)
    queue = np.empty(n, dtype=np.int64)
    in_queue = np.zeros(n, dtype=np.uint8)
    head = 0
    tail = 0
    queued = 0
    for s in range(seed_nodes.shape[0]):
        r[seed_nodes[s]] += seed_weights[s]
    for s in range(seed_nodes.shape[0]):
        node = seed_nodes[s]
        if in_queue[node] == 0 and degrees[node] > 0 and r[node] >= eps * degrees[node]:
            queue[tail] = node
            tail = (tail + 1) % n
            queued += 1
            in_queue[node] = 1
    pushes = np.int64(0)
    while queued > 0:
        u = queue[head]
        head = (head + 1) % n
        queued -= 1
        in_queue[u] = 0
        du = degrees[u]
        ru = r[u]
        if ru < eps * du:
            continue
        pushes += 1
        if pushes > budget:
            return p, r, pushes, 1
        p[u] += (1.0 - alpha) * ru
        if lazy:
            share = alpha * ru / (2.0 * du)
            r[u] = alpha * ru / 2.0
            if r[u] >= eps * du and in_queue[u] == 0:
                queue[tail] = u
                tail = (tail + 1) % n
                queued += 1
                in_queue[u] = 1
        else:
            share = alpha * ru / du
            r[u] = 0.0
        for t in range(offsets[u], offsets[u + 1]):
            v = targets[t]
            r[v] += share
            if in_queue[v] == 0 and degrees[v] > 0 and r[v] >= eps * degrees[v]:
                queue[tail] = v
                tail = (tail + 1) % n
                queued += 1
                in_queue[v] = 1
    return p, r, pushes, 0


@njit(cache=True)
def sweep_prefix_conductance(offsets, targets, degrees, order, total_volume):
    """Conductance of every prefix of ``order``, by incremental cut/volume.

    Prefixes whose smaller side has zero volume get +inf.  Returns the
    array of conductances and the count of prefixes with a defined value
    before the complement volume hits zero.
    """
    n = degrees.shape[0]
    length = order.shape[0]
    cond = np.full(length, np.inf, dtype=np.float64)
    in_set = np.zeros(n, dtype=np.uint8)
    vol = np.int64(0)
    cut = np.int64(0)
    filled = 0
    for idx in range(length):
        v = order[idx]
        internal = np.int64(0)
        for t in range(offsets[v], offsets[v + 1]):
            if in_set[targets[t]] == 1:
                internal += 1
        vol += degrees[v]
        cut += degrees[v] - 2 * internal
        in_set[v] = 1
        other = total_volume - vol
        if other <= 0:
            break
        filled = idx + 1
        if vol > 0:
            small = vol if vol < other else other
            cond[idx] = cut / small
    return cond, filled


@njit(cache=True)
def walk_apply(offsets, targets, degrees, v):
    """P v for the CSR walk matrix (rows scaled by 1/degree)."""
    n = degrees.shape[0]
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        s = 0.0
        for t in range(offsets[i], offsets[i + 1]):
            s += v[targets[t]]
        out[i] = s / degrees[i]
    return out


@njit(cache=True)
def walk_apply_t(offsets, targets, degrees, u):
    """P^T u for the CSR walk matrix."""
    n = degrees.shape[0]
    y = np.empty(n, dtype=np.float64)
    for i in range(n):
        y[i] = u[i] / degrees[i]
    out = np.empty(n, dtype=np.float64)
    for j in range(n):
        s = 0.0
        for t in range(offsets[j], offsets[j + 1]):
            s += y[targets[t]]
        out[j] = s
    return out
