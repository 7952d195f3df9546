"""Reproducible 64-bit randomness shared by every sampler in the package.

All randomness flows through one primitive, the splitmix64 finalizer
``mix64``.  Streams are counter based: draw ``i`` of the stream with base
state ``s`` is ``mix64(s + (i + 1) * GOLDEN)``.  Because a draw is a pure
function of ``(s, i)``, the numba kernels and the vectorized numpy
fallbacks consume bit-identical streams, and independent replicas never
share state.

Stream derivation rules (documented contract, relied on by tests):

* replica ``r`` of a run with master seed ``s`` uses base ``mix64(s ^ r)``;
* named sub-streams salt the base with a fixed 64-bit constant before
  mixing, e.g. the three edge blocks of the planted sampler.
"""

from __future__ import annotations

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN = 0x9E3779B97F4A7C15

# Salts for named sub-streams (arbitrary fixed odd constants).
SALT_BLOCK_COMMUNITY = 0xC2B2AE3D27D4EB4F
SALT_BLOCK_BRIDGE = 0x165667B19E3779F9
SALT_BLOCK_OUTSIDE = 0x27D4EB2F165667C5
SALT_NODE_PICK = 0x9216D5D98979FB1B


def mix64(z: int) -> int:
    """splitmix64 finalizer on a 64-bit integer."""
    z = (z + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def stream_seed(master_seed: int, index: int) -> int:
    """Base state of sub-stream ``index`` under ``master_seed``."""
    return mix64((master_seed ^ index) & MASK64)


def salted_seed(seed: int, salt: int) -> int:
    """Base state for a named sub-stream."""
    return mix64((seed ^ salt) & MASK64)


def uniform_batch(base: int, start: int, count: int) -> np.ndarray:
    """Draws ``start .. start+count-1`` of stream ``base``, in (0, 1].

    Vectorized counterpart of the scalar draw inside the numba kernels:
    53 high bits of the mixed counter, shifted into (0, 1] so that
    ``log(u)`` is always finite.
    """
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = (np.uint64(base) + idx * np.uint64(GOLDEN)) & np.uint64(MASK64)
    z = (z + np.uint64(GOLDEN)) & np.uint64(MASK64)
    z = ((z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)) & np.uint64(MASK64)
    z = ((z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)) & np.uint64(MASK64)
    z = (z ^ (z >> np.uint64(31))) & np.uint64(MASK64)
    return ((z >> np.uint64(11)).astype(np.float64) + 1.0) * (1.0 / 9007199254740992.0)


def pick_index(seed: int, salt_offset: int, n: int) -> int:
    """Deterministic index in [0, n) for draw ``salt_offset`` of ``seed``."""
    return mix64((seed + salt_offset * GOLDEN) & MASK64) % n
