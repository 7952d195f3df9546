"""Backend dispatch for the hot kernels.

``PPRLAB_BACKEND=numpy`` forces the pure-numpy fallbacks; anything else
(or unset) selects the numba-compiled kernels when numba imports cleanly.
Both backends consume identical random streams, so sampled graphs do not
depend on the choice; floating-point score vectors may differ at the last
few ulps because summation order differs.
"""

from __future__ import annotations

import os

from . import numpy_impl

_requested = os.environ.get("PPRLAB_BACKEND", "numba").strip().lower()

if _requested == "numpy":
    _impl = numpy_impl
    BACKEND = "numpy"
else:
    try:
        from . import numba_impl as _impl
        BACKEND = "numba"
    except ImportError:
        _impl = numpy_impl
        BACKEND = "numpy"

geometric_positions = _impl.geometric_positions
transition_matvec = _impl.transition_matvec
ppr_fixed_point = _impl.ppr_fixed_point
ppr_partial_sum = _impl.ppr_partial_sum
push_scores = _impl.push_scores
sweep_prefix_conductance = _impl.sweep_prefix_conductance
walk_apply = _impl.walk_apply
walk_apply_t = _impl.walk_apply_t

__all__ = [
    "BACKEND",
    "geometric_positions",
    "transition_matvec",
    "ppr_fixed_point",
    "ppr_partial_sum",
    "push_scores",
    "sweep_prefix_conductance",
    "walk_apply",
    "walk_apply_t",
    "numpy_impl",
]
