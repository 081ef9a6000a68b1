"""Hot-kernel dispatch: compiled extension when available, numpy fallback otherwise.

Set STOCHPOLY_PURE=1 to force the pure lane even when the extension built.
Both lanes implement the same contract and are compared head to head by
``benchmarks/bench_kernels.py`` and the kernel agreement tests.
"""
from __future__ import annotations

import os
from math import gcd
from typing import Sequence

from . import pure

_compiled = None
if not os.environ.get("STOCHPOLY_PURE"):
    try:
        from . import _bareiss as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND: str = _compiled.BACKEND if _compiled is not None else pure.BACKEND


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _compiled is not None else ("pure",)


def rank_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix over the rationals."""
    return pure.rank_int(rows)


def _canonical(
    nc: int, free_cols: Sequence[int], den: int, nums: Sequence[int]
) -> tuple[int, tuple[int, ...]]:
    """Normalize a basic solution to a full-length vector with positive
    denominator in lowest terms, so equal points compare equal."""
    g = abs(den)
    for v in nums:
        g = gcd(g, v)
    if den < 0:
        g = -g
    full = [0] * nc
    for idx, c in enumerate(free_cols):
        full[c] = nums[idx] // g
    return den // g, tuple(full)


def basic_feasible_solutions(
    a_rows: Sequence[Sequence[int]],
    rank: int,
    subset_limit: int | None = None,
    backend: str | None = None,
) -> list[tuple[int, tuple[int, ...]]]:
    """All basic feasible solutions of {A x = 1, x >= 0}, deduplicated.

    Returns a sorted list of (den, numerators) pairs: the solution vector is
    numerators/den with den > 0 and gcd(den, *numerators) = 1. ``backend``
    forces a specific lane ("compiled" or "pure"); default is the lane chosen
    at import time.
    """
    if backend is None:
        backend = BACKEND
    if backend not in available_backends():
        raise ValueError(f"backend {backend!r} not available (have {available_backends()})")
    nc = len(a_rows[0]) if a_rows else 0
    out: set[tuple[int, tuple[int, ...]]] = set()
    if backend == "compiled":
        results, overflowed = _compiled.basic_feasible_solutions(  # type: ignore[union-attr]
            a_rows, rank, subset_limit
        )
        for free, den, nums in results:
            out.add(_canonical(nc, free, den, nums))
        for free in overflowed:
            res = pure.solve_for_free_columns(a_rows, free)
            if res is not None:
                out.add(_canonical(nc, free, res[0], res[1]))
    else:
        for free, den, nums in pure.basic_feasible_solutions(
            a_rows, rank, subset_limit=subset_limit
        ):
            out.add(_canonical(nc, free, den, nums))
    return sorted(out)
