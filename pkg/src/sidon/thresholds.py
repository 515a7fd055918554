"""Max-min tuning of the two-interval classification thresholds.

``guarantee_at`` evaluates the honest worst-case guarantee coefficient when
instances are routed by thresholds (alpha0, beta0): the minimum over the
per-case worst values, where the two split-construction cases are minimized
over their whole instance regions (their closed forms are monotone, so the
infima sit at region corners).  ``optimize_thresholds`` maximizes that
minimum over a grid with local refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .core import PreconditionError

CASE_LABELS = ("case_i", "case_ii", "case_iii_a", "case_iii_b", "case_iii_c")

_ACTIVE_EPS = 1e-12
_REFINE_STEP = 1e-6


@dataclass(frozen=True)
class ThresholdPoint:
    alpha0: float
    beta0: float
    guarantee: float
    active_cases: tuple[str, ...]


def _check_domain(alpha0: float, beta0: float) -> None:
    if not 0 < alpha0 <= 1:
        raise PreconditionError(f"alpha0 must be in (0, 1], got {alpha0}")
    if beta0 < 0:
        raise PreconditionError(f"beta0 must be nonnegative, got {beta0}")


def case_bounds(alpha0: float, beta0: float) -> dict[str, float]:
    """The five closed-form case guarantees evaluated at (alpha0, beta0)."""
    _check_domain(alpha0, beta0)
    return {
        "case_i": 1 / sqrt(1 + alpha0),
        "case_ii": sqrt((1 + alpha0) / (1 + alpha0 + beta0)),
        "case_iii_a": 1.0,
        "case_iii_b": sqrt((1 + 2 * alpha0 + beta0) / (2 * (1 + alpha0))),
        "case_iii_c": sqrt(2 * (1 + alpha0 + beta0) / (3 * (1 + alpha0))),
    }


def region_minima(alpha0: float, beta0: float) -> dict[str, float]:
    """Worst guarantee per case over that case's instance region.

    The split cases only exist for beta0 < 1.  Their forms are monotone:
    the moderate-separation form increases in both variables, so its
    infimum sits at (alpha0, max(beta0, 2*alpha0 - 1)); the
    barely-separated form decreases in alpha and increases in beta, so its
    infimum sits at alpha = 1, beta = beta0.
    """
    _check_domain(alpha0, beta0)
    values = {
        "case_i": 1 / sqrt(1 + alpha0),
        "case_ii": sqrt((1 + alpha0) / (1 + alpha0 + beta0)),
        "case_iii_a": 1.0,
    }
    if beta0 < 1 and alpha0 < 1:
        b_eff = max(beta0, 2 * alpha0 - 1)
        values["case_iii_b"] = sqrt((1 + 2 * alpha0 + b_eff) / (2 * (1 + alpha0)))
    if beta0 < 1:
        values["case_iii_c"] = sqrt((2 + beta0) / 3)
    return values


def guarantee_at(alpha0: float, beta0: float) -> ThresholdPoint:
    values = region_minima(alpha0, beta0)
    worst = min(values.values())
    active = tuple(
        label for label in CASE_LABELS
        if label in values and values[label] <= worst + _ACTIVE_EPS
    )
    return ThresholdPoint(alpha0, beta0, worst, active)


def guarantee_surface(alphas: np.ndarray, betas: np.ndarray) -> np.ndarray:
    """Vectorized guarantee_at over an alpha x beta grid."""
    a = np.asarray(alphas, dtype=float)[:, None]
    b = np.asarray(betas, dtype=float)[None, :]
    if np.any(a <= 0) or np.any(a > 1) or np.any(b < 0):
        raise PreconditionError("grid outside (0,1] x [0,inf)")
    ci = 1 / np.sqrt(1 + a)
    cii = np.sqrt((1 + a) / (1 + a + b))
    b_eff = np.maximum(b, 2 * a - 1)
    iiib = np.where(
        (b < 1) & (a < 1),
        np.sqrt((1 + 2 * a + b_eff) / (2 * (1 + a))),
        np.inf,
    )
    iiic = np.where(b < 1, np.sqrt((2 + b) / 3), np.inf)
    ones = np.ones(np.broadcast_shapes(a.shape, b.shape))
    return np.minimum.reduce([ci * ones, cii, ones, iiib, iiic * ones])


def grid_values(lo: float, hi: float, step: float) -> np.ndarray:
    """Inclusive arithmetic grid; the endpoint is kept within 1e-9 slack."""
    if hi < lo:
        raise PreconditionError("empty grid")
    count = int((hi - lo) / step + 1e-9) + 1
    return np.array([lo + i * step for i in range(count)])


def optimize_thresholds(
    grid_step: float = 0.001,
    alpha_range: tuple[float | None, float] = (None, 1.0),
    beta_range: tuple[float, float] = (0.0, 2.0),
) -> ThresholdPoint:
    """Grid search over (alpha0, beta0) followed by pattern refinement.

    The scan keeps the first maximizer in row-major order (alpha outer);
    refinement halves the step down to 1e-6 and never leaves the ranges.
    """
    if not 0 < grid_step <= 0.01:
        raise PreconditionError("grid_step must be in (0, 0.01]")
    a_lo = grid_step if alpha_range[0] is None else alpha_range[0]
    a_hi = alpha_range[1]
    b_lo, b_hi = beta_range
    if not 0 < a_lo <= a_hi <= 1 or not 0 <= b_lo <= b_hi:
        raise PreconditionError("bad threshold ranges")
    alphas = grid_values(a_lo, a_hi, grid_step)
    betas = grid_values(b_lo, b_hi, grid_step)
    surface = guarantee_surface(alphas, betas)
    flat = int(np.argmax(surface))
    i, j = divmod(flat, len(betas))
    a, b = float(alphas[i]), float(betas[j])
    val = guarantee_at(a, b).guarantee

    step = grid_step
    while step > _REFINE_STEP:
        best_move = None
        best_val = val
        for da, db in (
            (step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step),
            (step, step), (step, -step), (-step, step), (-step, -step),
        ):
            na = min(max(a + da, a_lo), a_hi)
            nb = min(max(b + db, b_lo), b_hi)
            nv = guarantee_at(na, nb).guarantee
            if nv > best_val:
                best_move, best_val = (na, nb), nv
        if best_move is None:
            step /= 2
        else:
            a, b = best_move
            val = best_val
    return guarantee_at(a, b)
