"""Growth-rate estimates for ``[q^n] xi0(q) ~ A mu^n n^(-3/2)``.

The ratios ``r_n = c_(n+1) / c_n`` behave like ``mu (1 - 3/(2n) + O(n^-2))``,
so iterated Richardson extrapolation in ``1/n`` removes the power-law
corrections one order at a time.  Arithmetic is done in mpmath at a working
precision of at least 50 digits, overridable with ``THETA_ROOT_PRECISION``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import mpmath

from .series import QSeries

PRECISION_ENV = "THETA_ROOT_PRECISION"
DEFAULT_DIGITS = 60
MIN_DIGITS = 50

#: Growth constant of the coefficients of xi0, as published (64 digits).
MU_REFERENCE = "3.2336366652450763163646925293871348350211819091413196994020357434"

MODEL_EXPONENT = mpmath.mpf(-3) / 2


def working_digits() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return DEFAULT_DIGITS
    try:
        digits = int(raw)
    except ValueError:
        raise ValueError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    return max(digits, MIN_DIGITS)


@dataclass(frozen=True)
class GrowthEstimate:
    mu: mpmath.mpf
    n_used: tuple[int, int]
    residual: mpmath.mpf
    model_exponent: mpmath.mpf = MODEL_EXPONENT
    depth: int = 3

    def to_dict(self, digits: int = 20) -> dict:
        return {
            "mu": mpmath.nstr(self.mu, digits),
            "residual": mpmath.nstr(self.residual, 5),
            "window": list(self.n_used),
            "model_exponent": mpmath.nstr(self.model_exponent, 5),
            "depth": self.depth,
            "reference": MU_REFERENCE,
        }


def _check_window(coeffs, window: tuple[int, int]) -> tuple[int, int]:
    lo, hi = int(window[0]), int(window[1])
    if lo < 1 or hi <= lo:
        raise ValueError(f"window must satisfy 1 <= lo < hi, got {window}")
    order = coeffs.order if isinstance(coeffs, QSeries) else len(coeffs) - 1
    if hi > order:
        raise ValueError("insufficient coefficients")
    if any(coeffs[n] <= 0 for n in range(lo, hi + 1)):
        raise ValueError("model violated")
    return lo, hi


def richardson(values: list, ns: list[int], depth: int) -> list[list]:
    """Iterated Richardson table for ``s_n = L + a1/n + a2/n^2 + ...``.

    ``table[k][i]`` combines ``values[i .. i+k]``; ``ns`` must be consecutive.
    """
    table = [list(values)]
    for k in range(1, depth + 1):
        prev = table[-1]
        table.append([((ns[i] + k) * prev[i + 1] - ns[i] * prev[i]) / k for i in range(len(prev) - 1)])
    return table


def estimate_mu(coeffs, window: tuple[int, int], depth: int = 3) -> GrowthEstimate:
    """Extrapolate the ratio sequence over ``window`` to estimate ``mu``.

    The estimate is the depth-``depth`` Richardson value at the outer end of
    the window; ``residual`` is how far the last extrapolation level moved it.
    """
    lo, hi = _check_window(coeffs, window)
    if hi - lo < depth + 1:
        raise ValueError("window too short for the requested extrapolation depth")
    with mpmath.workdps(working_digits()):
        ns = list(range(lo, hi))
        ratios = [mpmath.mpf(coeffs[n + 1]) / mpmath.mpf(coeffs[n]) for n in ns]
        table = richardson(ratios, ns, depth)
        mu = table[depth][-1]
        residual = abs(mu - table[depth - 1][-1]) if depth else mpmath.mpf(0)
        return GrowthEstimate(mu=+mu, n_used=(lo, hi), residual=+residual, depth=depth)


def _amplitudes(coeffs, mu, lo: int, hi: int) -> list:
    mu = mpmath.mpf(mu)
    return [mpmath.mpf(coeffs[n]) * mu ** (-n) * mpmath.mpf(n) ** mpmath.mpf(1.5) for n in range(lo, hi + 1)]


def amplitude_estimate(coeffs, mu, window: tuple[int, int], depth: int = 2) -> mpmath.mpf:
    """Extrapolated limit of ``c_n mu^(-n) n^(3/2)`` over ``window``."""
    lo, hi = _check_window(coeffs, window)
    with mpmath.workdps(working_digits()):
        amps = _amplitudes(coeffs, mu, lo, hi)
        depth = min(depth, len(amps) - 1)
        return +richardson(amps, list(range(lo, hi + 1)), depth)[depth][-1]


def amplitude_drift(coeffs, mu, window: tuple[int, int]) -> mpmath.mpf:
    """Relative change of ``c_n mu^(-n) n^(3/2)`` across the outer half of ``window``.

    Small when the square-root model fits; of order one or larger when it
    does not (for instance a pure geometric sequence).
    """
    lo, hi = _check_window(coeffs, window)
    mid = (lo + hi) // 2
    with mpmath.workdps(working_digits()):
        a_mid, a_hi = _amplitudes(coeffs, mu, mid, mid)[0], _amplitudes(coeffs, mu, hi, hi)[0]
        return abs(a_hi - a_mid) / abs(a_hi)
