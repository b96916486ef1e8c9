"""Central finite differences with Richardson extrapolation.

Used by the verification oracles, never by the production evaluators.

    >>> import numpy as np
    >>> d, err = richardson_derivative(np.sin, 0.3)
    >>> abs(d - np.cos(0.3)) < 1e-12
    True
"""

from __future__ import annotations

from typing import Callable

import numpy as np

__all__ = ["richardson_derivative", "partial", "default_step"]


def default_step(x: float, rel: float = 1e-2) -> float:
    return rel * max(1.0, abs(x))


def richardson_derivative(
    f: Callable[[float], np.ndarray | float],
    x: float,
    h: float | None = None,
    ntab: int = 10,
    shrink: float = 1.4,
) -> tuple[np.ndarray | float, float]:
    """Ridders' extrapolation of central differences.

    Starts from step ``h`` (default ``1e-2 * max(1, |x|)``) and shrinks it by
    ``shrink`` on every row of the tableau. Returns the best estimate and its
    error estimate. Works for vector-valued ``f``.
    """
    if h is None:
        h = default_step(x)
    con2 = shrink * shrink
    a = [[None] * ntab for _ in range(ntab)]
    a[0][0] = (np.asarray(f(x + h)) - np.asarray(f(x - h))) / (2.0 * h)
    best = a[0][0]
    err = np.inf
    for i in range(1, ntab):
        h /= shrink
        a[0][i] = (np.asarray(f(x + h)) - np.asarray(f(x - h))) / (2.0 * h)
        fac = con2
        for j in range(1, i + 1):
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0)
            fac *= con2
            errt = max(
                np.max(np.abs(a[j][i] - a[j - 1][i])),
                np.max(np.abs(a[j][i] - a[j - 1][i - 1])),
            )
            if errt <= err:
                err = errt
                best = a[j][i]
        if np.max(np.abs(a[i][i] - a[i - 1][i - 1])) >= 2.0 * err:
            break
    return best, float(err)


def partial(f: Callable[[np.ndarray], np.ndarray | float], x, k: int, **kw):
    """Derivative of ``f`` with respect to component ``k`` of the vector ``x``."""
    x = np.asarray(x, dtype=float)

    def g(xk):
        y = x.copy()
        y[k] = xk
        return f(y)

    d, _ = richardson_derivative(g, float(x[k]), **kw)
    return d
