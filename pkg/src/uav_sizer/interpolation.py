"""One-dimensional interpolants over strictly increasing knots.

Both kinds reproduce the knots exactly and refuse to extrapolate; callers
check the domain first. The cubic kind is the Fritsch-Butland variant of
PCHIP: derivatives are weighted harmonic means of neighbouring secants,
zeroed at local extrema, so monotone data gives a monotone interpolant that
never leaves the range of the two bracketing knots.
"""
from __future__ import annotations

from bisect import bisect_right

import numpy as np

LINEAR = "linear"
MONOTONE_CUBIC = "monotone-cubic"
KINDS = (LINEAR, MONOTONE_CUBIC)


def _edge_slope(h0, h1, m0, m1):
    # three-point one-sided estimate, then clamped to keep the shape
    d = ((2 * h0 + h1) * m0 - h0 * m1) / (h0 + h1)
    if np.sign(d) != np.sign(m0):
        return 0.0
    if np.sign(m0) != np.sign(m1) and abs(d) > abs(3 * m0):
        return 3 * m0
    return d


def pchip_slopes(x, y):
    """Knot derivatives for a shape-preserving piecewise cubic Hermite."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    h = np.diff(x)
    m = np.diff(y) / h
    n = len(x)
    d = np.zeros(n)
    if n == 2:
        d[:] = m[0]
        return d

    w1 = 2 * h[1:] + h[:-1]
    w2 = h[1:] + 2 * h[:-1]
    same_sign = (np.sign(m[:-1]) * np.sign(m[1:])) > 0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        harmonic = (w1 + w2) / (w1 / m[:-1] + w2 / m[1:])
    d[1:-1] = np.where(same_sign, harmonic, 0.0)
    d[0] = _edge_slope(h[0], h[1], m[0], m[1])
    d[-1] = _edge_slope(h[-1], h[-2], m[-1], m[-2])
    return d


class Interpolant:
    """Piecewise interpolant through ``(x[i], y[i])``; ``kind`` selects the scheme."""

    def __init__(self, x, y, kind=LINEAR):
        if kind not in KINDS:
            raise ValueError(f"unknown interpolation kind {kind!r}; use one of {KINDS}")
        self.x = np.asarray(x, dtype=float)
        self.y = np.asarray(y, dtype=float)
        if self.x.ndim != 1 or self.x.shape != self.y.shape or len(self.x) < 2:
            raise ValueError("x and y must be 1-D arrays of equal length >= 2")
        if np.any(np.diff(self.x) <= 0):
            raise ValueError("x must be strictly increasing")
        self.kind = kind
        self.slopes = pchip_slopes(self.x, self.y) if kind == MONOTONE_CUBIC else None
        self._coef = None if self.slopes is None else self._shape_coefficients()
        # plain-float copies for the scalar path used by root finding
        self._xs = self.x.tolist()
        self._ys = self.y.tolist()
        self._cs = None if self._coef is None else self._coef.T.tolist()

    def _shape_coefficients(self):
        # per segment: y0 + dy * t * (c1 + t * (c2 + t * c3)); scaling by dy
        # avoids cancellation between nearly equal large knot values
        h = np.diff(self.x)
        dy = np.diff(self.y)
        with np.errstate(divide="ignore", invalid="ignore"):
            a = np.where(dy != 0, h * self.slopes[:-1] / dy, 0.0)
            b = np.where(dy != 0, h * self.slopes[1:] / dy, 0.0)
        return np.array([a, 3 - 2 * a - b, a + b - 2])

    @property
    def domain(self):
        return float(self.x[0]), float(self.x[-1])

    def segment(self, xq):
        """Index i such that x[i] <= xq <= x[i+1] (last segment for xq == x[-1])."""
        i = np.searchsorted(self.x, xq, side="right") - 1
        return np.clip(i, 0, len(self.x) - 2)

    def segment_value(self, i, xq):
        """Value on segment ``i`` at a point known to lie inside it (no checks)."""
        x0, x1 = self._xs[i], self._xs[i + 1]
        y0, y1 = self._ys[i], self._ys[i + 1]
        if xq == x0:
            return y0
        if xq == x1:
            return y1
        t = (xq - x0) / (x1 - x0)
        if self._cs is None:
            return y0 + (y1 - y0) * t
        c1, c2, c3 = self._cs[i]
        s = min(max(t * (c1 + t * (c2 + t * c3)), 0.0), 1.0)
        v = y0 + (y1 - y0) * s
        return min(max(v, min(y0, y1)), max(y0, y1))

    def __call__(self, xq):
        lo, hi = self.domain
        if np.ndim(xq) == 0:
            v = float(xq)
            if not lo <= v <= hi:
                raise ValueError(f"query outside interpolation domain [{lo:g}, {hi:g}]")
            i = min(bisect_right(self._xs, v) - 1, len(self._xs) - 2)
            return self.segment_value(i, v)
        xq = np.asarray(xq, dtype=float)
        if np.any((xq < lo) | (xq > hi)) or np.any(np.isnan(xq)):
            raise ValueError(f"query outside interpolation domain [{lo:g}, {hi:g}]")
        i = self.segment(xq)
        x0, x1 = self.x[i], self.x[i + 1]
        y0, y1 = self.y[i], self.y[i + 1]
        t = (xq - x0) / (x1 - x0)
        if self.kind == LINEAR:
            out = y0 + (y1 - y0) * t
        else:
            c1, c2, c3 = self._coef[:, i]
            s = np.clip(t * (c1 + t * (c2 + t * c3)), 0.0, 1.0)
            out = y0 + (y1 - y0) * s
            # guard against rounding pushing past the bracketing knots
            out = np.clip(out, np.minimum(y0, y1), np.maximum(y0, y1))
        # exact at knots regardless of rounding in the segment formula
        at_right = xq == x1
        out = np.where(xq == x0, y0, np.where(at_right, y1, out))
        return out
