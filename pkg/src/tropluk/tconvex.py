"""Tropical convex combinations, hull membership and extreme points.

A tropical convex combination of points ``v1..vm`` is ``max_mu (c_mu + v_mu)``
with ``max_mu c_mu = 0``.  Membership is decided by the greatest normalized
subsolution: any valid coefficient vector is dominated by
``c_mu = min(0, min_i (x_i - v_mu_i))``, so x is in the hull iff these
coefficients reconstruct it and one of them is 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import DimensionError, NormalizationError
from .linalg import TropVector
from .scalar import BOTTOM, TOP, ZERO, format_scalar, to_scalar


def _as_vector(p):
    return p if isinstance(p, TropVector) else TropVector(p)


def _common_dim(points):
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionError(f"points of different dimensions {sorted(dims)}")
    return dims.pop() if dims else None


def trop_convex_combine(points, coeffs):
    """``max_mu (coeffs[mu] + points[mu])``; the coefficients must peak at 0."""
    points = [_as_vector(p) for p in points]
    coeffs = [to_scalar(c) for c in coeffs]
    if len(points) != len(coeffs):
        raise DimensionError(f"{len(points)} points but {len(coeffs)} coefficients")
    if not points:
        raise NormalizationError("an empty combination has no normalized coefficients")
    if TOP in coeffs:
        raise NormalizationError("coefficient +inf is not allowed")
    if max(coeffs) != 0:
        raise NormalizationError(f"coefficients peak at {format_scalar(max(coeffs))}, not 0")
    n = _common_dim(points)
    out = [BOTTOM] * n
    for c, p in zip(coeffs, points):
        if c == BOTTOM:
            continue
        for i, v in enumerate(p):
            if v != BOTTOM and c + v > out[i]:
                out[i] = c + v
    return TropVector(out)


@dataclass(frozen=True)
class HullVerdict:
    """Membership outcome.

    ``coeffs`` are the greatest normalized subsolution coefficients (always
    reported).  A non-member has either a ``witness`` coordinate that the
    reconstruction undershoots, or ``witness=None`` when the reconstruction
    matches only because every coefficient is negative.
    """

    member: bool
    coeffs: tuple
    witness: int = None


def hull_membership(x, points):
    x = _as_vector(x)
    points = [_as_vector(p) for p in points]
    if not points:
        return HullVerdict(False, (), 0 if len(x) else None)
    if _common_dim(points) != len(x):
        raise DimensionError(f"point of dimension {len(x)} against hull of dimension {len(points[0])}")
    coeffs = []
    for p in points:
        c = ZERO
        for xi, vi in zip(x, p):
            if vi != BOTTOM and xi - vi < c:
                c = xi - vi
        coeffs.append(c)
    rebuilt = [BOTTOM] * len(x)
    for c, p in zip(coeffs, points):
        for i, v in enumerate(p):
            if v != BOTTOM and c + v > rebuilt[i]:
                rebuilt[i] = c + v
    for i, (r, xi) in enumerate(zip(rebuilt, x)):
        if r != xi:
            return HullVerdict(False, tuple(coeffs), i)
    return HullVerdict(max(coeffs) == 0, tuple(coeffs))


def _scale_exact(values):
    """Common denominator of finite rationals and an integer dtype that holds them."""
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    big = max((abs(Fraction(v)) for v in values), default=ZERO) * den
    dtype = np.int64 if big < 2**60 else object
    return den, dtype


def hull_membership_mask(xs, points):
    """Vectorized exact membership of many points in one hull.

    ``xs`` is an ``(N, n)`` array-like of finite rationals (Fractions, ints or
    exact strings); ``points`` are finite generators.  Returns a boolean array
    of length N agreeing entrywise with :func:`hull_membership`.
    """
    gens = [_as_vector(p) for p in points]
    rows = [[to_scalar(v) for v in row] for row in xs]
    if not gens:
        return np.zeros(len(rows), dtype=bool)
    for g in gens:
        if not g.is_finite():
            raise ValueError("batch membership needs finite generators")
    flat = [v for row in rows for v in row] + [v for g in gens for v in g]
    den, dtype = _scale_exact(flat)

    def scaled(seq):
        return [int(v * den) for v in seq]

    X = np.array([scaled(r) for r in rows], dtype=dtype).reshape(len(rows), len(gens[0]))
    V = np.array([scaled(g) for g in gens], dtype=dtype)
    # coefficient of each generator for each point, clipped at 0
    C = np.minimum((X[:, None, :] - V[None, :, :]).min(axis=2), 0)
    rebuilt = (C[:, :, None] + V[None, :, :]).max(axis=1)
    return (rebuilt == X).all(axis=1) & (C.max(axis=1) == 0)


def minimal_generators(points):
    """Drop duplicates and every point lying in the hull of the others.

    Order of the survivors follows their first appearance.
    """
    kept = []
    for p in (_as_vector(p) for p in points):
        if p not in kept:
            kept.append(p)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and hull_membership(kept[i], others).member:
            kept.pop(i)
        else:
            i += 1
    return kept


__all__ = [
    "HullVerdict",
    "hull_membership",
    "hull_membership_mask",
    "minimal_generators",
    "trop_convex_combine",
]
