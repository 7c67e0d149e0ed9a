"""Closed-form quadratic score distributions.

The quadratic family describes the tail of the score distribution produced
by random search over a smooth deterministic objective.  Its CDF rises from
the best achievable score like a power of the distance to that score:
``F(y) = ((y - alpha) / (beta - alpha)) ** (gamma / 2)`` for the convex
variant, supported on ``[alpha, beta]``.  The concave variant is its mirror
image through the upper support edge and plays the same role for
maximization.

Parameters map onto properties of the underlying search problem: ``alpha``
is the best possible score, ``beta`` sets how concentrated probability is
near it, and ``gamma`` acts as the effective number of hyperparameters
being searched.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = ["Variant", "QuadraticDistribution"]


class Variant(enum.Enum):
    """Tail orientation of a quadratic-family distribution."""

    CONVEX = "convex"
    CONCAVE = "concave"


def _as_float_array(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def _maybe_scalar(arr: np.ndarray, scalar: bool):
    return float(arr) if scalar else arr


@dataclass(frozen=True)
class QuadraticDistribution:
    """Three-parameter power-law distribution on ``[alpha, beta]``.

    Parameters
    ----------
    alpha : float
        Lower support edge.  For the convex variant this is the best
        possible score under minimization.
    beta : float
        Upper support edge.  Must satisfy ``alpha < beta``.
    gamma : float
        Positive shape parameter; the effective number of hyperparameters.
        ``gamma = 2`` gives the uniform distribution for either variant.
    variant : Variant
        ``Variant.CONVEX`` for left tails (minimization), ``Variant.CONCAVE``
        for right tails (maximization).
    """

    alpha: float
    beta: float
    gamma: float
    variant: Variant = Variant.CONVEX

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise ValueError(f"{name} must be a finite number")
            object.__setattr__(self, name, float(value))
        if not self.alpha < self.beta:
            raise ValueError("alpha must be strictly less than beta")
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")
        if not isinstance(self.variant, Variant):
            raise ValueError("variant must be a Variant member")

    @property
    def width(self) -> float:
        return self.beta - self.alpha

    def cdf(self, y):
        """Cumulative distribution function.

        Accepts a scalar or array of scores and returns probabilities of the
        same shape.  Values at the support edges are in-support: the CDF is
        exactly 0 at ``alpha`` and 1 at ``beta``.
        """
        arr = _as_float_array(y, "y")
        scalar = arr.ndim == 0
        if self.variant is Variant.CONVEX:
            z = np.clip((arr - self.alpha) / self.width, 0.0, 1.0)
            out = z ** (self.gamma / 2.0)
        else:
            z = np.clip((self.beta - arr) / self.width, 0.0, 1.0)
            out = 1.0 - z ** (self.gamma / 2.0)
        return _maybe_scalar(out, scalar)

    def pdf(self, y):
        """Probability density function.

        Zero outside ``[alpha, beta]``.  For the convex variant with
        ``gamma < 2`` the density diverges at ``alpha`` and positive
        infinity is returned there (mirrored at ``beta`` for concave).
        """
        arr = _as_float_array(y, "y")
        scalar = arr.ndim == 0
        if self.variant is Variant.CONVEX:
            z = (arr - self.alpha) / self.width
        else:
            z = (self.beta - arr) / self.width
        inside = (z >= 0.0) & (z <= 1.0)
        coeff = self.gamma / (2.0 * self.width)
        exponent = (self.gamma - 2.0) / 2.0
        with np.errstate(divide="ignore"):
            # 0 ** negative -> inf is the documented edge behaviour.
            body = np.where(inside, z, 1.0) ** exponent
        out = np.where(inside, coeff * body, 0.0)
        return _maybe_scalar(out, scalar)

    def quantile(self, p):
        """Inverse CDF, exact on ``[alpha, beta]``.

        ``p`` must lie in ``[0, 1]``.
        """
        arr = np.asarray(p, dtype=float)
        if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
            raise ValueError("p must lie in [0, 1]")
        scalar = arr.ndim == 0
        if self.variant is Variant.CONVEX:
            out = self.alpha + self.width * arr ** (2.0 / self.gamma)
        else:
            out = self.beta - self.width * (1.0 - arr) ** (2.0 / self.gamma)
        return _maybe_scalar(out, scalar)

    def sample(self, n: int, seed) -> np.ndarray:
        """Draw ``n`` values by inverse-transform sampling.

        Deterministic for a given ``seed``; every draw lies in
        ``[alpha, beta]``.
        """
        if n < 0:
            raise ValueError("n must be nonnegative")
        rng = np.random.default_rng(seed)
        u = rng.random(int(n))
        return np.asarray(self.quantile(u), dtype=float)
