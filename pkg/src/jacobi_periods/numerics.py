"""Shared numerics: truncation policies, tail bounds, Gauss-Legendre quadrature."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import QuadratureError, TruncationError

POLE_EPS = 1e-8  # uniform pole guard distance


@dataclass(frozen=True)
class TruncationPolicy:
    """Accuracy budget for series summation and quadrature."""

    abs_tol: float = 1e-12
    max_terms: int = 4096
    max_interval: float = 64.0

    def __post_init__(self):
        if self.abs_tol < 1e-14:
            raise ValueError("abs_tol below 1e-14 is not honest in double precision")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")

    def tighter(self, factor: float) -> "TruncationPolicy":
        return TruncationPolicy(max(self.abs_tol * factor, 1e-14), self.max_terms, self.max_interval)


DEFAULT_POLICY = TruncationPolicy()


def gaussian_tail_cutoff(c: float, shift: float, tol: float, max_terms: int,
                         weight_growth: float = 1.0) -> int:
    """Smallest N (by doubling) with sum_{|n|>N} (1+|n|)^w e^{-c(|n|-shift)^2} < tol.

    Conservative geometric-majorant bound; raises TruncationError if the
    budget max_terms is exceeded.
    """
    if c <= 0:
        raise TruncationError(f"nonpositive Gaussian rate c={c}")
    n = 16
    while n <= max_terms:
        t = n - shift
        if t > 0:
            ratio = np.exp(-c * (2 * t + 1))
            if ratio < 0.5:
                bound = 4 * (1 + n) ** weight_growth * np.exp(-c * t * t) / (1 - ratio)
                if bound < tol:
                    return n
        n *= 2
    raise TruncationError(f"tail bound {tol} unreachable within {max_terms} terms")


@lru_cache(maxsize=64)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def integrate_panels(f: Callable[[np.ndarray], np.ndarray], edges: np.ndarray,
                     nodes: int = 16) -> complex:
    """Gauss-Legendre quadrature of a vectorized integrand over panel edges."""
    x, w = _leggauss(nodes)
    a = edges[:-1]
    b = edges[1:]
    half = (b - a) / 2.0
    mid = (a + b) / 2.0
    pts = mid[:, None] + half[:, None] * x[None, :]
    vals = f(pts.ravel()).reshape(pts.shape)
    return complex(np.sum(half[:, None] * w[None, :] * vals))


def adaptive_integrate(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                       abs_tol: float, base_panels: int = 8, nodes: int = 16,
                       max_doublings: int = 10) -> tuple[complex, float]:
    """Integrate f on [a, b], doubling the panel count until stable.

    Returns (value, error_estimate); raises QuadratureError if the target
    accuracy is not reached.
    """
    n_panels = base_panels
    prev = integrate_panels(f, np.linspace(a, b, n_panels + 1), nodes)
    for _ in range(max_doublings):
        n_panels *= 2
        cur = integrate_panels(f, np.linspace(a, b, n_panels + 1), nodes)
        err = abs(cur - prev)
        if err < abs_tol:
            return cur, err
        prev = cur
    raise QuadratureError(f"quadrature on [{a},{b}] stalled at error {abs(cur - prev):.3e}")


def sqrt_principal(w: complex) -> complex:
    """Principal square root, arg in (-pi/2, pi/2]."""
    return complex(np.sqrt(complex(w)))


def cpow(base: complex, expo: float) -> complex:
    """base**expo on the principal branch, arg(base) in (-pi, pi]."""
    return complex(np.exp(expo * np.log(complex(base))))
