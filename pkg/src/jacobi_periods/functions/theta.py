"""Theta series and the Dedekind eta function, with honest tail bounds."""

from __future__ import annotations

import numpy as np

from ..errors import TruncationError
from ..numerics import DEFAULT_POLICY, TruncationPolicy, gaussian_tail_cutoff

PI_I = 1j * np.pi


def _half_integer_range(n: int) -> np.ndarray:
    """nu in 1/2 + Z with |nu| <= n + 1/2."""
    return np.arange(-n, n + 1) + 0.5


def theta_odd(tau: complex, z: complex, pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Odd Jacobi theta: sum over nu in 1/2+Z of e^{pi i nu^2 tau + 2 pi i nu (z+1/2)}.

    Vanishes exactly on z in Z tau + Z; odd in z.
    """
    v = tau.imag
    y = z.imag
    # |term| = e^{-pi v nu^2 - 2 pi nu y}: Gaussian centred at -y/v
    n = gaussian_tail_cutoff(np.pi * v, abs(y) / v + 1.0, pol.abs_tol, pol.max_terms)
    nu = _half_integer_range(n)
    terms = np.exp(PI_I * nu * nu * tau + 2 * PI_I * nu * (z + 0.5))
    return complex(np.sum(terms))


def theta_int(kind: str, tau: complex, z: complex,
              pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """theta0 (n in Z) or theta1 (n in 1/2+Z): sum of e^{pi i n^2 tau + 2 pi i n z}."""
    v = tau.imag
    y = z.imag
    n_cut = gaussian_tail_cutoff(np.pi * v, abs(y) / v + 1.0, pol.abs_tol, pol.max_terms)
    if kind == "theta0":
        n = np.arange(-n_cut, n_cut + 1)
    elif kind == "theta1":
        n = _half_integer_range(n_cut)
    else:
        raise ValueError(f"kind must be 'theta0' or 'theta1', got {kind!r}")
    return complex(np.sum(np.exp(PI_I * n * n * tau + 2 * PI_I * n * z)))


def theta_ml(m: int, ell: int, tau: complex, z: complex,
             pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Congruence theta: sum over r = ell mod 2m of q^{r^2/4m} xi^r."""
    if m < 1 or int(m) != m:
        raise ValueError("index m must be a positive integer")
    v = tau.imag
    y = z.imag
    # |term| = e^{-pi v r^2/(2m) - 2 pi r y}
    r_cut = gaussian_tail_cutoff(np.pi * v / (2 * m), 2 * m * abs(y) / v + 2 * m,
                                 pol.abs_tol, pol.max_terms)
    k = np.arange(-(r_cut + abs(ell)) // (2 * m) - 1, (r_cut + abs(ell)) // (2 * m) + 2)
    r = ell + 2 * m * k
    return complex(np.sum(np.exp(PI_I * r * r * tau / (2 * m) + 2 * PI_I * r * z)))


def eta(tau: complex, pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Dedekind eta, q^{1/24} prod (1-q^n), via the convergent finite product."""
    v = tau.imag
    q = np.exp(2j * np.pi * tau)
    absq = abs(q)
    if absq >= 1.0:
        raise TruncationError("eta product needs Im tau > 0")
    # tail of log-product bounded by |q|^{N+1}/(1-|q|)
    n = 1
    while absq ** (n + 1) / (1 - absq) > pol.abs_tol:
        n += 1
        if n > pol.max_terms:
            raise TruncationError("eta product did not converge within max_terms")
    ns = np.arange(1, n + 1)
    prod = np.prod(1.0 - q ** ns)
    return complex(np.exp(PI_I * tau / 12.0) * prod)


def eta_pentagonal(tau: complex, pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Euler pentagonal-number series for eta; an independent cross-check."""
    q = np.exp(2j * np.pi * tau)
    absq = abs(q)
    n = 1
    while absq ** (n * (3 * n - 1) / 2) > pol.abs_tol * (1 - absq):
        n += 1
        if n > pol.max_terms:
            raise TruncationError("pentagonal series did not converge")
    ks = np.arange(-n, n + 1)
    expo = ks * (3 * ks - 1) / 2.0
    series = np.sum((-1.0) ** ks * q ** expo)
    return complex(np.exp(PI_I * tau / 12.0) * series)
