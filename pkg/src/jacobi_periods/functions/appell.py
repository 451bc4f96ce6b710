"""Lerch sums, higher Appell functions and their Mordell-type integral."""

from __future__ import annotations

import numpy as np
from scipy.special import wofz

from ..errors import PoleProximityError, QuadratureError
from ..numerics import (
    DEFAULT_POLICY,
    POLE_EPS,
    TruncationPolicy,
    adaptive_integrate,
    gaussian_tail_cutoff,
    sqrt_principal,
)
from .theta import theta_int, theta_odd

PI = np.pi
PI_I = 1j * np.pi


def lerch_mu(tau: complex, z: complex, w: complex,
             pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Lerch sum mu(tau,z,w) = e^{pi i w}/theta(tau,z) *
    sum_n (-1)^n e^{pi i (n^2+n) tau + 2 pi i n z} / (1 - e^{2 pi i n tau + 2 pi i w}).

    Raises PoleProximityError when theta(tau,z) or any term denominator is
    within the pole guard.
    """
    v = tau.imag
    th = theta_odd(tau, z, pol)
    if abs(th) < POLE_EPS:
        raise PoleProximityError(f"theta(tau,z) = {th:.2e} inside pole guard")
    shift = abs(z.imag) / v + 1.0
    n_cut = gaussian_tail_cutoff(PI * v, shift + 1.0, pol.abs_tol, pol.max_terms)
    ns = np.arange(-n_cut, n_cut + 1)
    den = 1.0 - np.exp(2 * PI_I * ns * tau + 2 * PI_I * w)
    if np.min(np.abs(den)) < POLE_EPS:
        bad = int(ns[int(np.argmin(np.abs(den)))])
        raise PoleProximityError(f"Lerch denominator vanishes near n = {bad}")
    num = (-1.0) ** ns * np.exp(PI_I * (ns * ns + ns) * tau + 2 * PI_I * ns * z)
    return complex(np.exp(PI_I * w) / th * np.sum(num / den))


def appell_K1(tau: complex, z: complex, w: complex,
              pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Level-one Appell sum K1 = sum_m q^{m^2/2} x^m / (1 - x y q^m)."""
    v = tau.imag
    shift = abs(z.imag) / v + 1.0
    n_cut = gaussian_tail_cutoff(PI * v, shift + 1.0, pol.abs_tol, pol.max_terms)
    ms = np.arange(-n_cut, n_cut + 1)
    den = 1.0 - np.exp(2 * PI_I * (z + w) + 2 * PI_I * ms * tau)
    if np.min(np.abs(den)) < POLE_EPS:
        bad = int(ms[int(np.argmin(np.abs(den)))])
        raise PoleProximityError(f"Appell denominator vanishes near m = {bad}")
    num = np.exp(PI_I * ms * ms * tau + 2 * PI_I * ms * z)
    return complex(np.sum(num / den))


def appell_G(tau: complex, z: complex, w: complex,
             pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Appell quotient G = K1 / theta0(tau, z)."""
    th = theta_int("theta0", tau, z, pol)
    if abs(th) < POLE_EPS:
        raise PoleProximityError("theta0(tau,z) inside pole guard")
    return appell_K1(tau, z, w, pol) / th


def _gauss_cauchy(a: complex, above: bool) -> complex:
    """int_R e^{-pi t^2}/(t-a) dt on a fixed branch.

    The value is i pi wofz(sqrt(pi) a) when the pole is kept above the
    contour; wofz is entire, so the same expression continues the branch
    across the axis.  The opposite branch is -i pi wofz(-sqrt(pi) a).
    """
    sa = np.sqrt(PI) * a
    if above:
        return complex(1j * PI * wofz(sa))
    return complex(-1j * PI * wofz(-sa))


def appell_Phi(tau: complex, w: complex, pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Mordell-type integral of the rank-one Appell quotient:

    Phi(tau,w) = -e^{-pi i w^2/tau} int_R e^{-pi x^2}
                 / (1 - e^{-2 pi x sqrt(-i tau) + 2 pi i w}) dx,

    read as the meromorphic function of w fixed by the convention that the
    integrand poles x_k = i(w-k)/sqrt(-i tau) with k <= 0 lie above the
    contour and those with k >= 1 below it.  Poles near the real axis are
    subtracted with a Gaussian window and restored through the Faddeeva
    function on the conventional branch; poles that have crossed to the
    wrong side contribute their full residues.
    """
    s = sqrt_principal(-1j * tau)
    two_pi_i = 2j * PI

    # poles can mismatch the convention or sit near the axis only for k
    # between the base strip and Re(w); a small margin covers both
    k_lo = int(np.floor(min(0.0, w.real))) - 3
    k_hi = int(np.ceil(max(1.0, w.real))) + 3
    ks = np.arange(k_lo, k_hi + 1)
    xk = 1j * (w - ks) / s
    res = np.exp(-PI * xk * xk) / (2 * PI * s)
    near = np.abs(xk.imag) < 0.35
    relevant = np.abs(xk.real) < pol.max_interval

    def regularized(x: np.ndarray) -> np.ndarray:
        val = np.exp(-PI * x * x) / (1.0 - np.exp(-2 * PI * x * s + two_pi_i * w))
        for x0, r in zip(xk[near & relevant], res[near & relevant]):
            val = val - r * np.exp(-PI * (x - x0.real) ** 2) / (x - x0)
        return val

    X = 2.0
    while np.exp(-PI * X * X + 2 * PI * X * (abs(w.imag) / abs(s) + abs(s))) > pol.abs_tol / 8:
        X *= 1.25
        if X > pol.max_interval:
            raise QuadratureError("appell_Phi cutoff exceeded max_interval")
    core, _ = adaptive_integrate(regularized, -X, X, pol.abs_tol / 2,
                                 base_panels=int(max(16, X)))

    for k, x0, r, is_near in zip(ks, xk, res, near):
        if not (abs(x0.real) < pol.max_interval):
            continue
        canonical_above = k <= 0
        if is_near:
            a = 1j * x0.imag
            core += r * _gauss_cauchy(a, canonical_above)
        else:
            actually_above = x0.imag > 0
            if canonical_above and not actually_above:
                core += two_pi_i * r
            elif actually_above and not canonical_above:
                core -= two_pi_i * r
    return complex(-np.exp(-PI_I * w * w / tau) * core)


def alpha(variant: int, a: float, b: float, tau: complex,
          pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """alpha_variant^{a,b}(tau) = sum (n + a/2) e^{2 pi i n^2 tau + 2 pi i n (a tau + b)},
    over n in Z (variant 0) or n in 1/2+Z (variant 1)."""
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    v = tau.imag
    n_cut = gaussian_tail_cutoff(2 * PI * v, abs(a) / 2.0 + 1.0, pol.abs_tol,
                                 pol.max_terms, weight_growth=1.0)
    ns = np.arange(-n_cut, n_cut + 1) + (0.5 if variant == 1 else 0.0)
    terms = (ns + a / 2.0) * np.exp(2 * PI_I * ns * ns * tau + 2 * PI_I * ns * (a * tau + b))
    return complex(np.sum(terms))
