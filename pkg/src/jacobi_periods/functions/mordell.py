"""The Mordell cosh integral, the completed indefinite theta R, and relatives."""

from __future__ import annotations

import numpy as np
from scipy.special import erfc, erfcx

from ..errors import QuadratureError, TruncationError
from ..numerics import (
    DEFAULT_POLICY,
    TruncationPolicy,
    adaptive_integrate,
    gaussian_tail_cutoff,
)

PI = np.pi
PI_I = 1j * np.pi


def beta_fn(x: float, pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """beta(x) = int_x^inf u^{-1/2} e^{-pi u} du, for x >= 0; value in [0, 1].

    Substituting u = s^2 removes the endpoint singularity:
    beta(x) = 2 int_{sqrt(x)}^inf e^{-pi s^2} ds.
    """
    if x < 0:
        raise ValueError("beta_fn requires x >= 0")
    s0 = np.sqrt(x)
    span = 1.0
    # Gaussian tail after the cutoff: 2 int_S^inf e^{-pi s^2} ds <= e^{-pi S^2}/S for S >= 1
    while np.exp(-PI * (s0 + span) ** 2) / max(s0 + span, 1.0) > pol.abs_tol / 2:
        span *= 2
        if span > pol.max_interval:
            raise QuadratureError("beta_fn cutoff exceeded max_interval")
    val, _ = adaptive_integrate(lambda s: 2.0 * np.exp(-PI * s * s), s0, s0 + span,
                                pol.abs_tol / 2)
    return float(val.real)


def E_fn(z: float, pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """E(z) = sgn(z)(1 - beta(z^2)); odd, with the sgn(0) = 0 convention."""
    if z == 0:
        return 0.0
    return float(np.sign(z) * (1.0 - beta_fn(z * z, pol)))


def zwegers_R(tau: complex, z: complex, pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Completed indefinite-theta series

    R(tau,z) = sum_{nu in 1/2+Z} {sgn(nu) - E((nu + y/v) sqrt(2v))}
               (-1)^{nu-1/2} e^{-pi i nu^2 tau - 2 pi i nu z}.

    Terms decay like a Gaussian times a complementary error function.
    """
    v = tau.imag
    y = z.imag
    a = y / v
    # net term modulus <= e^{-pi v (nu+a)^2 - pi y^2/v}; the cutoff drops the
    # second (always <= 1) factor, which only makes it conservative
    n = gaussian_tail_cutoff(PI * v, abs(a) + 1.0, pol.abs_tol, pol.max_terms)
    ns = np.arange(-n, n + 1)
    nu = ns + 0.5
    t = (nu + a) * np.sqrt(2.0 * v)
    sgn_nu = np.sign(nu)
    phase = np.where(ns % 2 == 0, 1.0, -1.0)
    series_expo = -PI_I * nu * nu * tau - 2 * PI_I * nu * z
    terms = np.zeros(nu.shape, dtype=complex)
    # where sgn(nu) = sgn(t): sgn(nu) - erf(sqrt(pi) t) = sgn(nu) erfc(sqrt(pi)|t|);
    # write it through erfcx and fold the Gaussian into the series exponent so the
    # growing e^{pi nu^2 v} factor never appears on its own
    tail = sgn_nu * t >= 0
    terms[tail] = (sgn_nu[tail] * erfcx(np.sqrt(PI) * np.abs(t[tail]))
                   * np.exp(-PI * t[tail] ** 2 + series_expo[tail]))
    mid = ~tail
    erf_mid = np.sign(t[mid]) * (1.0 - erfc(np.sqrt(PI) * np.abs(t[mid])))
    terms[mid] = (sgn_nu[mid] - erf_mid) * np.exp(series_expo[mid])
    return complex(np.sum(phase * terms))


def mordell_h(tau: complex, z: complex, pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """h(tau,z) = int_R e^{pi i tau x^2 - 2 pi x z} / cosh(pi x) dx.

    The integrand has no real poles; the cutoff solves
    e^{-pi v X^2 + 2 pi X |Re z| - pi X} < tol and panels resolve the
    e^{pi i u x^2} oscillation.
    """
    v = tau.imag
    u = tau.real
    rz = z.real
    X = 2.0
    while 2.0 * np.exp(-PI * v * X * X + 2 * PI * X * abs(rz) - PI * X) > pol.abs_tol / 4:
        X *= 1.5
        if X > pol.max_interval:
            raise QuadratureError("mordell_h cutoff exceeded max_interval")

    def integrand(x: np.ndarray) -> np.ndarray:
        return np.exp(PI_I * tau * x * x - 2 * PI * x * z) / np.cosh(PI * x)

    freq = abs(u) * X + abs(z.imag) + 1.0
    base_panels = int(max(8, np.ceil(X * freq)))
    val, _ = adaptive_integrate(integrand, -X, X, pol.abs_tol / 2, base_panels=base_panels)
    return complex(val)


def g_ab(a: float, b: float, tau: complex, pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Unary theta of weight 3/2: sum over nu in a+Z of nu e^{pi i nu^2 tau + 2 pi i nu b}."""
    v = tau.imag
    shift = abs(b.imag / v) if isinstance(b, complex) else 0.0
    n = gaussian_tail_cutoff(PI * v, abs(a) + shift + 1.0, pol.abs_tol, pol.max_terms,
                             weight_growth=1.0)
    nu = a + np.arange(-n, n + 1)
    return complex(np.sum(nu * np.exp(PI_I * nu * nu * tau + 2 * PI_I * nu * b)))


def _g_ab_on_ray(a: float, b: float, taus: np.ndarray, n: int) -> np.ndarray:
    nu = a + np.arange(-n, n + 1)
    return np.sum(nu[:, None] * np.exp(PI_I * nu[:, None] ** 2 * taus[None, :]
                                       + 2 * PI_I * nu[:, None] * b), axis=0)


def R_ab(a: float, b: float, tau: complex, pol: TruncationPolicy = DEFAULT_POLICY,
         cutoff_scale: float = 1.0) -> complex:
    """Period integral R_{a,b}(tau) = -i int_{-conj(tau)}^{i inf} g_{a,-b}(s)/sqrt(-i(s+tau)) ds.

    Parametrized along s = -conj(tau) + i t the integrand is
    g_{a,-b}(-conj(tau) + i t) / sqrt(2v + t), decaying like
    e^{-pi a0^2 (v+t)} with a0 the distance from a+Z to 0.
    """
    if not 0.0 < a < 1.0:
        raise ValueError("R_ab requires a in (0,1)")
    v = tau.imag
    a0 = min(a, 1.0 - a)
    T = cutoff_scale * max(8.0, np.log(16.0 / (pol.abs_tol * a0 * a0)) / (PI * a0 * a0))
    n = gaussian_tail_cutoff(PI * v, abs(a) + 1.0, pol.abs_tol, pol.max_terms, weight_growth=1.0)

    def integrand(t: np.ndarray) -> np.ndarray:
        taus = -np.conj(tau) + 1j * t
        return _g_ab_on_ray(a, -b, taus, n) / np.sqrt(2.0 * v + t)

    val, _ = adaptive_integrate(integrand, 0.0, T, pol.abs_tol / 2,
                                base_panels=int(max(16, T)))
    return complex(val)
