"""The completed real-analytic Jacobi Eisenstein series of weight 2, index 1.

Normalized so that minus one twelfth of it splits as a holomorphic class
number part plus a non-holomorphic completion:

    -E*/12 = sum_{4n >= r^2} H(4n-r^2) q^n xi^r
             + (2/sqrt v) sum_{r = f mod 2} kappa(pi f^2 v) q^{(r^2-f^2)/4} xi^r.

The completion kernel kappa is the weight-3/2 Eisenstein completion
kappa(x) = (1/16 pi) int_1^inf t^{-3/2} e^{-x t} dt, in closed form
(1/8 pi)(e^{-x} - sqrt(pi x) erfc(sqrt x)).  The parity constraint
r = f (mod 2) keeps all q-exponents integral.
"""

from __future__ import annotations

import numpy as np
from scipy.special import erfc, erfcx

from ..errors import TruncationError
from ..numerics import DEFAULT_POLICY, TruncationPolicy
from .hurwitz import hurwitz_H

PI = np.pi
TWO_PI_I = 2j * np.pi


def hz_beta(x) -> np.ndarray:
    """Completion kernel (1/16 pi) int_1^inf t^{-3/2} e^{-xt} dt for x >= 0."""
    x = np.asarray(x, dtype=float)
    return (np.exp(-x) - np.sqrt(PI * x) * erfc(np.sqrt(x))) / (8.0 * PI)


def _r_cutoff(v: float, y: float, N: int, tol: float, max_terms: int) -> int:
    # holomorphic-part terms carry |q^{r^2/4} xi^r| = e^{-pi r^2 v/2 - 2 pi r y}
    r = 4
    while r <= max_terms:
        t = PI * v / 2.0 * r * r - 2 * PI * abs(y) * r
        if t > np.log(max(4 * N * r, 8) / tol):
            return r
        r += 2
    raise TruncationError("xi-range for the Eisenstein series did not close")


def e21_holomorphic_part(tau: complex, z: complex, N: int = 12,
                         pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Class number generating part: sum_{n <= N + r^2/4, 4n >= r^2} H(4n-r^2) q^n xi^r."""
    v = tau.imag
    r_max = _r_cutoff(v, z.imag, N, pol.abs_tol, pol.max_terms)
    q = np.exp(TWO_PI_I * tau)
    xi = np.exp(TWO_PI_I * z)
    total = 0.0 + 0.0j
    for r in range(-r_max, r_max + 1):
        # 4n - r^2 runs over 0..4N for each r
        n_lo = (r * r + 3) // 4 if r * r % 4 else r * r // 4
        ns = np.arange(n_lo, n_lo + N + 1)
        discs = 4 * ns - r * r
        coeffs = np.array([float(hurwitz_H(int(d))) for d in discs])
        total += xi ** r * np.sum(coeffs * q ** ns)
    return complex(total)


def e21_completion_part(tau: complex, z: complex, N: int = 12,
                        pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Non-holomorphic part (2/sqrt v) sum_{r=f(2)} kappa(pi f^2 v) q^{(r^2-f^2)/4} xi^r."""
    v = tau.imag
    r_max = _r_cutoff(v, z.imag, N, pol.abs_tol, pol.max_terms)
    q = np.exp(TWO_PI_I * tau)
    xi = np.exp(TWO_PI_I * z)
    # kappa(pi f^2 v) |q^{-f^2/4}| = kappa e^{pi f^2 v / 2} ~ e^{-pi f^2 v/2}/f^2
    f_max = r_max
    while np.exp(-PI * f_max * f_max * v / 2.0) > pol.abs_tol:
        f_max += 2
        if f_max > pol.max_terms:
            raise TruncationError("f-range for the completion part did not close")
    total = 0.0 + 0.0j
    for parity in (0, 1):
        fs = np.arange(-f_max + parity, f_max + 1, 2)
        x = PI * fs * fs * v
        # kappa(x) q^{-f^2/4} written with a single exponential so the
        # growing q-power never overflows: kappa(x) = e^{-x}(1 - sqrt(pi x)
        # erfcx(sqrt x))/(8 pi)
        scaled = (1.0 - np.sqrt(PI * x) * erfcx(np.sqrt(x))) / (8.0 * PI)
        f_sum = np.sum(scaled * np.exp(-x + TWO_PI_I * tau * (-(fs * fs) / 4.0)))
        rs = np.arange(-r_max + parity, r_max + 1, 2)
        r_sum = np.sum(xi ** rs * q ** ((rs * rs) / 4.0))
        total += f_sum * r_sum
    return complex(2.0 / np.sqrt(v) * total)


def e21_star(tau: complex, z: complex, N: int = 12,
             pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """The completed series E*(tau,z) = -12 (holomorphic part + completion part)."""
    if tau.imag < 0.5:
        raise TruncationError("e21_star is evaluated only for Im tau >= 0.5")
    return -12.0 * (e21_holomorphic_part(tau, z, N, pol)
                    + e21_completion_part(tau, z, N, pol))
