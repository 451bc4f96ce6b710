"""Theta-coefficient extraction by contour quadrature and the associated
decomposition identities for two-variable Jacobi integrals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .automorphy import AutomorphyContext, EvalFunction, automorphy_factor, slash
from .errors import PreconditionError, QuadratureError
from .functions import theta_ml
from .group import JacobiPoint, from_coordinate_pairs, make_element, point
from .numerics import DEFAULT_POLICY, TruncationPolicy, _leggauss, sqrt_principal

TWO_PI_I = 2j * np.pi


def _z_elliptic_residual(phi: Callable, m: int, tau: complex, w: complex,
                         z0: complex = 0.23) -> float:
    """Residual of e^{2 pi i m (tau + 2 z)} phi(tau, z+tau, w) = phi(tau, z, w)."""
    lhs = np.exp(TWO_PI_I * m * (tau + 2 * z0)) * phi(tau, z0 + tau, w)
    return abs(lhs - phi(tau, z0, w))


def extract_h(phi: Callable, m: int, ell: int, tau: complex, w: complex,
              pol: TruncationPolicy = DEFAULT_POLICY, base: complex = 0.0,
              nodes: int = 128, check_elliptic: bool = True) -> complex:
    """Theta coefficient h_ell(tau,w) = e^{-pi i ell^2 tau/(2m)}
    int_p^{p+1} phi(tau,z,w) e^{-2 pi i ell z} dz.

    phi is a callable (tau, z, w) -> complex; the contour is the horizontal
    segment [base, base+1], doubled until stable.  The z-ellipticity
    hypothesis is checked numerically first.
    """
    if check_elliptic:
        resid = _z_elliptic_residual(phi, m, tau, w)
        if resid > 1e-6:
            raise PreconditionError(
                f"index-{m} ellipticity residual {resid:.2e} exceeds 1e-6")

    def contour_sum(n: int) -> complex:
        x, wts = _leggauss(n)
        zs = base + (x + 1.0) / 2.0
        vals = np.array([phi(tau, z, w) * np.exp(-TWO_PI_I * ell * z) for z in zs])
        return complex(np.sum(wts * vals) / 2.0)

    prev = contour_sum(nodes)
    for _ in range(4):
        nodes *= 2
        cur = contour_sum(nodes)
        if abs(cur - prev) < pol.abs_tol:
            return np.exp(-np.pi * 1j * ell * ell * tau / (2 * m)) * cur
        prev = cur
    raise QuadratureError("theta coefficient contour integral did not stabilize")


def reconstruct_residual(phi: Callable, m: int, p3: tuple,
                         pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """|phi - sum_l h_l theta_{m,l}| at the point (tau, z, w)."""
    tau, z, w = p3
    total = 0.0 + 0.0j
    for ell in range(2 * m):
        h = extract_h(phi, m, ell, tau, w, pol, check_elliptic=(ell == 0))
        total += h * theta_ml(m, ell, tau, z, pol)
    return abs(phi(tau, z, w) - total)


def theta_transform_residual(m: int, mu: int, tau: complex, z: complex,
                             pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Residual of the inversion law
    theta_{m,mu}(-1/tau, z/tau) = sqrt(tau/2mi) e^{2 pi i m z^2/tau}
        sum_nu e^{-pi i mu nu / m} theta_{m,nu}(tau, z)."""
    lhs = theta_ml(m, mu, -1 / tau, z / tau, pol)
    pref = sqrt_principal(tau / (2 * m * 1j)) * np.exp(TWO_PI_I * m * z * z / tau)
    s = sum(np.exp(-TWO_PI_I * mu * nu / (2 * m)) * theta_ml(m, nu, tau, z, pol)
            for nu in range(2 * m))
    return abs(lhs - pref * s)


@dataclass
class DecompositionSystem:
    """A two-variable integral phi(tau,z,w) with the contexts needed by the
    decomposition identities: the full slash context for phi and the
    weight-(k-1/2) context used for the coefficient functions."""

    phi: Callable
    m: int
    phi_context: AutomorphyContext
    h_context: AutomorphyContext


def _phi_as_eval(system: DecompositionSystem) -> EvalFunction:
    return EvalFunction(lambda p: system.phi(p.tau, p.zvec[0], p.zvec[1]),
                        system.phi_context)


def prop43_residual(system: DecompositionSystem, part: int, p3: tuple,
                    pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Residual of the decomposition transformation identities.

    part 2:  phi|T = phi + sum_l P_l theta_{m,l},
             P_l = h_l|T' - h_l  in the coefficient context;
    part 3:  phi|[I,((0,1),(0,0))] = phi + sum_l (P_l - P_l|[-I,(1,0)]') theta_{m,l}.

    Primed slashes act on (tau,w) at weight k-1/2 with the w-index.
    """
    tau, z, w = p3
    m = system.m
    phi_f = _phi_as_eval(system)
    pw = point(tau, w)

    hs = [EvalFunction(
        (lambda q, _l=ell: extract_h(system.phi, m, _l, q.tau, q.z, pol,
                                     check_elliptic=False)),
        system.h_context) for ell in range(2 * m)]

    t1 = make_element(((0, -1), (1, 0)), (0,), (0,))
    p_l = [lambda q, _h=h, _t=t1: slash(_h, _t)(q) - _h(q) for h in hs]

    if part == 2:
        T2 = make_element(((0, -1), (1, 0)), (0, 0), (0, 0))
        lhs = slash(phi_f, T2)(point(tau, z, w))
        rhs = system.phi(tau, z, w) + sum(
            p_l[ell](pw) * theta_ml(m, ell, tau, z, pol) for ell in range(2 * m))
        return abs(lhs - rhs)
    if part == 3:
        g = from_coordinate_pairs(((1, 0), (0, 1)), (0, 0), (1, 0))
        # lambda-shift of w by tau: lam = (0,1)
        g = make_element(((1, 0), (0, 1)), (0, 1), (0, 0))
        lhs = slash(phi_f, g)(point(tau, z, w))
        minus_i = make_element(((-1, 0), (0, -1)), (1,), (0,))
        rhs = system.phi(tau, z, w)
        for ell in range(2 * m):
            pl_val = p_l[ell](pw)
            h_slashed = EvalFunction(
                (lambda q, _h=hs[ell], _t=t1: slash(_h, _t)(q) - _h(q)),
                system.h_context)
            pl_minus = slash(h_slashed, minus_i)(pw)
            rhs += (pl_val - pl_minus) * theta_ml(m, ell, tau, z, pol)
        return abs(lhs - rhs)
    raise ValueError(part)
