"""Numerical heat operator and the mock-Jacobi dual identity checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .automorphy import EvalFunction
from .errors import DerivativeError, PoleProximityError
from .functions import alpha, eta, lerch_mu, theta_int, theta_odd
from .group import JacobiPoint
from .numerics import DEFAULT_POLICY, POLE_EPS, TruncationPolicy

PI = np.pi
PI_I = 1j * np.pi


@dataclass(frozen=True)
class DerivativeScheme:
    """Step policy for numerical differentiation.

    cauchy-circle mode is only valid in directions where the target is
    holomorphic; dzbar always uses central differences.
    """

    base_step: float = 5e-3
    richardson_levels: int = 1
    mode: str = "central"  # or "cauchy"
    circle_nodes: int = 32

    def __post_init__(self):
        if self.richardson_levels < 1:
            raise ValueError("richardson_levels must be >= 1")
        if self.mode not in ("central", "cauchy"):
            raise ValueError(f"unknown derivative mode {self.mode!r}")

    def halved(self) -> "DerivativeScheme":
        return DerivativeScheme(self.base_step / 2.0, self.richardson_levels,
                                self.mode, self.circle_nodes)


def _shift_point(p: JacobiPoint, which: str, delta: complex) -> JacobiPoint:
    if which == "dtau":
        return JacobiPoint(p.tau + delta, p.zvec)
    zs = list(p.zvec)
    zs[0] = zs[0] + delta
    return JacobiPoint(p.tau, tuple(zs))


def _central(f, p, which, order, h):
    if order == 1:
        return (f.evaluator(_shift_point(p, which, h))
                - f.evaluator(_shift_point(p, which, -h))) / (2.0 * h)
    return (f.evaluator(_shift_point(p, which, h))
            - 2.0 * f.evaluator(p)
            + f.evaluator(_shift_point(p, which, -h))) / (h * h)


def _cauchy(f, p, which, order, radius, nodes):
    thetas = 2.0 * np.pi * np.arange(nodes) / nodes
    ring = radius * np.exp(1j * thetas)
    vals = np.array([f.evaluator(_shift_point(p, which, d)) for d in ring])
    if order == 1:
        return complex(np.mean(vals * np.exp(-1j * thetas)) / radius)
    return complex(2.0 * np.mean(vals * np.exp(-2j * thetas)) / radius ** 2)


def _richardson(samples: list[complex]) -> tuple[complex, float]:
    """Extrapolate central-difference samples at steps h, h/2, ...; the
    central differences used here all have error O(h^2)."""
    table = [samples]
    fac = 4.0
    while len(table[-1]) > 1:
        prev = table[-1]
        table.append([(fac * prev[i + 1] - prev[i]) / (fac - 1.0)
                      for i in range(len(prev) - 1)])
        fac *= 4.0
    est = table[-1][0]
    err = abs(est - table[0][-1])
    return est, err


def numeric_derivative(f: EvalFunction, p: JacobiPoint, which: str,
                       scheme: DerivativeScheme = DerivativeScheme(),
                       target: float | None = None) -> complex:
    """d/dtau, d/dz, d^2/dz^2 or d/dzbar of f at p.

    When a target accuracy is given, a DerivativeError is raised if the
    Richardson levels disagree by more than ten times the target.
    """
    if which not in ("dtau", "dz", "dz2", "dzbar"):
        raise ValueError(f"unknown derivative direction {which!r}")
    if which == "dzbar":
        h = scheme.base_step * max(1.0, abs(p.zvec[0]))

        def dzbar(hh):
            fx = (f.evaluator(_shift_point(p, "dz", hh))
                  - f.evaluator(_shift_point(p, "dz", -hh))) / (2 * hh)
            fy = (f.evaluator(_shift_point(p, "dz", 1j * hh))
                  - f.evaluator(_shift_point(p, "dz", -1j * hh))) / (2 * hh)
            return 0.5 * (fx + 1j * fy)

        samples = [dzbar(h / 2 ** k) for k in range(scheme.richardson_levels + 1)]
        est, err = _richardson(samples)
    else:
        order = 2 if which == "dz2" else 1
        direction = "dtau" if which == "dtau" else "dz"
        if scheme.mode == "cauchy":
            radius = min(scheme.base_step * 100.0, p.v / 2.0, 0.4) \
                if direction == "dtau" else min(scheme.base_step * 100.0, 0.4)
            radius = max(radius, 1e-3)
            return _cauchy(f, p, direction, order, radius, scheme.circle_nodes)
        h = scheme.base_step
        samples = [_central(f, p, direction, order, h / 2 ** k)
                   for k in range(scheme.richardson_levels + 1)]
        est, err = _richardson(samples)
    if target is not None and err > 10.0 * target:
        raise DerivativeError(f"derivative estimates disagree by {err:.2e}")
    return est


def heat_apply(f: EvalFunction, index, p: JacobiPoint,
               scheme: DerivativeScheme = DerivativeScheme()) -> complex:
    """Heat operator 8 pi i |M| d/dtau - (d/dz)^t Madj (d/dz) applied at p;
    for one variable Madj = 1."""
    M = np.atleast_2d(np.asarray(index, dtype=float))
    if M.shape == (1, 1):
        m = float(M[0, 0])
        dt = numeric_derivative(f, p, "dtau", scheme)
        dz2 = numeric_derivative(f, p, "dz2", scheme)
        return 8j * PI * m * dt - dz2
    raise NotImplementedError("matrix-index heat operator is desk-scoped to j=1")


def heat_iterate(f: EvalFunction, index, power: int, p: JacobiPoint,
                 scheme: DerivativeScheme = DerivativeScheme()) -> complex:
    """L_M^power f at p; power <= 2."""
    if power < 1 or power > 2:
        raise ValueError("heat_iterate supports power in {1, 2}")
    if power == 1:
        return heat_apply(f, index, p, scheme)
    inner = EvalFunction(lambda q: heat_apply(f, index, q, scheme), f.context)
    outer = DerivativeScheme(max(scheme.base_step * 4.0, 2e-2),
                             scheme.richardson_levels, scheme.mode,
                             scheme.circle_nodes)
    return heat_apply(inner, index, p, outer)


def lerch_f_ab(a: float, b: float, tau: complex, z: complex,
               pol: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """f_{a,b}(tau,z) = e^{2 pi i a z - pi i a^2 tau} mu(tau, z, a tau + b)."""
    w = a * tau + b
    return np.exp(2 * PI_I * a * z - PI_I * a * a * tau) * lerch_mu(tau, z, w, pol)


def mock_dual_residual(a: float, b: float, tau: complex, z: complex,
                       scheme: DerivativeScheme = DerivativeScheme(base_step=2e-3),
                       pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Residual of the explicit dual identity for the Lerch family:

    (4 pi i d/dtau + d^2/dz^2) f_{a,b}
        = e^{2 pi i a z - pi i a^2 tau} 16 pi^2 eta^6
          / (theta(tau, a tau + b)^2 theta(tau, z)^3)
          * (alpha_1 theta0(2 tau, 2z + a tau + b)
             - alpha_0 theta1(2 tau, 2z + a tau + b)),

    with the square on the theta at a tau + b pinned numerically: the dual
    divided by the bracket matches 1/theta^2 exactly (coefficient 1) across
    parameters, and the identity residual then scales as the scheme error.
    """
    w = a * tau + b
    th_w = theta_odd(tau, w, pol)
    th_z = theta_odd(tau, z, pol)
    if abs(th_w) < POLE_EPS or abs(th_z) < POLE_EPS:
        raise PoleProximityError("theta factor inside pole guard")
    from .automorphy import AutomorphyContext

    f = EvalFunction(lambda q: lerch_f_ab(a, b, q.tau, q.z, pol),
                     AutomorphyContext(0.5, -0.5))
    p = JacobiPoint(tau, (z,))
    dt = numeric_derivative(f, p, "dtau", scheme)
    dz2 = numeric_derivative(f, p, "dz2", scheme)
    lhs = 4j * PI * dt + dz2
    arg2 = 2 * z + w
    rhs = (np.exp(2 * PI_I * a * z - PI_I * a * a * tau)
           * 16 * PI ** 2 * eta(tau, pol) ** 6
           / (th_w ** 2 * th_z ** 3)
           * (alpha(1, a, b, tau, pol) * theta_int("theta0", 2 * tau, arg2, pol)
              - alpha(0, a, b, tau, pol) * theta_int("theta1", 2 * tau, arg2, pol)))
    return abs(lhs - rhs)
