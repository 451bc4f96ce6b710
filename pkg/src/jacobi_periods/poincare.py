"""Coset sums over the translation subgroup: the Eisenstein series g, the
generalized Poincare series built from a parabolic cocycle, its functional
equation, and the quotient construction realizing a prescribed cocycle."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .automorphy import AutomorphyContext, EvalFunction, automorphy_factor, slash
from .errors import PoleProximityError, PreconditionError
from .group import (
    GroupElement,
    JacobiPoint,
    act,
    compose,
    identity,
    make_element,
    point,
)
from .numerics import DEFAULT_POLICY, POLE_EPS, TruncationPolicy, cpow
from .periods import PeriodSystem

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class CosetList:
    """Representatives [I,(lam,0)] * [A,(0,0)] of translation cosets.

    For each coprime pair (c,d), taken with c > 0 or (c,d) = (0,1), the
    matrix completes by the extended Euclidean algorithm; lam runs over
    [-L, L].  Distinct entries are pairwise inequivalent under left
    multiplication by the translation subgroup.
    """

    reps: tuple[GroupElement, ...]
    bound_C: int
    bound_L: int


def _complete_matrix(c: int, d: int) -> tuple[int, int]:
    """(a, b) with a d - b c = 1, normalized to 0 <= a < c for c > 0.

    The row freedom within a coset shifts a by multiples of c, so the
    a-normalization is taken modulo c.
    """
    if c == 0:
        return 1, 0
    # extended Euclid: x c + y d = 1
    old_r, r = c, d
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    a, b = old_y, -old_x
    t = a // c
    a -= t * c
    b -= t * d
    return a, b


def coprime_pairs(C: int):
    """Coprime (c,d) with max(|c|,|d|) <= C, one per +-pair: c > 0 or (0,1)."""
    yield (0, 1)
    for c in range(1, C + 1):
        for d in range(-C, C + 1):
            if gcd(c, abs(d)) == 1:
                yield (c, d)


def enumerate_cosets(C: int, L: int, j: int = 1) -> CosetList:
    reps = []
    zero = (0,) * j
    for (c, d) in coprime_pairs(C):
        a, b = _complete_matrix(c, d)
        assert a * d - b * c == 1, (a, b, c, d)
        base = make_element(((a, b), (c, d)), zero, zero)
        for lam in range(-L, L + 1):
            lam_vec = tuple([lam] + [0] * (j - 1))
            shift = make_element(((1, 0), (0, 1)), lam_vec, zero)
            reps.append(compose(shift, base))
    return CosetList(tuple(reps), C, L)


def coset_invariant(g: GroupElement) -> tuple:
    """Complete invariant of the translation coset of g: the +-normalized
    bottom row and t = d lam - c mu per coordinate."""
    c, d = g.c, g.d
    lam, mu = g.lam, g.mu
    if c < 0 or (c == 0 and d < 0):
        c, d = -c, -d
    ts = tuple(g.d * l - g.c * m for l, m in zip(lam, mu))
    return (c, d) + ts


def _term_bound(ctx: AutomorphyContext, g: GroupElement, p: JacobiPoint) -> float:
    """|j_{k,m}(g,p)|, evaluated exactly; cheap compared to the cocycle data
    and an honest basis for skipping negligible terms."""
    with np.errstate(over="ignore", under="ignore"):
        return abs(automorphy_factor(ctx, g, p))


def eisenstein_g(ctx: AutomorphyContext, p: JacobiPoint, C: int, L: int,
                 pol: TruncationPolicy = DEFAULT_POLICY,
                 skip_below: float = 1e-18) -> complex:
    """Truncated Eisenstein series sum over coset representatives of
    omega(g) j_{k,m}(g, p)."""
    if ctx.weight < 4 or ctx.weight % 2 != 0:
        raise PreconditionError("eisenstein_g requires even weight k >= 4")
    total = 0.0 + 0.0j
    for g in enumerate_cosets(C, L, ctx.j).reps:
        if _term_bound(ctx, g, p) < skip_below:
            continue
        total += ctx.omega(g) * automorphy_factor(ctx, g, p)
    return complex(total)


_PHI_MARGIN = 1e8  # generous sup bound for cocycle values over the swept orbit


def check_parabolic_preconditions(cocycle: PeriodSystem, p: JacobiPoint,
                                  tol: float = 1e-8) -> dict:
    """Numerical residuals of phi_[S,(0,0)] = phi_[I,(0,1)] = phi_[-I,(0,0)] = 0."""
    j = cocycle.context.j
    zero = (0,) * j
    s_elt = make_element(((1, 1), (0, 1)), zero, zero)
    mu_elt = make_element(((1, 0), (0, 1)), zero, (1,) if j == 1 else (0, 1))
    minus_i = make_element(((-1, 0), (0, -1)), zero, zero)
    out = {}
    for name, g in (("S", s_elt), ("I01", mu_elt), ("minusI", minus_i)):
        out[name] = abs(cocycle.extend(g)(p))
    if max(out.values()) > tol:
        raise PreconditionError(f"parabolic cocycle preconditions violated: {out}")
    return out


def poincare_phi(cocycle: PeriodSystem, ctx: AutomorphyContext, p: JacobiPoint,
                 C: int, L: int, pol: TruncationPolicy = DEFAULT_POLICY,
                 skip_below: float = 1e-16, check: bool = True) -> complex:
    """Generalized Poincare series sum over representatives of
    (phi_g |_{omega,k,m} g)(p), with the weight-k slash of the series."""
    if check:
        check_parabolic_preconditions(cocycle, p)
    total = 0.0 + 0.0j
    for g in enumerate_cosets(C, L, ctx.j).reps:
        if _term_bound(ctx, g, p) * _PHI_MARGIN < skip_below:
            continue
        phi_g = cocycle.extend(g)
        total += ctx.omega(g) * automorphy_factor(ctx, g, p) * phi_g(act(g, p))
    return complex(total)


def functional_eq_residual(cocycle: PeriodSystem, ctx: AutomorphyContext,
                           gamma: GroupElement, p: JacobiPoint, C: int, L: int,
                           pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Residual of Phi|_{omega,r,m} gamma
        = conj(omega)(gamma) j_{k,m}(gamma,p)^{-1} (Phi(p) - g(p) phi_gamma(p)),
    with r the cocycle weight and k the series weight."""
    r_ctx = cocycle.context
    phi_at = poincare_phi(cocycle, ctx, act(gamma, p), C, L, pol, check=False)
    lhs = r_ctx.omega(gamma) * automorphy_factor(r_ctx, gamma, p) * phi_at
    omega_bar = np.conj(ctx.omega(gamma))
    jk_inv = 1.0 / automorphy_factor(ctx, gamma, p)
    phi_p = poincare_phi(cocycle, ctx, p, C, L, pol, check=False)
    g_p = eisenstein_g(ctx, p, C, L, pol)
    phi_gamma = cocycle.extend(gamma)(p)
    rhs = omega_bar * jk_inv * (phi_p - g_p * phi_gamma)
    return float(abs(lhs - rhs))


def construct_F_residual(cocycle: PeriodSystem, ctx: AutomorphyContext,
                         gamma: GroupElement, p: JacobiPoint, C: int, L: int,
                         pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Residual of (F|_{omega,r,m} gamma)(p) - F(p) - phi_gamma(p) for
    F = -Phi/g, the realization of the cocycle as a period system."""
    r_ctx = cocycle.context

    def F(q: JacobiPoint) -> complex:
        g_q = eisenstein_g(ctx, q, C, L, pol)
        if abs(g_q) < POLE_EPS:
            raise PoleProximityError("Eisenstein series vanishes at the sample point")
        return -poincare_phi(cocycle, ctx, q, C, L, pol, check=False) / g_q

    lhs = r_ctx.omega(gamma) * automorphy_factor(r_ctx, gamma, p) * F(act(gamma, p))
    rhs = F(p) + cocycle.extend(gamma)(p)
    return float(abs(lhs - rhs))


def lemma_bounds_check(samples: int = 1000, seed: int = 11) -> dict:
    """Check (v^2/(1+4|tau|^2))(c^2+d^2) <= |c tau+d|^2
    <= 2(|tau|^2+v^-2)(c^2+d^2) on random samples; reports max slack."""
    rng = np.random.default_rng(seed)
    violations = 0
    max_lower_slack = 0.0
    max_upper_slack = 0.0
    for _ in range(samples):
        c = int(rng.integers(-100, 101))
        d = int(rng.integers(-100, 101))
        if c == 0 and d == 0:
            continue
        u = float(rng.uniform(-5, 5))
        v = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        tau = complex(u, v)
        val = abs(c * tau + d) ** 2
        lower = v * v / (1 + 4 * abs(tau) ** 2) * (c * c + d * d)
        upper = 2 * (abs(tau) ** 2 + v ** -2) * (c * c + d * d)
        if not (lower <= val <= upper):
            violations += 1
        max_lower_slack = max(max_lower_slack, lower / val)
        max_upper_slack = max(max_upper_slack, val / upper)
    return {"violations": violations, "max_lower_ratio": max_lower_slack,
            "max_upper_ratio": max_upper_slack, "samples": samples}


class CoboundarySystem(PeriodSystem):
    """Cocycle phi_g = psi|g - psi for a fixed potential psi.

    The direct form evaluates psi at g p only, so coset sums stay inside
    the representable range; agreement with the generic word extension is
    a tested property.
    """

    def __init__(self, name: str, psi: EvalFunction):
        from .automorphy import add
        from .group import generator_element

        ctx = psi.context
        gens = {}
        for gen_name in ("G0", "G2", "G3", "G4"):
            for coord in range(ctx.j):
                if gen_name in ("G0", "G2") and coord > 0:
                    continue
                g = generator_element(gen_name, ctx.j, coord)
                gens[(gen_name, coord)] = add(slash(psi, g), psi, 1.0, -1.0)
        super().__init__(name, ctx, gens, integral=psi)
        self.psi = psi

    def extend(self, g: GroupElement) -> EvalFunction:
        if g in self._cache:
            return self._cache[g]
        from .automorphy import add

        fn = add(slash(self.psi, g), self.psi, 1.0, -1.0)
        self._cache[g] = fn
        return fn


def coboundary_cocycle(psi: EvalFunction, name: str = "coboundary") -> CoboundarySystem:
    """The parabolic cocycle phi_g = psi|g - psi; psi must be invariant
    under tau -> tau+1 and z -> z+1 so the translation entries vanish."""
    return CoboundarySystem(name, psi)
