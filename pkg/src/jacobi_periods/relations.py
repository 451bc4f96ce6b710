"""Catalogue of verifiable identities: the Mordell cosh-integral relations,
generic period relations, the worked indefinite-theta and Appell lists, and
the two reduced transformation laws.

Each entry maps a tag to a residual builder evaluated at one point; the
catalogue is exportable as JSON for the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .automorphy import (
    AutomorphyContext,
    EvalFunction,
    appell_multiplier,
    make_T,
    slash,
    zwegers_multiplier,
)
from .functions import appell_Phi, mordell_h, zwegers_R
from .group import (
    GroupElement,
    JacobiPoint,
    compose,
    compose_all,
    from_coordinate_pairs,
    make_element,
    point,
    power,
)
from .group import G0, G2, G3, G4, MINUS_I, S_ELT, T_ELT
from .numerics import DEFAULT_POLICY, TruncationPolicy, sqrt_principal
from .periods import PeriodSystem

PI_I = 1j * np.pi


@dataclass(frozen=True)
class Relation:
    tag: str
    description: str
    arity: int  # number of elliptic variables expected in the sample point
    residual: Callable[[JacobiPoint, TruncationPolicy], float]


def _zwegers_context() -> AutomorphyContext:
    return AutomorphyContext(0.5, -0.5, multiplier=zwegers_multiplier())


def _appell_context() -> AutomorphyContext:
    return AutomorphyContext(0.5, ((0.0, 0.0), (0.0, -0.5)), j=2,
                             multiplier=appell_multiplier())


def mordell_period(ctx: AutomorphyContext | None = None) -> EvalFunction:
    """The Mordell integral as the inversion period of the completed series."""
    ctx = ctx or _zwegers_context()
    return EvalFunction(lambda p, _pol=DEFAULT_POLICY: mordell_h(p.tau, p.z, _pol),
                        ctx, label="h")


def zwegers_system() -> PeriodSystem:
    """Period data of the completed indefinite theta series R.

    With the series as printed, R | [T,(0,0)] = R - h and
    R | [I,(1,0)] = R - 2 e^{-pi i z - pi i tau/4}; both signs verified
    against direct evaluation.
    """
    ctx = _zwegers_context()
    p_t10 = EvalFunction(lambda p: -mordell_h(p.tau, p.z), ctx, label="-h")
    p_g3 = EvalFunction(
        lambda p: -2.0 * np.exp(-PI_I * p.z - PI_I * p.tau / 4.0), ctx, label="-2e(..)")
    zero = EvalFunction(lambda p: 0.0 + 0.0j, ctx, label="0")
    R = EvalFunction(lambda p, _pol=DEFAULT_POLICY: zwegers_R(p.tau, p.z, _pol),
                     ctx, label="R")
    return PeriodSystem("zwegers", ctx, {
        ("G0", 0): zero, ("G2", 0): p_t10, ("G3", 0): p_g3, ("G4", 0): zero,
    }, integral=R)


def appell_period() -> EvalFunction:
    ctx = _appell_context()

    def eval_p(p: JacobiPoint, _pol=DEFAULT_POLICY) -> complex:
        tau, w = p.tau, p.zvec[1]
        return np.exp(PI_I * w * w / tau) * appell_Phi(tau, w, _pol)

    return EvalFunction(eval_p, ctx, label="e(pi i w^2/tau) Phi")


def appell_h() -> EvalFunction:
    ctx = _appell_context()
    return EvalFunction(lambda p: np.exp(-2 * PI_I * p.zvec[1] - PI_I * p.tau),
                        ctx, label="e(-2 pi i w - pi i tau)")


def _slashed_value(f: EvalFunction, g: GroupElement, p: JacobiPoint) -> complex:
    return slash(f, g)(p)


# ---------------------------------------------------------------- builders

def _r_mordell_1(p, pol):
    tau, z = p.tau, p.z
    lhs = -np.exp(PI_I * z * z / tau) / sqrt_principal(-1j * tau) \
        * mordell_h(-1 / tau, z / tau, pol) + mordell_h(tau, z, pol)
    return abs(lhs)


def _r_mordell_2(p, pol):
    tau, z = p.tau, p.z
    lhs = mordell_h(tau, z, pol) \
        - np.exp(PI_I / 4) * mordell_h(tau + 1, z, pol) \
        - np.exp(-PI_I / 4) * np.exp(PI_I * z * z / (tau + 1)) / sqrt_principal(tau + 1) \
        * mordell_h(tau / (tau + 1), z / (tau + 1), pol)
    return abs(lhs)


def _r_mordell_3(p, pol):
    tau, z = p.tau, p.z
    lhs = mordell_h(tau, z, pol) + mordell_h(tau, z + 1, pol) \
        - 2 / sqrt_principal(-1j * tau) * np.exp(PI_I * (z + 0.5) ** 2 / tau)
    return abs(lhs)


def _r_mordell_4(p, pol):
    tau, z = p.tau, p.z
    lhs = mordell_h(tau, z, pol) \
        + np.exp(-2 * PI_I * z - PI_I * tau) * mordell_h(tau, z + tau, pol) \
        - 2 * np.exp(-PI_I * z - PI_I * tau / 4)
    return abs(lhs)


def _generic_t(P: EvalFunction):
    def r(p, pol):
        return abs(P(p) + _slashed_value(P, make_T(P.context.j), p))
    return r


def _generic_hecke3(P: EvalFunction):
    st = compose(S_ELT, T_ELT)

    def r(p, pol):
        return abs(P(p) + _slashed_value(P, st, p)
                   + _slashed_value(P, compose(st, st), p))
    return r


def _pr_residual(item: int):
    """Items of the reduced period-relation theorem for the completed series."""
    sys = zwegers_system()
    T00 = T_ELT
    P = sys.extend(T00)

    def r(p, pol):
        if item == 1:
            return abs(sys.extend(make_element(((0, -1), (1, 0)), (1,), (0,)))(p) - P(p))
        if item == 2:
            return abs(P(p) + _slashed_value(P, T00, p))
        if item == 3:
            st = compose(S_ELT, T00)
            return abs(P(p) + _slashed_value(P, st, p)
                       + _slashed_value(P, compose(st, st), p))
        h = sys.extend(G3)
        if item == 4:
            rhs = add_vals(-P(p), _slashed_value(P, make_element(((1, 0), (0, 1)), (0,), (-1,)), p))
            return abs(_slashed_value(h, T00, p) - rhs)
        if item == 5:
            rhs = P(p) - _slashed_value(P, make_element(((-1, 0), (0, -1)), (1,), (0,)), p)
            return abs(h(p) - rhs)
        if item == 6:
            return abs(h(p) + _slashed_value(h, make_element(((-1, 0), (0, -1)), (1,), (0,)), p))
        raise ValueError(item)
    return r


def add_vals(a: complex, b: complex) -> complex:
    return a + b


def _zw_residual(item: int):
    ctx = _zwegers_context()
    P = mordell_period(ctx)

    def r(p, pol):
        tau, z = p.tau, p.z
        if item == 1:
            lhs = P(p) - _slashed_value(P, G4, p)
            return abs(lhs - 2 / sqrt_principal(-1j * tau) * np.exp(PI_I * (z + 0.5) ** 2 / tau))
        if item == 2:
            lhs = P(p) - _slashed_value(P, G3, p)
            return abs(lhs - 2 * np.exp(-PI_I * tau / 4 - PI_I * z))
        if item == 3:
            return abs(P(p) + _slashed_value(P, T_ELT, p))
        if item == 4:
            sts = make_element(((1, 0), (1, 1)), (0,), (0,))
            lhs = _slashed_value(P, T_ELT, p) + _slashed_value(P, S_ELT, p) \
                + _slashed_value(P, sts, p)
            return abs(lhs)
        raise ValueError(item)
    return r


def _ap_residual(item: int):
    P = appell_period()
    h = appell_h()
    T2 = make_T(2)

    def r(p, pol):
        if item == 1:
            g = from_coordinate_pairs(((1, 0), (0, 1)), (0, 0), (0, -1))
            lhs = P(p) - _slashed_value(P, g, p)
            return abs(lhs + _slashed_value(h, T2, p))
        if item == 2:
            g = from_coordinate_pairs(((1, 0), (0, 1)), (0, 0), (1, 0))
            lhs = P(p) - _slashed_value(P, g, p)
            return abs(lhs - h(p))
        if item == 3:
            return abs(P(p) + _slashed_value(P, T2, p) + 1.0)
        raise ValueError(item)
    return r


def _rr_residual(kind: str):
    sys = zwegers_system()
    P = sys.extend(T_ELT)
    if kind == "T":
        return _generic_t(P)
    return _generic_hecke3(P)


def _propmod_residual(item: int):
    sys = zwegers_system()
    R = sys.integral

    def r(p, pol):
        if item == 1:
            return abs(_slashed_value(R, G0, p) - R(p))
        if item == 2:
            return abs(_slashed_value(R, G2, p) - R(p) - sys.extend(G2)(p))
        raise ValueError(item)
    return r


def build_catalogue() -> dict[str, Relation]:
    zw_sys = zwegers_system()
    P_zw = zw_sys.extend(T_ELT)
    cat = {}

    def addrel(tag, description, arity, fn):
        cat[tag] = Relation(tag, description, arity, fn)

    addrel("MORDELL_1", "cosh-integral inversion law", 1, _r_mordell_1)
    addrel("MORDELL_2", "cosh-integral three-term shear law", 1, _r_mordell_2)
    addrel("MORDELL_3", "cosh-integral z+1 shift law", 1, _r_mordell_3)
    addrel("MORDELL_4", "cosh-integral z+tau shift law", 1, _r_mordell_4)
    addrel("GENERIC_T", "P + P|T = 0 for the inversion period", 1, _generic_t(P_zw))
    addrel("GENERIC_HECKE3", "P + P|ST + P|(ST)^2 = 0", 1, _generic_hecke3(P_zw))
    for i in range(1, 7):
        addrel(f"PR_{i}", f"reduced period relation, item {i}", 1, _pr_residual(i))
    addrel("RR_T", "generating-set membership: inversion relation", 1, _rr_residual("T"))
    addrel("RR_ST", "generating-set membership: three-term relation", 1, _rr_residual("ST"))
    for i in range(1, 5):
        addrel(f"ZW_{i}", f"indefinite-theta worked identity {i}", 1, _zw_residual(i))
    for i in range(1, 4):
        addrel(f"AP_{i}", f"Appell worked identity {i}", 2, _ap_residual(i))
    for i in range(1, 3):
        addrel(f"PROPMOD_{i}", f"reduced transformation law {i}", 1, _propmod_residual(i))
    return cat


def check_relation(tag: str, p: JacobiPoint,
                   pol: TruncationPolicy = DEFAULT_POLICY,
                   catalogue: dict | None = None) -> float:
    cat = catalogue or build_catalogue()
    rel = cat[tag]
    return float(rel.residual(p, pol))


def catalogue_json() -> str:
    cat = build_catalogue()
    entries = [{"tag": r.tag, "description": r.description, "variables": r.arity}
               for r in cat.values()]
    return json.dumps(entries, indent=2)
