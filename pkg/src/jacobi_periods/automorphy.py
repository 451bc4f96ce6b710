"""Automorphy factor, multiplier systems, and the slash operator.

The factor attached to gamma = [(a,b;c,d),(lam,mu)] acting in weight k and
index matrix M is

    j_{k,M}(gamma,(tau,z)) = (c tau + d)^{-k}
        * exp(2 pi i (-c Z^t M Z/(c tau+d) + tau lam^t M lam
                      + 2 lam^t M z + lam^t M mu)),     Z = z + lam tau + mu,

with the principal branch for half-integer k.  The shifted Z in the
quadratic term is forced by the decomposition [A,(lam,mu)] =
[A,(0,0)] * [I,(lam,mu)] under the group law used here; it reduces to the
plain-z form whenever c = 0 or lam = 0.  A multiplier system assigns
unit-modulus weights on the generators and extends to all elements through
the consistency identity

    omega(g1 g2) j(g1 g2, p) = omega(g1) omega(g2) j(g1, g2 p) j(g2, p).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import ContextMismatchError, MissingGeneratorError
from .group import (
    GroupElement,
    JacobiPoint,
    WordToken,
    act,
    compose,
    factor_word,
    generator_element,
    identity,
    inverse,
    point,
    power,
)
from .numerics import DEFAULT_POLICY, TruncationPolicy, cpow

TWO_PI_I = 2j * np.pi


def _index_matrix(index, j: int) -> np.ndarray:
    m = np.atleast_2d(np.asarray(index, dtype=float))
    if m.shape == (1, 1) and j == 1:
        return m
    if m.shape != (j, j):
        raise ContextMismatchError(f"index matrix shape {m.shape} does not match j={j}")
    if not np.allclose(m, m.T):
        raise ContextMismatchError("index matrix must be symmetric")
    return m


@dataclass(frozen=True)
class AutomorphyContext:
    """Weight, index matrix and optional multiplier system fixing one slash action."""

    weight: float
    index: float | tuple | np.ndarray
    j: int = 1
    multiplier: Optional["MultiplierSystem"] = None

    def __post_init__(self):
        object.__setattr__(self, "index", _index_matrix(self.index, self.j))

    @property
    def m(self) -> float:
        """Scalar index for j=1 contexts."""
        if self.j != 1:
            raise ContextMismatchError("scalar index requested from a matrix context")
        return float(self.index[0, 0])

    def omega(self, g: GroupElement) -> complex:
        if self.multiplier is None:
            return 1.0 + 0.0j
        return self.multiplier.extend(self, g)

    def same_action(self, other: "AutomorphyContext") -> bool:
        return (
            self.j == other.j
            and self.weight == other.weight
            and np.array_equal(self.index, other.index)
            and self.multiplier is other.multiplier
        )

    def __hash__(self):
        return hash((self.weight, self.j, self.index.tobytes(), id(self.multiplier)))

    def __eq__(self, other):
        return isinstance(other, AutomorphyContext) and self.same_action(other)


def automorphy_factor(ctx: AutomorphyContext, g: GroupElement, p: JacobiPoint) -> complex:
    """j_{k,M}(g, p) on the principal branch; never zero on H x C^j."""
    M = ctx.index
    z = np.asarray(p.zvec, dtype=complex)
    lam = np.asarray(g.lam, dtype=float)
    mu = np.asarray(g.mu, dtype=float)
    den = g.c * p.tau + g.d
    zs = z + lam * p.tau + mu  # shifted argument entering the c-quadratic term
    quad_zs = complex(zs @ M @ zs)
    quad_lam = float(lam @ M @ lam)
    cross = complex(lam @ M @ z)
    lam_mu = float(lam @ M @ mu)
    expo = TWO_PI_I * (-g.c * quad_zs / den + p.tau * quad_lam + 2.0 * cross + lam_mu)
    return cpow(den, -ctx.weight) * complex(np.exp(expo))


class MultiplierSystem:
    """Unit-modulus weights on the generators, extended by consistency.

    Values are keyed by (name, coord) word tokens; extension to arbitrary
    elements walks the element's factored word, evaluating the consistency
    identity at a fixed base point (point-independence is a tested property,
    not an assumption).
    """

    def __init__(self, values: dict, j: int = 1, base_point: JacobiPoint | None = None,
                 name: str = ""):
        self.j = j
        self.name = name
        self.base_point = base_point or (point(1j, 0.0) if j == 1 else point(1j, 0.0, 0.0))
        self._gen_values: dict[tuple[str, int], complex] = {}
        for key, val in values.items():
            if isinstance(key, str):
                key = (key, 0)
            self._gen_values[(key[0], key[1])] = complex(val)
        self._cache: dict[tuple, complex] = {}

    def generator_value(self, name: str, coord: int = 0) -> complex:
        try:
            return self._gen_values[(name, coord)]
        except KeyError:
            raise MissingGeneratorError(
                f"multiplier system {self.name or '?'} has no value for {name}[{coord}]"
            ) from None

    def _sigma(self, ctx: AutomorphyContext, g1: GroupElement, g2: GroupElement,
               p: JacobiPoint) -> complex:
        """Cocycle defect j(g1, g2 p) j(g2, p) / j(g1 g2, p)."""
        num = automorphy_factor(ctx, g1, act(g2, p)) * automorphy_factor(ctx, g2, p)
        return num / automorphy_factor(ctx, compose(g1, g2), p)

    def _combine(self, ctx, w_elt, w_val, t_elt, t_val, p):
        """omega of the product w*t from omega(w), omega(t)."""
        val = w_val * t_val * self._sigma(ctx, w_elt, t_elt, p)
        val /= abs(val)  # mathematically unit modulus; kill float drift
        return compose(w_elt, t_elt), val

    def _token_value(self, ctx: AutomorphyContext, tok: WordToken,
                     p: JacobiPoint) -> tuple[GroupElement, complex]:
        gen = generator_element(tok.gen, self.j, tok.coord)
        base = self.generator_value(tok.gen, tok.coord)
        if tok.exp >= 0:
            elt, val = identity(self.j), 1.0 + 0j
            for _ in range(tok.exp):
                elt, val = self._combine(ctx, elt, val, gen, base, p)
            return elt, val
        # omega(t^-1) = 1 / (omega(t) j(t, t^-1 p) j(t^-1, p))
        ginv = inverse(gen)
        inv_val = 1.0 / (base * automorphy_factor(ctx, gen, act(ginv, p))
                         * automorphy_factor(ctx, ginv, p))
        inv_val /= abs(inv_val)
        elt, val = identity(self.j), 1.0 + 0j
        for _ in range(-tok.exp):
            elt, val = self._combine(ctx, elt, val, ginv, inv_val, p)
        return elt, val

    def extend(self, ctx: AutomorphyContext, g: GroupElement,
               base_point: JacobiPoint | None = None) -> complex:
        """omega(g), computed along factor_word(g) and cached per element."""
        p = base_point or self.base_point
        key = (g, ctx.weight, ctx.index.tobytes(), p.tau, p.zvec)
        if key in self._cache:
            return self._cache[key]
        elt, val = identity(self.j), 1.0 + 0j
        for tok in factor_word(g).tokens:
            t_elt, t_val = self._token_value(ctx, tok, p)
            elt, val = self._combine(ctx, elt, val, t_elt, t_val, p)
        if elt != g:
            raise MissingGeneratorError(f"word expansion failed to rebuild {g}")
        self._cache[key] = val
        return val

    @classmethod
    def trivial(cls, j: int = 1) -> "MultiplierSystem":
        vals = {("G0", 0): 1.0, ("G2", 0): 1.0}
        for coord in range(j):
            vals[("G3", coord)] = 1.0
            vals[("G4", coord)] = 1.0
        return cls(vals, j=j, name="trivial")

    @classmethod
    def from_element_values(cls, weight: float, index, values: dict[GroupElement, complex],
                            j: int = 1, name: str = "") -> "MultiplierSystem":
        """Derive generator values from values on standard elements.

        Accepts values on [S,(0,0)], [T,(0,0)] and the coordinate
        translations; the G2 value follows from G2 = [T,(0,0)] * G3 via
        the consistency identity evaluated at a base point.
        """
        ctx = AutomorphyContext(weight, index, j=j)
        p0 = point(1j, *([0.12 + 0.07j] * j))
        sys = cls({}, j=j, name=name)
        gen_vals: dict[tuple[str, int], complex] = {}
        t_elt = make_T(j)
        for elt, val in values.items():
            if elt == generator_element("G0", j):
                gen_vals[("G0", 0)] = complex(val)
            for coord in range(j):
                if elt == generator_element("G3", j, coord):
                    gen_vals[("G3", coord)] = complex(val)
                if elt == generator_element("G4", j, coord):
                    gen_vals[("G4", coord)] = complex(val)
        if t_elt in values:
            g3 = generator_element("G3", j, 0)
            sig = automorphy_factor(ctx, t_elt, act(g3, p0)) * automorphy_factor(ctx, g3, p0)
            sig /= automorphy_factor(ctx, compose(t_elt, g3), p0)
            val = values[t_elt] * gen_vals[("G3", 0)] * sig
            gen_vals[("G2", 0)] = val / abs(val)
        sys._gen_values = gen_vals
        return sys

    @classmethod
    def from_json(cls, path, j: int = 1, name: str = "") -> "MultiplierSystem":
        """Load {"generator": "G0", "value": [re, im]} entries from a JSON file."""
        with open(path, "r", encoding="utf-8") as fh:
            entries = json.load(fh)
        vals = {}
        for e in entries:
            re, im = e["value"]
            vals[(e["generator"], int(e.get("coord", 0)))] = complex(re, im)
        return cls(vals, j=j, name=name or str(path))


def make_T(j: int = 1) -> GroupElement:
    from .group import make_element

    zero = (0,) * j
    return make_element(((0, -1), (1, 0)), zero, zero)


def zwegers_multiplier() -> MultiplierSystem:
    """The weight-1/2, index -1/2 system with omega(S)=e^{i pi/4}, omega(T)=-1/sqrt(-i)."""
    from .group import G3 as G3_elt
    from .group import G4 as G4_elt
    from .group import S_ELT, T_ELT

    omega_T = -1.0 / np.sqrt(complex(0, -1))
    return MultiplierSystem.from_element_values(
        0.5, -0.5,
        {S_ELT: np.exp(1j * np.pi / 4), T_ELT: omega_T, G3_elt: -1.0, G4_elt: -1.0},
        name="zwegers",
    )


def appell_multiplier() -> MultiplierSystem:
    """The j=2 system of the rank-one Appell quotient: omega(T)=sqrt(-i), translations 1."""
    vals = {}
    elts = {}
    t2 = make_T(2)
    elts[t2] = np.sqrt(complex(0, -1))
    for coord in range(2):
        elts[generator_element("G3", 2, coord)] = 1.0
        elts[generator_element("G4", 2, coord)] = 1.0
    index = ((0.0, 0.0), (0.0, -0.5))
    sys = MultiplierSystem.from_element_values(0.5, index, elts, j=2, name="appell")
    return sys


@dataclass
class EvalFunction:
    """An evaluable map (tau, z-vector) -> C with its slash metadata."""

    evaluator: Callable[[JacobiPoint], complex]
    context: AutomorphyContext
    pole_guard: Optional[Callable[[JacobiPoint], bool]] = None
    truncation: TruncationPolicy = field(default_factory=lambda: DEFAULT_POLICY)
    label: str = ""

    def __call__(self, p: JacobiPoint) -> complex:
        return self.evaluator(p)

    def near_pole(self, p: JacobiPoint) -> bool:
        return bool(self.pole_guard(p)) if self.pole_guard is not None else False


def slash(f: EvalFunction, g: GroupElement) -> EvalFunction:
    """(f | g)(p) = omega(g) j_{k,M}(g, p) f(g p); pole set pulled back by g."""
    ctx = f.context
    omega = ctx.omega(g)

    def evaluator(p: JacobiPoint, _f=f, _g=g, _omega=omega, _ctx=ctx) -> complex:
        return _omega * automorphy_factor(_ctx, _g, p) * _f.evaluator(act(_g, p))

    guard = None
    if f.pole_guard is not None:
        guard = lambda p, _f=f, _g=g: _f.pole_guard(act(_g, p))  # noqa: E731
    label = f"({f.label}|{g})" if f.label else ""
    return EvalFunction(evaluator, ctx, guard, f.truncation, label)


def add(f: EvalFunction, g: EvalFunction, cf: complex = 1.0, cg: complex = 1.0) -> EvalFunction:
    """Pointwise cf*f + cg*g within one context."""
    if not f.context.same_action(g.context):
        raise ContextMismatchError("cannot add functions with different slash contexts")
    guard = None
    if f.pole_guard or g.pole_guard:
        guard = lambda p: f.near_pole(p) or g.near_pole(p)  # noqa: E731
    return EvalFunction(
        lambda p: cf * f.evaluator(p) + cg * g.evaluator(p),
        f.context, guard, f.truncation,
    )


def zero_function(ctx: AutomorphyContext) -> EvalFunction:
    return EvalFunction(lambda p: 0.0 + 0.0j, ctx, label="0")


def constant_function(ctx: AutomorphyContext, value: complex) -> EvalFunction:
    return EvalFunction(lambda p: complex(value), ctx, label=str(value))
