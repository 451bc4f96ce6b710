"""Period systems: generator-level period functions, cocycle extension to
arbitrary group elements, the lifting operator, and growth diagnostics."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .automorphy import (
    AutomorphyContext,
    EvalFunction,
    add,
    slash,
    zero_function,
)
from .errors import (
    ContextMismatchError,
    DerivativeError,
    DuplicateNameError,
    MissingGeneratorError,
)
from .group import (
    GroupElement,
    JacobiPoint,
    Word,
    WordToken,
    factor_word,
    generator_element,
    identity,
    inverse,
    power,
)


@dataclass
class PeriodSystem:
    """A Jacobi integral's period data: one EvalFunction per generator.

    Values on arbitrary group elements follow from the cocycle rule
    P_{g1 g2} = P_{g1} | g2 + P_{g2} along the element's factored word.
    Missing generator entries (typically G3) are derived from the word
    identity [I,(1,0)] = G2^{-3} G0^{-1} G2^2 G0 G2.
    """

    name: str
    context: AutomorphyContext
    generator_periods: dict = field(default_factory=dict)
    integral: Optional[EvalFunction] = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        normalized = {}
        for key, fn in self.generator_periods.items():
            if isinstance(key, str):
                key = (key, 0)
            if not fn.context.same_action(self.context):
                raise ContextMismatchError(
                    f"period for {key} does not share the system context")
            normalized[key] = fn
        self.generator_periods = normalized

    def _token_period(self, name: str, coord: int) -> EvalFunction:
        try:
            return self.generator_periods[(name, coord)]
        except KeyError:
            pass
        if name == "G3":
            fn = self._derive_g3(coord)
            self.generator_periods[(name, coord)] = fn
            return fn
        raise MissingGeneratorError(
            f"period system {self.name!r} has no data for {name}[{coord}]")

    def _derive_g3(self, coord: int) -> EvalFunction:
        # [I,(1,0)] = G2^{-3} G0^{-1} G2^2 G0 G2 in each coordinate
        word = Word((
            WordToken("G2", -3, coord),
            WordToken("G0", -1),
            WordToken("G2", 2, coord),
            WordToken("G0", 1),
            WordToken("G2", 1, coord),
        ), self.context.j)
        return self._word_period(word)

    def _power_period(self, tok: WordToken) -> tuple[GroupElement, EvalFunction]:
        gen = generator_element(tok.gen, self.context.j, tok.coord)
        base = self._token_period(tok.gen, tok.coord)
        if tok.exp >= 0:
            elt, per = identity(self.context.j), zero_function(self.context)
            for _ in range(tok.exp):
                per = add(slash(per, gen), base)
                elt = _compose(elt, gen)
            return elt, per
        ginv = inverse(gen)
        # P_{g^-1} = -P_g | g^-1
        inv_per = add(zero_function(self.context), slash(base, ginv), 1.0, -1.0)
        elt, per = identity(self.context.j), zero_function(self.context)
        for _ in range(-tok.exp):
            per = add(slash(per, ginv), inv_per)
            elt = _compose(elt, ginv)
        return elt, per

    def _word_period(self, word: Word) -> EvalFunction:
        elt, per = identity(self.context.j), zero_function(self.context)
        for tok in word.tokens:
            t_elt, t_per = self._power_period(tok)
            per = add(slash(per, t_elt), t_per)
            elt = _compose(elt, t_elt)
        return per

    def extend(self, g: GroupElement) -> EvalFunction:
        """The period EvalFunction P_g, cached per exact element."""
        if g in self._cache:
            return self._cache[g]
        word = factor_word(g)
        per = self._word_period(word)
        self._cache[g] = per
        return per


def _compose(a: GroupElement, b: GroupElement) -> GroupElement:
    from .group import compose

    return compose(a, b)


_REGISTRY: dict[str, PeriodSystem] = {}


def register_integral(name: str, f: Optional[EvalFunction],
                      periods: dict, context: AutomorphyContext) -> PeriodSystem:
    """Store a period system under a unique name; immutable afterwards."""
    if name in _REGISTRY:
        raise DuplicateNameError(f"integral {name!r} already registered")
    ps = PeriodSystem(name, context, dict(periods), integral=f)
    _REGISTRY[name] = ps
    return ps


def get_system(name: str) -> PeriodSystem:
    return _REGISTRY[name]


def clear_registry() -> None:
    _REGISTRY.clear()


def cocycle_extend(ps: PeriodSystem, g: GroupElement, p: JacobiPoint) -> complex:
    """Value of the extended period P_g at p."""
    return ps.extend(g)(p)


def psi_lift(f: EvalFunction, p: JacobiPoint, step: float = 1e-4,
             target: float = 1e-6) -> complex:
    """The lowering lift v^k e^{-4 pi m y^2/v} df/dzbar at p.

    The Wirtinger derivative d/dzbar = (d/dx + i d/dy)/2 is taken by central
    differences with one Richardson level; f need only be real analytic.
    """
    ctx = f.context
    if ctx.j != 1:
        raise ContextMismatchError("psi_lift implemented for one elliptic variable")
    z = p.z

    def dzbar(h: float) -> complex:
        fxp = f.evaluator(JacobiPoint(p.tau, (z + h,)))
        fxm = f.evaluator(JacobiPoint(p.tau, (z - h,)))
        fyp = f.evaluator(JacobiPoint(p.tau, (z + 1j * h,)))
        fym = f.evaluator(JacobiPoint(p.tau, (z - 1j * h,)))
        return ((fxp - fxm) + 1j * (fyp - fym)) / (4.0 * h)

    h = step * max(1.0, abs(z))
    d1 = dzbar(h)
    d2 = dzbar(h / 2.0)
    deriv = (4.0 * d2 - d1) / 3.0
    if abs(d2 - d1) > 10.0 * max(target, abs(deriv) * 1e-6):
        raise DerivativeError(
            f"Richardson levels disagree by {abs(d2 - d1):.2e} at {p}")
    v = p.tau.imag
    y = z.imag
    m = ctx.m
    return complex(v ** ctx.weight * np.exp(-4.0 * np.pi * m * y * y / v) * deriv)


def growth_profile(P: EvalFunction, taus, zs) -> dict:
    """Least-squares style fit of |P| e^{-2 pi Tr(M y^t y / v)} against
    K(|tau|^rho + v^-sigma) over a sample grid; diagnostic only."""
    M = P.context.index
    samples = []
    for tau in taus:
        for z in zs:
            pnt = JacobiPoint(complex(tau), (complex(z),) if P.context.j == 1 else tuple(z))
            if P.near_pole(pnt):
                continue
            y = np.asarray(pnt.y)
            weight = np.exp(-2.0 * np.pi * float(y @ M @ y) / pnt.v)
            samples.append((abs(tau), pnt.v, abs(P(pnt)) * weight))
    best = None
    for rho in (0.0, 0.5, 1.0, 2.0, 4.0):
        for sigma in (0.0, 0.5, 1.0, 2.0, 4.0):
            k = max(w / (at ** rho + v ** (-sigma)) for at, v, w in samples)
            if best is None or k < best[0]:
                best = (k, rho, sigma)
    return {"K": best[0], "rho": best[1], "sigma": best[2],
            "max_ratio": best[0], "n_samples": len(samples)}
