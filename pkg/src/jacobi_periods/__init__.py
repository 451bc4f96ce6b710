"""Numerical toolkit for the Jacobi group, slash operators, Jacobi integrals
and the verification of their period relations."""

from .automorphy import (
    AutomorphyContext,
    EvalFunction,
    MultiplierSystem,
    appell_multiplier,
    automorphy_factor,
    slash,
    zwegers_multiplier,
)
from .errors import *  # noqa: F401,F403
from .group import (
    GroupElement,
    JacobiPoint,
    Word,
    act,
    compose,
    factor_word,
    inverse,
    is_parabolic,
    make_element,
    mu_norm,
    point,
)
from .numerics import DEFAULT_POLICY, TruncationPolicy

__all__ = [
    "AutomorphyContext", "EvalFunction", "MultiplierSystem",
    "appell_multiplier", "automorphy_factor", "slash", "zwegers_multiplier",
    "GroupElement", "JacobiPoint", "Word", "act", "compose", "factor_word",
    "inverse", "is_parabolic", "make_element", "mu_norm", "point",
    "DEFAULT_POLICY", "TruncationPolicy",
]
