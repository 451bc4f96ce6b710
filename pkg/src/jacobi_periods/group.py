"""Exact arithmetic in the Jacobi group SL2(Z) x Z^(2j).

Elements are written [A, (lam, mu)] with A an integer 2x2 matrix of
determinant 1 and lam, mu integer vectors of length j.  The group law is

    [A1,(l1,m1)][A2,(l2,m2)] = [A1 A2, (l',m') + (l2,m2)],
    (l'_i, m'_i)^t = A2^t (l1_i, m1_i)^t   per coordinate i,

and the action on H x C^j is

    gamma(tau, z) = ((a tau + b)/(c tau + d), (z + lam tau + mu)/(c tau + d)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DeterminantError, DimensionError

_ENTRY_LIMIT = 2**31  # elements beyond this are rejected; exactness guard

GENERATOR_NAMES = ("G0", "G2", "G3", "G4")


def _as_int_tuple(v) -> tuple[int, ...]:
    if isinstance(v, int):
        return (v,)
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class GroupElement:
    """A Jacobi group element [A, (lam, mu)]; immutable and hashable."""

    a: int
    b: int
    c: int
    d: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    @property
    def j(self) -> int:
        return len(self.lam)

    @property
    def mat(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __repr__(self) -> str:
        return f"[({self.a},{self.b};{self.c},{self.d}),({list(self.lam)},{list(self.mu)})]"


@dataclass(frozen=True)
class WordToken:
    """A power of one named generator, optionally coordinate-qualified."""

    gen: str
    exp: int
    coord: int = 0

    def __post_init__(self):
        if self.gen not in GENERATOR_NAMES:
            raise ValueError(f"unknown generator name {self.gen!r}")


@dataclass(frozen=True)
class Word:
    """Ordered product of generator powers factoring a group element."""

    tokens: tuple[WordToken, ...]
    j: int = 1

    def __len__(self) -> int:
        return sum(abs(t.exp) for t in self.tokens)


@dataclass(frozen=True)
class JacobiPoint:
    """A point (tau, z) in H x C^j."""

    tau: complex
    zvec: tuple[complex, ...]

    def __post_init__(self):
        if self.tau.imag <= 0:
            raise ValueError(f"tau must lie in the upper half plane, got {self.tau}")

    @property
    def j(self) -> int:
        return len(self.zvec)

    @property
    def z(self) -> complex:
        if len(self.zvec) != 1:
            raise DimensionError("scalar z requested from a multi-variable point")
        return self.zvec[0]

    @property
    def v(self) -> float:
        return self.tau.imag

    @property
    def y(self) -> tuple[float, ...]:
        return tuple(z.imag for z in self.zvec)


def point(tau: complex, *zs: complex) -> JacobiPoint:
    """Convenience constructor: point(tau, z) or point(tau, z, w)."""
    return JacobiPoint(complex(tau), tuple(complex(z) for z in zs))


def make_element(mat: Sequence[Sequence[int]], lam, mu) -> GroupElement:
    """Validate and build [mat, (lam, mu)]."""
    (a, b), (c, d) = mat
    a, b, c, d = int(a), int(b), int(c), int(d)
    lam_t = _as_int_tuple(lam)
    mu_t = _as_int_tuple(mu)
    if len(lam_t) != len(mu_t):
        raise DimensionError(f"lam has length {len(lam_t)} but mu has length {len(mu_t)}")
    if len(lam_t) not in (1, 2):
        raise DimensionError(f"dimension j={len(lam_t)} unsupported (j must be 1 or 2)")
    if a * d - b * c != 1:
        raise DeterminantError(f"determinant is {a * d - b * c}, expected 1")
    for entry in (a, b, c, d, *lam_t, *mu_t):
        if abs(entry) >= _ENTRY_LIMIT:
            raise OverflowError(f"entry {entry} exceeds the 2^31 exactness guard")
    return GroupElement(a, b, c, d, lam_t, mu_t)


def from_coordinate_pairs(mat, *pairs: tuple[int, int]) -> GroupElement:
    """Build a j=len(pairs) element from per-coordinate (lam_i, mu_i) pairs."""
    lam = tuple(p[0] for p in pairs)
    mu = tuple(p[1] for p in pairs)
    return make_element(mat, lam, mu)


def identity(j: int = 1) -> GroupElement:
    return make_element(((1, 0), (0, 1)), (0,) * j, (0,) * j)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Product g1 * g2 under the semidirect group law."""
    if g1.j != g2.j:
        raise DimensionError(f"dimension mismatch: {g1.j} vs {g2.j}")
    a = g1.a * g2.a + g1.b * g2.c
    b = g1.a * g2.b + g1.b * g2.d
    c = g1.c * g2.a + g1.d * g2.c
    d = g1.c * g2.b + g1.d * g2.d
    # (l', m')^t = A2^t (l1, m1)^t per coordinate, then add (l2, m2)
    lam = tuple(g2.a * l + g2.c * m + l2 for l, m, l2 in zip(g1.lam, g1.mu, g2.lam))
    mu = tuple(g2.b * l + g2.d * m + m2 for l, m, m2 in zip(g1.lam, g1.mu, g2.mu))
    return make_element(((a, b), (c, d)), lam, mu)


def compose_all(gs: Iterable[GroupElement]) -> GroupElement:
    gs = list(gs)
    if not gs:
        raise ValueError("empty product")
    out = gs[0]
    for g in gs[1:]:
        out = compose(out, g)
    return out


def inverse(g: GroupElement) -> GroupElement:
    """Inverse element; compose(g, inverse(g)) is the identity exactly."""
    ai, bi, ci, di = g.d, -g.b, -g.c, g.a
    # lattice part: -(A^-1)^t (lam, mu)^t per coordinate
    lam = tuple(-(ai * l + ci * m) for l, m in zip(g.lam, g.mu))
    mu = tuple(-(bi * l + di * m) for l, m in zip(g.lam, g.mu))
    return make_element(((ai, bi), (ci, di)), lam, mu)


def power(g: GroupElement, n: int) -> GroupElement:
    if n < 0:
        return power(inverse(g), -n)
    out = identity(g.j)
    for _ in range(n):
        out = compose(out, g)
    return out


def act(g: GroupElement, p: JacobiPoint) -> JacobiPoint:
    """Action on H x C^j; the denominator c*tau+d never vanishes on H."""
    if g.j != p.j:
        raise DimensionError(f"element has j={g.j} but point has j={p.j}")
    den = g.c * p.tau + g.d
    tau = (g.a * p.tau + g.b) / den
    zs = tuple((z + l * p.tau + m) / den for z, l, m in zip(p.zvec, g.lam, g.mu))
    return JacobiPoint(tau, zs)


def mu_norm(g: GroupElement) -> int:
    """Squared entry norm a^2+b^2+c^2+d^2 of the matrix part."""
    return g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d


def is_parabolic(g: GroupElement) -> bool:
    """True iff g = [(1,l;0,1),(0,r)]."""
    return (
        g.a == 1
        and g.d == 1
        and g.c == 0
        and all(l == 0 for l in g.lam)
    )


def generator_element(name: str, j: int = 1, coord: int = 0) -> GroupElement:
    """The group element behind a word token name (coordinate-qualified for j=2)."""
    if coord >= j:
        raise DimensionError(f"coordinate {coord} out of range for j={j}")
    e = [0] * j
    e[coord] = 1
    zero = (0,) * j
    if name == "G0":
        return make_element(((1, 1), (0, 1)), zero, zero)
    if name == "G2":
        return make_element(((0, -1), (1, 0)), tuple(e), zero)
    if name == "G3":
        return make_element(((1, 0), (0, 1)), tuple(e), zero)
    if name == "G4":
        return make_element(((1, 0), (0, 1)), zero, tuple(e))
    raise ValueError(f"unknown generator name {name!r}")


def expand_word(w: Word) -> GroupElement:
    """Multiply a word out to the group element it represents."""
    out = identity(w.j)
    for t in w.tokens:
        out = compose(out, power(generator_element(t.gen, w.j, t.coord), t.exp))
    return out


def _sl2_word_tokens(a: int, b: int, c: int, d: int) -> list[tuple[str, int]]:
    """Factor an SL2(Z) matrix into S- and T-tokens by continued fractions.

    Returns abstract tokens ("S", n) and ("T", 1); the caller rewrites them
    into the G-alphabet.  T^2 = -I handles the sign.
    """
    tokens: list[tuple[str, int]] = []
    while c != 0:
        # nearest-integer division keeps the word logarithmic in mu_norm
        n = round(a / c)
        if a - n * c == c:  # ties: keep |a - n c| <= |c| / 2 strictly
            n += 1
        if n != 0:
            tokens.append(("S", n))
        # A = S^n T A' with A' = T^{-1} S^{-n} A
        a, b, c, d = c, d, -(a - n * c), -(b - n * d)
        tokens.append(("T", 1))
    # now the matrix is +-S^b
    if a == 1:
        if b != 0:
            tokens.append(("S", b))
    else:
        # (-1, b; 0, -1) = T^2 S^{-b}
        tokens.append(("T", 1))
        tokens.append(("T", 1))
        if b != 0:
            tokens.append(("S", -b))
    return tokens


def factor_word(g: GroupElement) -> Word:
    """Factor g over {G0, G2, G3, G4} (coordinate-qualified for j=2).

    The lattice part is peeled off on the left via
    (lam', mu')^t = (A^t)^{-1} (lam, mu)^t, which is integral, then the
    SL2 part is reduced by continued fractions with T rewritten as
    G2 * G3^{-1}.
    """
    j = g.j
    # g = [I,(lam',mu')] * [A,(0,0)]  with A^t (lam',mu')^t = (lam,mu)^t
    lamp = tuple(g.d * l - g.c * m for l, m in zip(g.lam, g.mu))
    mup = tuple(-g.b * l + g.a * m for l, m in zip(g.lam, g.mu))
    tokens: list[WordToken] = []
    for coord, l in enumerate(lamp):
        if l != 0:
            tokens.append(WordToken("G3", l, coord))
    for coord, m in enumerate(mup):
        if m != 0:
            tokens.append(WordToken("G4", m, coord))
    for name, exp in _sl2_word_tokens(g.a, g.b, g.c, g.d):
        if name == "S":
            tokens.append(WordToken("G0", exp))
        else:  # [T,(0,0)] = G2 * G3^{-1} in coordinate 0
            tokens.append(WordToken("G2", 1))
            tokens.append(WordToken("G3", -1))
    return Word(tuple(tokens), j)


# common j=1 elements
I_J = identity(1)
G0 = generator_element("G0")
G1 = make_element(((1, 1), (0, 1)), (1,), (0,))
G2 = generator_element("G2")
G3 = generator_element("G3")
G4 = generator_element("G4")
T_ELT = make_element(((0, -1), (1, 0)), (0,), (0,))
S_ELT = G0
V_ELT = compose(power(G2, 3), G1)
R_ELT = compose(power(G2, 3), G0)
MINUS_I = make_element(((-1, 0), (0, -1)), (0,), (0,))
