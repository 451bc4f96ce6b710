"""Hurwitz class numbers as exact rationals.

H(n) counts SL2(Z)-classes of positive definite binary quadratic forms of
discriminant -n, weighting multiples of x^2+y^2 by 1/2 and multiples of
x^2+xy+y^2 by 1/3, with the conventions H(0) = -1/12 and H(n) = 0 for
n = 1, 2 mod 4.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

H_ZERO = Fraction(-1, 12)


def _reduced_forms(n: int, primitive_only: bool):
    """Reduced positive definite forms (a,b,c) with b^2-4ac = -n.

    Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    out = []
    a = 1
    while 3 * a * a <= n:
        for b in range(-a, a + 1):
            num = b * b + n
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == -b or a == c):
                continue
            if primitive_only and gcd(gcd(a, abs(b)), c) != 1:
                continue
            out.append((a, b, c))
        a += 1
    return out


def _weight(a: int, b: int, c: int) -> Fraction:
    if b == 0 and a == c:
        return Fraction(1, 2)
    if a == b == c:
        return Fraction(1, 3)
    return Fraction(1)


@lru_cache(maxsize=None)
def _primitive_class_weight(disc_neg: int) -> Fraction:
    """Weighted count of primitive reduced forms of discriminant -disc_neg."""
    return sum((_weight(*f) for f in _reduced_forms(disc_neg, True)), Fraction(0))


@lru_cache(maxsize=None)
def hurwitz_H(n: int) -> Fraction:
    """Hurwitz class number H(n) via primitive classes of the square divisors:
    every form of discriminant -n is g times a primitive form of
    discriminant -n/g^2, so H(n) = sum over g^2 | n of the primitive counts.
    """
    if n < 0:
        raise ValueError("hurwitz_H requires n >= 0")
    if n == 0:
        return H_ZERO
    if n % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    g = 1
    while g * g <= n:
        if n % (g * g) == 0:
            d = n // (g * g)
            if d % 4 in (0, 3):
                total += _primitive_class_weight(d)
        g += 1
    return total


def hurwitz_H_bruteforce(n: int) -> Fraction:
    """Independent oracle: weighted count of all reduced forms of discriminant -n."""
    if n == 0:
        return H_ZERO
    if n % 4 in (1, 2):
        return Fraction(0)
    return sum((_weight(*f) for f in _reduced_forms(n, False)), Fraction(0))


def sigma1(n: int) -> int:
    """Divisor sum, used by the class number relation tests."""
    s = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            s += d
            if d != n // d:
                s += n // d
    return s
