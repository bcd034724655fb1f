"""Exact rational scalars and small vector helpers.

All coordinates in the library are `fractions.Fraction` values; nothing in the
core ever touches floating point.  Rationals serialize to canonical "p/q"
strings (plain "p" when the denominator is 1).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rat = Fraction
Vec = tuple[Rat, ...]


def rat(x) -> Rat:
    """Coerce an int, string, or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


def rat_str(q) -> str:
    """Canonical string form: 'p' for integers, 'p/q' otherwise."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s: str) -> Rat:
    """Parse a canonical 'p' or 'p/q' string."""
    return Fraction(s.strip())


def vec(values: Iterable) -> Vec:
    return tuple(rat(v) for v in values)


def vzero(dim: int) -> Vec:
    return tuple(Fraction(0) for _ in range(dim))


def vadd(u: Sequence, v: Sequence) -> Vec:
    return tuple(Fraction(a) + Fraction(b) for a, b in zip(u, v, strict=True))


def vsub(u: Sequence, v: Sequence) -> Vec:
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(u, v, strict=True))


def vneg(u: Sequence) -> Vec:
    return tuple(-Fraction(a) for a in u)


def vscale(s, u: Sequence) -> Vec:
    s = rat(s)
    return tuple(s * Fraction(a) for a in u)


def vdot(u: Sequence, v: Sequence) -> Rat:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v, strict=True)), Fraction(0))


def is_zero_vec(u: Sequence) -> bool:
    return all(Fraction(a) == 0 for a in u)


def primitive(u: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to a primitive integer
    vector (cleared denominators, gcd 1).

    The scaling factor is always positive, so the ray direction is preserved;
    flipping signs would change the cone a generator spans.  The zero vector
    maps to itself.
    """
    fr = [Fraction(a) for a in u]
    if all(a == 0 for a in fr):
        return tuple(0 for _ in fr)
    denom_lcm = 1
    for a in fr:
        d = a.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(a * denom_lcm) for a in fr]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(a // g for a in ints)
