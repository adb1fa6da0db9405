"""Chinese remaindering with a nearest-to-target choice of representative."""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd
from typing import Iterable

from ..errors import ModuliNotCoprime


def crt(residues: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Return (x, M) with x = r_i mod m_i for all i and M the product of moduli."""
    x, M = 0, 1
    for r, m in residues:
        if gcd(M, m) != 1:
            raise ModuliNotCoprime(f"modulus {m} shares a factor with {M}")
        # x + M*t = r (mod m)
        t = (r - x) * pow(M, -1, m) % m
        x, M = x + M * t, M * m
    return x % M, M


def crt_lift(residues: Iterable[tuple[int, int]], target) -> int:
    """Integer in the residue class nearest to ``target``; ties go toward -infinity."""
    x0, M = crt(residues)
    target = Fraction(target)
    lower = x0 + floor((target - x0) / M) * M
    upper = lower + M
    return lower if target - lower <= upper - target else upper
