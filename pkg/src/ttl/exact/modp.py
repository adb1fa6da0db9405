"""Polynomials over prime fields and their factorization.

Internally a polynomial mod p is a list of residues, ascending, with no
trailing zeros. Factoring is the classical three-stage pipeline:
squarefree decomposition, distinct-degree factorization, and
equal-degree splitting (Cantor-Zassenhaus, with the trace map for p = 2).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import CompositeModulus, LeadingCoefficientVanishesModP, NonMonic
from .poly import Polynomial

EDF_SEED = 20240117


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def small_primes(count: int, start: int = 2) -> list[int]:
    out, n = [], max(start, 2)
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return out


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise CompositeModulus(f"{p} is not prime")


# -- list arithmetic mod p ----------------------------------------------


def _strip(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def reduce_mod(cs: Sequence, p: int) -> list[int]:
    out = []
    for c in cs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"denominator of {c} vanishes mod {p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return _strip(out)


def mod_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _strip(out)


def mod_sub(a, b, p):
    return mod_add(a, [(-c) % p for c in b], p)


def mod_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip([c % p for c in out])


def mod_scale(a, c, p):
    return _strip([x * c % p for x in a])


def mod_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial mod p")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) <= db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % p
        if c:
            q[k - db] = c
            for j, bj in enumerate(b):
                r[k - db + j] = (r[k - db + j] - c * bj) % p
    return _strip(q), _strip(r[:db])


def mod_rem(a, b, p):
    return mod_divmod(a, b, p)[1]


def mod_monic(a, p):
    if not a:
        return a
    return mod_scale(a, pow(a[-1], -1, p), p)


def mod_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, mod_rem(a, b, p)
    return mod_monic(a, p)


def mod_derivative(a, p):
    return _strip([i * c % p for i, c in enumerate(a)][1:])


def mod_powmod(base, e, f, p):
    out, base = [1], mod_rem(base, f, p)
    while e:
        if e & 1:
            out = mod_rem(mod_mul(out, base, p), f, p)
        base = mod_rem(mod_mul(base, base, p), f, p)
        e >>= 1
    return out


def mod_exact_div(a, b, p):
    q, r = mod_divmod(a, b, p)
    assert not r, "inexact division mod p"
    return q


# -- public types ----------------------------------------------------------


@dataclass(frozen=True)
class ModPolynomial:
    coeffs: tuple[int, ...]
    p: int

    def __init__(self, coeffs: Sequence, p: int):
        _check_prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(reduce_mod(coeffs, p)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def derivative(self) -> ModPolynomial:
        return ModPolynomial(mod_derivative(list(self.coeffs), self.p), self.p)

    def __mul__(self, other: ModPolynomial) -> ModPolynomial:
        return ModPolynomial(mod_mul(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __pow__(self, k: int) -> ModPolynomial:
        out = ModPolynomial([1], self.p)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return f"{Polynomial(self.coeffs)} (mod {self.p})"


@dataclass(frozen=True)
class FactorizationModP:
    modulus: int
    unit: int
    factors: tuple[tuple[ModPolynomial, int], ...]

    @property
    def pattern(self) -> list[int]:
        """Sorted multiset of factor degrees, repeated by multiplicity."""
        return sorted(g.degree for g, m in self.factors for _ in range(m))

    def product(self) -> ModPolynomial:
        out = ModPolynomial([self.unit], self.modulus)
        for g, m in self.factors:
            out = out * g**m
        return out

    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)


# -- factorization -----------------------------------------------------


def _pth_root(a, p):
    return [a[i] for i in range(0, len(a), p)]


def squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Monic f -> [(g, m)] with f = prod g^m and each g squarefree."""
    out: list[tuple[list[int], int]] = []
    if len(f) <= 1:
        return out
    w = mod_derivative(f, p)
    if not w:
        return [(g, m * p) for g, m in squarefree_decomposition(_pth_root(f, p), p)]
    c = mod_gcd(f, w, p)
    w = mod_exact_div(f, c, p)
    i = 1
    while len(w) > 1:
        y = mod_gcd(w, c, p)
        fac = mod_exact_div(w, y, p)
        if len(fac) > 1:
            out.append((mod_monic(fac, p), i))
        i += 1
        w = y
        c = mod_exact_div(c, y, p)
    if len(c) > 1:
        out += [(g, m * p) for g, m in squarefree_decomposition(_pth_root(c, p), p)]
    return out


def distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree monic f -> [(product of all degree-d factors, d)]."""
    out = []
    h = [0, 1]
    d = 0
    while 2 * (d + 1) <= len(f) - 1:
        d += 1
        h = mod_powmod(h, p, f, p)
        g = mod_gcd(f, mod_sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = mod_exact_div(f, g, p)
            h = mod_rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Split a squarefree monic f whose irreducible factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _strip([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t, s = list(a), list(a)
            for _ in range(d - 1):
                s = mod_rem(mod_mul(s, s, p), f, p)
                t = mod_add(t, s, p)
            b = t
        else:
            b = mod_sub(mod_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = mod_gcd(f, b, p)
        if 1 < len(g) < len(f):
            break
    return equal_degree(g, d, p, rng) + equal_degree(mod_exact_div(f, g, p), d, p, rng)


def _factor_monic(f: list[int], p: int) -> list[tuple[list[int], int]]:
    rng = random.Random(EDF_SEED)
    out = []
    for g, m in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p):
            for fac in equal_degree(h, d, p, rng):
                out.append((fac, m))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return out


def factor_mod_p(f: Polynomial | ModPolynomial, p: int | None = None) -> FactorizationModP:
    """Complete factorization into monic irreducibles mod p."""
    if isinstance(f, ModPolynomial):
        p = f.p
        cs = list(f.coeffs)
    else:
        _check_prime(p)
        if f.lc.numerator % p == 0:
            raise LeadingCoefficientVanishesModP(f"leading coefficient of {f} vanishes mod {p}")
        cs = reduce_mod(f.coeffs, p)
    if not cs:
        raise LeadingCoefficientVanishesModP("polynomial vanishes mod p")
    unit = cs[-1]
    facs = _factor_monic(mod_monic(cs, p), p)
    return FactorizationModP(
        modulus=p,
        unit=unit,
        factors=tuple((ModPolynomial(g, p), m) for g, m in facs),
    )


def is_irreducible_mod_p(f: ModPolynomial) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n."""
    if not f.is_monic():
        raise NonMonic(f"{f} is not monic")
    n, p = f.degree, f.p
    if n < 1:
        raise NonMonic("irreducibility needs degree >= 1")
    if n == 1:
        return True
    cs = list(f.coeffs)
    if cs[0] == 0:
        return False
    powers = {}
    h = [0, 1]
    for k in range(1, n + 1):
        h = mod_powmod(h, p, cs, p)
        powers[k] = h
    if mod_sub(powers[n], [0, 1], p):
        return False
    for q in {q for q in range(2, n + 1) if n % q == 0 and is_prime(q)}:
        g = mod_gcd(cs, mod_sub(powers[n // q], [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


def is_squarefree_mod_p(f: Polynomial, p: int) -> bool:
    """True when f keeps its degree mod p and has no repeated factor there."""
    if f.lc.numerator % p == 0 or any(c.denominator % p == 0 for c in f.coeffs):
        return False
    cs = reduce_mod(f.coeffs, p)
    return mod_gcd(cs, mod_derivative(cs, p), p) == [1]
