"""Factorization over the integers by the Zassenhaus method.

Factor modulo a well-chosen prime, Hensel-lift the modular factors
until the modulus exceeds twice a coefficient bound, then recombine
subsets of lifted factors and keep those that divide exactly.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd
from functools import reduce

from ..errors import DegreeBoundExceeded, NotSquarefree, ZeroPolynomial
from .modp import (
    factor_mod_p,
    is_prime,
    mod_add,
    mod_divmod,
    mod_mul,
    mod_scale,
    mod_sub,
)
from .poly import Polynomial, is_squarefree

DEFAULT_MAX_DEGREE = 12
PRIME_TRIALS = 6


def mignotte_bound(cs: list[int]) -> int:
    """2^n * max|c| * (n + 1): bounds every coefficient of every factor."""
    n = len(cs) - 1
    return 2**n * max(abs(c) for c in cs) * (n + 1)


def _int_divmod(a: list[int], b: list[int]):
    """Exact integer division a / b, or None when the quotient is not integral."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(r) - 1 < db:
        return None
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c, rem = divmod(r[k], lb)
        if rem:
            return None
        q[k - db] = c
        if c:
            for j, bj in enumerate(b):
                r[k - db + j] -= c * bj
    if any(r[:db]):
        return None
    return q


def _primitive(cs: list[int]) -> list[int]:
    g = reduce(gcd, cs)
    cs = [c // g for c in cs]
    return [-c for c in cs] if cs[-1] < 0 else cs


def _symmetric(cs: list[int], M: int) -> list[int]:
    half = M // 2
    out = [c % M for c in cs]
    out = [c - M if c > half else c for c in out]
    while out and not out[-1]:
        out.pop()
    return out


def _bezout_mod_p(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = mod_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, mod_sub(s0, mod_mul(q, s1, p), p)
        t0, t1 = t1, mod_sub(t0, mod_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return mod_scale(s0, inv, p), mod_scale(t0, inv, p)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step (von zur Gathen-Gerhard 15.10), computed mod m."""
    e = mod_sub(f, mod_mul(g, h, m), m)
    q, r = mod_divmod(mod_mul(s, e, m), h, m)
    g2 = mod_add(mod_add(g, mod_mul(t, e, m), m), mod_mul(q, g, m), m)
    h2 = mod_add(h, r, m)
    b = mod_sub(mod_add(mod_mul(s, g2, m), mod_mul(t, h2, m), m), [1], m)
    c, d = mod_divmod(mod_mul(s, b, m), h2, m)
    s2 = mod_sub(s, d, m)
    t2 = mod_sub(mod_sub(t, mod_mul(t, b, m), m), mod_mul(c, g2, m), m)
    return g2, h2, s2, t2


def _lift_pair(fm, g, h, p, k):
    """Monic f = g*h mod p lifted to monic factors mod p^k."""
    M = p**k
    s, t = _bezout_mod_p(g, h, p)
    e = 1
    while e < k:
        e = min(2 * e, k)
        m = p**e
        g, h, s, t = _hensel_step([c % m for c in fm], g, h, s, t, m)
    return [c % M for c in g], [c % M for c in h]


def hensel_lift(cs: list[int], factors: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Monic factors mod p^k with cs = lc * prod(factors) mod p^k."""
    M = p**k
    inv = pow(cs[-1], -1, M)
    fm = [c * inv % M for c in cs]

    def rec(f, facs):
        if len(facs) == 1:
            return [f]
        mid = len(facs) // 2
        g = reduce(lambda a, b: mod_mul(a, b, p), facs[:mid])
        h = reduce(lambda a, b: mod_mul(a, b, p), facs[mid:])
        G, H = _lift_pair(f, g, h, p, k)
        return rec(G, facs[:mid]) + rec(H, facs[mid:])

    return rec(fm, factors)


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _zassenhaus(cs: list[int]) -> list[list[int]]:
    n = len(cs) - 1
    if n <= 1:
        return [cs]
    lc = cs[-1]
    poly = Polynomial(cs)
    best = None
    allowed = set(range(n + 1))
    tried = 0
    p = 2
    while tried < PRIME_TRIALS:
        p += 1
        if not is_prime(p) or lc % p == 0:
            continue
        fac = factor_mod_p(poly, p)
        if not fac.is_squarefree():
            continue
        tried += 1
        allowed &= _subset_sums(fac.pattern)
        if best is None or len(fac.factors) < len(best.factors):
            best = fac
        if allowed == {0, n}:
            return [cs]
    p = best.modulus
    B = abs(lc) * mignotte_bound(cs)
    k = 1
    while p**k <= 2 * B:
        k += 1
    M = p**k
    lifted = hensel_lift(cs, [list(g.coeffs) for g, _ in best.factors], p, k)

    found = []
    rest = list(cs)
    T = lifted
    size = 1
    while 2 * size <= len(T):
        hit = False
        for S in combinations(range(len(T)), size):
            deg = sum(len(T[i]) - 1 for i in S)
            if deg not in allowed:
                continue
            G = [rest[-1]]
            for i in S:
                G = mod_mul(G, T[i], M)
            G = _primitive(_symmetric(G, M))
            q = _int_divmod(rest, G)
            if q is None:
                continue
            found.append(G)
            rest = _primitive(q)
            T = [T[i] for i in range(len(T)) if i not in S]
            hit = True
            break
        if not hit:
            size += 1
    found.append(_primitive(rest))
    return found


def factor_over_Z(f: Polynomial, max_degree: int = DEFAULT_MAX_DEGREE) -> list[Polynomial]:
    """Irreducible factors of a squarefree polynomial, primitive with positive leading coefficient.

    Their product equals f up to a rational constant.
    """
    if f.is_zero():
        raise ZeroPolynomial("factoring the zero polynomial")
    if f.degree > max_degree:
        raise DegreeBoundExceeded(f"degree {f.degree} exceeds the bound {max_degree}")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} is not squarefree")
    cs = f.primitive_int()
    out = []
    if cs[0] == 0:
        out.append([0, 1])
        cs = cs[1:]
    if len(cs) > 1:
        out += _zassenhaus(cs)
    facs = [Polynomial(c) for c in out]
    facs.sort(key=lambda g: (g.degree, [abs(c) for c in reversed(g.coeffs)], list(reversed(g.coeffs))))
    return facs
