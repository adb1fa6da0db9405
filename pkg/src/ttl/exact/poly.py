"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending by degree as a tuple of ``Fraction``
with no trailing zeros, so the zero polynomial is the empty tuple and
two equal polynomials always compare and hash equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from ..errors import NonIntegerCoefficients, NonMonic, NotSquarefree, ZeroPolynomial


def _strip(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = _strip([Fraction(c) for c in coeffs])
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Polynomial:
        out = cls([1])
        for r in roots:
            out = out * cls([-Fraction(r), 1])
        return out

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise NonIntegerCoefficients(f"{self} has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> Polynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out, base = Polynomial([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.lc
        if len(r) <= db:
            return Polynomial(), self
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] / lb
            if c:
                q[k - db] = c
                for j, bj in enumerate(other.coeffs):
                    r[k - db + j] -= c * bj
        return Polynomial(q), Polynomial(r[:db])

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Polynomial:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> Polynomial:
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lc = self.lc
        return Polynomial([c / lc for c in self.coeffs])

    def scale_var(self, a) -> Polynomial:
        """Return f(a*x)."""
        a = Fraction(a)
        return Polynomial([c * a**i for i, c in enumerate(self.coeffs)])

    def shift(self, a) -> Polynomial:
        """Return f(x + a) by repeated synthetic division."""
        a = Fraction(a)
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                cs[k] += a * cs[k + 1]
        return Polynomial(cs)

    def reflect(self) -> Polynomial:
        """Return f(-x)."""
        return Polynomial([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive in Z[x]."""
        if not self.coeffs:
            return Fraction(0)
        num = reduce(gcd, (c.numerator for c in self.coeffs))
        den = reduce(lcm, (c.denominator for c in self.coeffs))
        return Fraction(num, den)

    def primitive_int(self) -> list[int]:
        """Integer coefficient list of self / content, leading coefficient positive."""
        c = self.content()
        cs = [int(x / c) for x in self.coeffs]
        if cs and cs[-1] < 0:
            cs = [-x for x in cs]
        return cs

    # -- text ----------------------------------------------------------

    def canonical(self) -> str:
        """Ascending comma-separated coefficient list, e.g. "-2,0,0,1"."""
        return ",".join(fmt_rational(c) for c in self.coeffs) or "0"

    @classmethod
    def from_canonical(cls, text: str) -> Polynomial:
        return cls(Fraction(t.strip()) for t in text.split(","))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                body = fmt_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{fmt_rational(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.canonical()!r})"


def _coerce(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    return Polynomial([v])


def fmt_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------
# gcd, squarefree part, Sturm


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q (zero only when both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def _squarefree_mod_small_prime(f: Polynomial) -> bool:
    # certificate shortcut: f squarefree mod p with p not dividing lc implies f squarefree over Q
    from .modp import ModPolynomial, mod_gcd, small_primes

    cs = f.primitive_int()
    for p in small_primes(12):
        if cs[-1] % p == 0:
            continue
        fp = ModPolynomial(cs, p)
        if fp.degree != len(cs) - 1:
            continue
        if mod_gcd(fp.coeffs, fp.derivative().coeffs, p) == [1]:
            return True
    return False


def is_squarefree(f: Polynomial) -> bool:
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if f.degree <= 1:
        return True
    if _squarefree_mod_small_prime(f):
        return True
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_part(f: Polynomial) -> Polynomial:
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(f, f.derivative())
    return f.exact_div(g).monic() if g else f.monic()


def sturm_sequence(f: Polynomial) -> list[Polynomial]:
    seq = [f, f.derivative()]
    while seq[-1]:
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _variations(signs: Sequence[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(f: Polynomial) -> int:
    """Number of distinct real roots of a squarefree polynomial."""
    if f.is_zero():
        raise ZeroPolynomial("Sturm count of the zero polynomial")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} is not squarefree")
    seq = sturm_sequence(f)
    at_pos = [(p.lc > 0) - (p.lc < 0) for p in seq]
    at_neg = [s if p.degree % 2 == 0 else -s for s, p in zip(at_pos, seq)]
    return _variations(at_neg) - _variations(at_pos)


# ---------------------------------------------------------------------
# resultants and resultant-built transforms


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer lists: lc(b)^(da-db+1) a mod b."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        k = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, bj in enumerate(b):
            r[k + j] -= c * bj
        _strip(r)
        e -= 1
    if e > 0:
        r = [x * lb**e for x in r]
    return r


def _int_resultant(a: list[int], b: list[int]) -> int:
    # subresultant PRS on primitive integer lists (Cohen, Alg. 3.3.7)
    da, db = len(a) - 1, len(b) - 1
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    g = h = 1
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        a = b
        if not r:
            return 0
        div = g * h**delta
        b = [x // div for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return s * (b[-1] ** da // h ** (da - 1))


def resultant(f: Polynomial, g: Polynomial) -> Fraction:
    """Res(f, g) = lc(f)^deg g * prod g(alpha) over the roots alpha of f."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    m, n = f.degree, g.degree
    if m == 0:
        return f.lc**n
    if n == 0:
        return g.lc**m
    cf, cg = f.content(), g.content()
    a = [int(c / cf) for c in f.coeffs]
    b = [int(c / cg) for c in g.coeffs]
    return cf**n * cg**m * _int_resultant(a, b)


def interpolate(xs: Sequence, ys: Sequence) -> Polynomial:
    """Newton divided-difference interpolation, expanded to the monomial basis."""
    xs = [Fraction(x) for x in xs]
    dd = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    out = [dd[-1]]
    for i in range(n - 2, -1, -1):
        # out = out * (x - xs[i]) + dd[i]
        nxt = [Fraction(0)] * (len(out) + 1)
        for k, c in enumerate(out):
            nxt[k + 1] += c
            nxt[k] -= c * xs[i]
        nxt[0] += dd[i]
        out = nxt
    return Polynomial(out)


def composed_sum(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic polynomial whose roots are all sums alpha + beta (with multiplicity).

    Computed as Res_y(f(y), g(x - y)) by evaluating the resultant at
    deg f * deg g + 1 integer points and interpolating.
    """
    if not (f.is_monic() and g.is_monic()):
        raise NonMonic("composed_sum needs monic inputs")
    if f.degree < 1 or g.degree < 1:
        raise NonMonic("composed_sum needs inputs of degree >= 1")
    n = f.degree * g.degree
    g_reflected = g.reflect()  # g(-y); g(a - y) = g_reflected(y - a)
    xs = list(range(n + 1))
    ys = [resultant(f, g_reflected.shift(-a)) for a in xs]
    return interpolate(xs, ys)


def root_transform(f: Polynomial, h: Polynomial) -> Polynomial:
    """Monic polynomial with roots h(alpha) over the roots alpha of monic f.

    Res_y(f(y), x - h(y)), again by evaluation at integer points.
    """
    if not f.is_monic():
        raise NonMonic("root_transform needs monic f")
    n = f.degree
    xs = list(range(n + 1))
    ys = [resultant(f, Polynomial([a]) - h) for a in xs]
    return interpolate(xs, ys)


def poly_exact_sqrt(f: Polynomial) -> Polynomial | None:
    """Monic g with g*g == f, or None when f is not a perfect square."""
    if not f.is_monic() or f.degree % 2:
        return None
    k = f.degree // 2
    g = [Fraction(0)] * (k + 1)
    g[k] = Fraction(1)
    for i in range(1, k + 1):
        target = f[2 * k - i]
        acc = Fraction(0)
        for a in range(k - i + 1, k):
            acc += g[a] * g[2 * k - i - a]
        g[k - i] = (target - acc) / 2
    root = Polynomial(g)
    return root if root * root == f else None


def is_eisenstein(f: Polynomial, p: int) -> bool:
    if not f.is_monic():
        raise NonMonic("Eisenstein criterion is stated for monic polynomials")
    cs = f.int_coeffs()
    if len(cs) < 2:
        return False
    return all(c % p == 0 for c in cs[:-1]) and cs[0] % (p * p) != 0
