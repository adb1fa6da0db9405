"""Type-A weight combinatorics for candidate Hodge groups.

Minuscule dimension tables, the Weyl dimension formula for sl_{l+1},
the exterior square of V(omega_m) on A_{2m-1}, candidate Hodge groups
for a 2g-dimensional faithful representation, and the eigenvalue
spectrum of subset sums that singles out g = 10.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BadParameter, BadRank, EqualEigenvalues, PowerGuard


@dataclass(frozen=True)
class WeightA:
    """Dominant weight sum a_i omega_i on A_l, stored as (a_1, ..., a_l)."""

    rank: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise BadRank(f"A_{self.rank} needs rank >= 1")
        if len(self.coeffs) != self.rank:
            raise BadParameter(f"weight on A_{self.rank} needs {self.rank} coefficients")
        if any(c < 0 for c in self.coeffs):
            raise BadParameter("weight is not dominant")

    @classmethod
    def fundamental(cls, rank: int, *indices: int) -> WeightA:
        """omega_{i1} + omega_{i2} + ...; indices 0 and rank+1 stand for the zero weight."""
        cs = [0] * rank
        for i in indices:
            if 1 <= i <= rank:
                cs[i - 1] += 1
            elif i not in (0, rank + 1):
                raise BadParameter(f"omega_{i} does not exist on A_{rank}")
        return cls(rank, tuple(cs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def partition(self) -> list[int]:
        """lambda_k = a_k + ... + a_l, with lambda_{l+1} = 0."""
        out, run = [0], 0
        for c in reversed(self.coeffs):
            run += c
            out.append(run)
        return out[::-1]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, start=1):
            if c:
                terms.append(f"w{i}" if c == 1 else f"{c}*w{i}")
        return " + ".join(terms) if terms else "0"


def weyl_dim_A(l: int, w: WeightA) -> int:
    """prod over i < j of (lambda_i - lambda_j + j - i) / (j - i)."""
    if l < 1 or w.rank != l:
        raise BadRank(f"weight of rank {w.rank} used on A_{l}")
    lam = w.partition()
    num = den = 1
    for i in range(l + 1):
        for j in range(i + 1, l + 1):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def minuscule_dims(type_label: str, l: int) -> list[tuple[str, int]]:
    if l < 1 or (type_label == "D" and l < 3):
        raise BadRank(f"{type_label}_{l} is not a valid rank")
    if type_label == "A":
        return [(f"w{j}", comb(l + 1, j)) for j in range(1, l + 1)]
    if type_label == "B":
        return [("spin", 2**l)]
    if type_label == "C":
        return [("w1", 2 * l)]
    if type_label == "D":
        return [("vector", 2 * l), ("half-spin+", 2 ** (l - 1)), ("half-spin-", 2 ** (l - 1))]
    raise BadParameter(f"unknown type {type_label!r}")


# ---------------------------------------------------------------------
# exterior square of V(omega_m)


@dataclass
class Wedge2Decomposition:
    m: int
    rank: int
    weights: list[WeightA]
    dims: list[int]
    expected: int
    has_trivial: bool

    @property
    def identity_holds(self) -> bool:
        return sum(self.dims) == self.expected

    @property
    def nontrivial(self) -> int:
        return sum(1 for w in self.weights if not w.is_zero())

    @property
    def verdict(self) -> str:
        if self.nontrivial == 1:
            return "simple plus trivial" if self.has_trivial else "simple"
        tail = " plus trivial" if self.has_trivial else ""
        return f"{self.nontrivial} nontrivial summands{tail}"

    @property
    def g(self) -> int:
        return comb(2 * self.m, self.m) // 2

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "rank": self.rank,
            "g": self.g,
            "summands": [{"weight": str(w), "coeffs": list(w.coeffs), "dim": d} for w, d in zip(self.weights, self.dims)],
            "expected": self.expected,
            "identity_holds": self.identity_holds,
            "has_trivial": self.has_trivial,
            "verdict": self.verdict,
        }


def wedge2_omega_m_decomposition(m: int) -> Wedge2Decomposition:
    """Summands V(omega_{m+i} + omega_{m-i}) of wedge^2 V(omega_m) over odd i <= m."""
    if m < 2:
        raise BadParameter("m >= 2 required")
    l = 2 * m - 1
    weights = [WeightA.fundamental(l, m + i, m - i) for i in range(1, m + 1, 2)]
    dims = [weyl_dim_A(l, w) for w in weights]
    return Wedge2Decomposition(
        m=m, rank=l, weights=weights, dims=dims,
        expected=comb(comb(2 * m, m), 2),
        has_trivial=any(w.is_zero() for w in weights),
    )


def sl_wedge2_verdict_scan(m_max: int) -> dict:
    """Scan 2 <= m <= m_max; among m >= 3 only m = 3 is simple plus trivial."""
    if m_max < 3:
        raise BadParameter("m_max >= 3 required")
    rows = [wedge2_omega_m_decomposition(m) for m in range(2, m_max + 1)]
    hits = [d for d in rows if d.m >= 3 and d.verdict == "simple plus trivial"]
    assert all(d.identity_holds for d in rows)
    return {
        "rows": [d.to_json() for d in rows],
        "compatible_m": [d.m for d in hits],
        "g": hits[0].g if len(hits) == 1 else None,
    }


def sp_wedge2_dims(g: int) -> tuple[int, int]:
    if g < 2:
        raise BadParameter("g >= 2 required")
    return comb(2 * g, 2) - 1, 1


# ---------------------------------------------------------------------
# candidate Hodge groups


@dataclass(frozen=True)
class HodgeGroupCandidate:
    type_label: str
    rank: int
    representation: str
    j: int | None = None

    def __str__(self) -> str:
        tail = f" (j={self.j})" if self.j is not None else ""
        return f"{self.type_label}{self.rank} {self.representation}{tail}"

    def to_json(self) -> dict:
        return {"type": self.type_label, "rank": self.rank, "representation": self.representation, "j": self.j}


def perfect_power(n: int) -> tuple[int, int] | None:
    """(b, e) with n = b^e, e >= 2 maximal, or None."""
    if n < 4:
        return None
    for e in range(n.bit_length(), 1, -1):
        b = round(n ** (1 / e))
        for c in (b - 1, b, b + 1):
            if c > 1 and c**e == n:
                return c, e
    return None


def bor_tabs_enumerate(g: int, allow_power: bool = False) -> list[HodgeGroupCandidate]:
    """Simple types with a minuscule faithful 2g-dimensional representation."""
    if g < 3:
        raise BadParameter("g >= 3 required")
    n = 2 * g
    pw = perfect_power(n)
    if pw and not allow_power:
        raise PowerGuard(f"2g = {n} = {pw[0]}^{pw[1]} is a perfect power")
    out = [
        HodgeGroupCandidate("A", n - 1, "standard"),
        HodgeGroupCandidate("C", g, "standard"),
        HodgeGroupCandidate("D", g, "vector"),
    ]
    for r in range(2, n - 1):
        for j in range(2, (r + 1) // 2 + 1):
            if comb(r + 1, j) == n:
                out.append(HodgeGroupCandidate("A", r, "exterior power", j))
    return out


# ---------------------------------------------------------------------
# subset-sum spectra


@dataclass
class SpectrumAnalysis:
    p: int
    q: int
    a: Fraction
    b: Fraction
    j: int
    spectrum: dict[Fraction, int]

    @property
    def total(self) -> int:
        return sum(self.spectrum.values())

    def to_json(self) -> dict:
        from .exact import fmt_rational

        return {
            "p": self.p, "q": self.q, "j": self.j,
            "a": fmt_rational(self.a), "b": fmt_rational(self.b),
            "spectrum": [[fmt_rational(v), k] for v, k in sorted(self.spectrum.items())],
            "total": self.total,
        }


def subset_sum_spectrum(p: int, q: int, j: int, a, b) -> SpectrumAnalysis:
    """Sums of j of the values (a repeated p times, b repeated q times), with multiplicity."""
    a, b = Fraction(a), Fraction(b)
    if p < 1 or q < 1 or not (1 <= j <= p + q - 1):
        raise BadParameter(f"need p, q >= 1 and 1 <= j <= p+q-1, got p={p} q={q} j={j}")
    if a == b:
        raise EqualEigenvalues("a and b must differ")
    if p * a + q * b != 0:
        raise BadParameter("p*a + q*b must vanish")
    spec: dict[Fraction, int] = {}
    for k in range(max(0, j - q), min(j, p) + 1):
        v = k * a + (j - k) * b
        spec[v] = spec.get(v, 0) + comb(p, k) * comb(q, j - k)
    return SpectrumAnalysis(p, q, a, b, j, spec)


def two_value_balanced_check(p: int, q: int, j: int) -> dict:
    s = subset_sum_spectrum(p, q, j, q, -p)
    mults = list(s.spectrum.values())
    balanced = len(mults) == 2 and mults[0] == mults[1]
    l = p + q - 1
    out = {"p": p, "q": q, "j": j, "l": l, "balanced": balanced, "forced_relation": None}
    if balanced and 1 < j < l:
        assert l == 2 * j - 1 and min(p, q) == 1
        out["forced_relation"] = "l = 2j-1"
    return out

