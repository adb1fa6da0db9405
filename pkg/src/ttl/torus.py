"""Number-field invariants of 2-simple complex tori.

The endomorphism algebra of a 2-simple torus of dimension g >= 3 is Q or
a number field E of degree g or 2g. This module analyzes candidate fields,
classifies the resulting torus, enumerates Hodge multiplicity vectors,
decomposes H^2 along Galois orbits on pairs of embeddings, and builds
fields with prescribed signature together with their certificates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BadDimension,
    BadParameter,
    DegreeBoundExceeded,
    EmptySignature,
    InconsistentSignature,
    NonMonic,
    NotSquarefree,
    NotTransitive,
    RankOutOfRange,
    ReduciblePolynomial,
    SynthesisExhausted,
    WrongPointCount,
    ZeroPolynomial,
)
from .exact import (
    ModPolynomial,
    Polynomial,
    crt_lift,
    factor_mod_p,
    is_eisenstein,
    is_irreducible_mod_p,
    is_squarefree,
    sturm_real_root_count,
)
from .galois import (
    DEFAULT_MAX_DEGREE,
    IrreducibilityCertificate,
    Reducible,
    TransitivityReport,
    certify_irreducible,
    poly_to_json,
    transitivity_report,
)
from .permgrp import PermGroup

SYNTHESIS_RETRIES = 20
SYNTHESIS_P = 2
SYNTHESIS_ELL = 3


# ---------------------------------------------------------------------
# field analysis


@dataclass
class FieldAnalysis:
    poly: Polynomial
    n: int
    r: int
    s: int
    irreducibility: IrreducibilityCertificate
    transitivity: TransitivityReport | None
    source: Polynomial | None = None

    def to_json(self) -> dict:
        out = {
            "poly": poly_to_json(self.poly),
            "degree": self.n,
            "r": self.r,
            "s": self.s,
            "unit_rank": unit_rank(self.r, self.s),
            "irreducibility": self.irreducibility.to_json(),
            "transitivity": self.transitivity.to_json() if self.transitivity else None,
        }
        if self.source is not None:
            out["source_poly"] = poly_to_json(self.source)
        return out


def integral_model(f: Polynomial) -> Polynomial:
    """d^n f(x/d) for the lcm d of denominators: monic, integral, same field."""
    d = math.lcm(*(c.denominator for c in f.coeffs))
    if d == 1:
        return f
    return f.scale_var(Fraction(1, d)) * Fraction(d) ** f.degree


def analyze_field(f: Polynomial, max_degree: int = DEFAULT_MAX_DEGREE) -> FieldAnalysis:
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial defines no field")
    if not f.is_monic():
        raise NonMonic(f"{f} is not monic")
    if f.degree < 1:
        raise BadParameter("a defining polynomial has degree >= 1")
    if f.degree > max_degree:
        raise DegreeBoundExceeded(f"degree {f.degree} exceeds the bound {max_degree}")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} is not squarefree")
    g = integral_model(f)
    cert = certify_irreducible(g, max_degree=max(max_degree, 12))
    if isinstance(cert, Reducible):
        raise ReduciblePolynomial(f"{f} is reducible", cert.factors)
    n = g.degree
    r = sturm_real_root_count(g)
    report = transitivity_report(g, max_degree=max_degree) if n >= 3 else None
    return FieldAnalysis(
        poly=g, n=n, r=r, s=(n - r) // 2, irreducibility=cert,
        transitivity=report, source=f if g != f else None,
    )


def unit_rank(r: int, s: int) -> int:
    """Dirichlet rank r + s - 1."""
    if r < 0 or s < 0 or r + s < 1:
        raise EmptySignature(f"signature ({r}, {s}) has no embeddings")
    return r + s - 1


# ---------------------------------------------------------------------
# classification


@dataclass
class TorusClassification:
    g: int
    endo_degree: int | str
    aut_rank: int | None
    hodge_group: dict
    two_simple: bool | None
    constraints: dict = field(default_factory=dict)
    violated: str | None = None
    notes: list[str] = field(default_factory=list)
    aut_torsion: str = "{+1,-1}"

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "endo_degree": self.endo_degree,
            "aut_rank": self.aut_rank,
            "aut_torsion": self.aut_torsion,
            "hodge_group": self.hodge_group,
            "two_simple": self.two_simple,
            "constraints": self.constraints,
            "violated": self.violated,
            "notes": self.notes,
        }


def classify_torus(g: int, field: FieldAnalysis | None) -> TorusClassification:
    """Place a torus with endomorphism algebra ``field`` (None meaning Q) in the degree trichotomy."""
    if g < 3:
        raise BadDimension(f"g = {g}: the classification assumes g >= 3")
    if field is None or field.n == 1:
        return TorusClassification(
            g=g, endo_degree=1, aut_rank=0,
            hodge_group={"label": "Q-simple semisimple", "dimension": None, "simple": True},
            two_simple=None,
            constraints={"endomorphisms": "End = Z"},
            notes=["Aut(T) = {+1,-1}"],
        )
    n, r, s = field.n, field.r, field.s
    rep = field.transitivity
    if n == g:
        d = unit_rank(r, s)
        lo = math.ceil(Fraction(g, 2) - 1)
        assert lo <= d <= g - 1
        return TorusClassification(
            g=g, endo_degree=g, aut_rank=d,
            hodge_group={"label": "Res_{E/Q} SL_2", "dimension": 3 * g, "simple": None},
            two_simple=rep.almost_doubly.holds,
            constraints={
                "primitivity": rep.primitivity,
                "rank_bounds": [lo, g - 1],
                "two_simple_criterion": "almost doubly transitive",
            },
            notes=[] if rep.primitivity != "undetermined"
            else ["primitivity of E is required but could not be certified"],
        )
    if n == 2 * g:
        subfield_note = "if E is not primitive it has exactly one proper subfield other than Q, of degree g"
        if r != 0:
            return TorusClassification(
                g=g, endo_degree="incompatible", aut_rank=None,
                hodge_group={}, two_simple=False,
                constraints={"purely_imaginary": False},
                violated=f"a degree-2g endomorphism field must be purely imaginary, but r = {r}",
            )
        doubly = rep.doubly.holds
        return TorusClassification(
            g=g, endo_degree=2 * g, aut_rank=g - 1,
            hodge_group={"label": "norm-one torus S_E^1", "dimension": 2 * g - 1, "simple": True if doubly else None},
            two_simple=True if doubly else None,
            constraints={"purely_imaginary": True, "primitivity": rep.primitivity, "subfield_remark": subfield_note},
            notes=[] if doubly else ["E is not doubly transitive: simplicity of H^2 not asserted"],
        )
    return TorusClassification(
        g=g, endo_degree="incompatible", aut_rank=None, hodge_group={}, two_simple=False,
        violated=f"field degree {n} is not one of 1, g = {g}, 2g = {2 * g}",
    )


# ---------------------------------------------------------------------
# Hodge multiplicities


@dataclass(frozen=True)
class MultiplicityVector:
    g: int
    d_E: int
    real_entries: tuple[int, ...]
    pair_entries: tuple[tuple[int, int], ...]
    h20_dim: int
    two_simple_compatible: bool
    excluded: str | None = None

    def entries(self) -> list[int]:
        return list(self.real_entries) + [v for pair in self.pair_entries for v in pair]

    def to_json(self) -> dict:
        return {
            "real_entries": list(self.real_entries),
            "pair_entries": [list(p) for p in self.pair_entries],
            "h20_dim": self.h20_dim,
            "two_simple_compatible": self.two_simple_compatible,
            "excluded": self.excluded,
        }


def enumerate_multiplicity_vectors(g: int, field_degree: int, r: int, s: int) -> list[MultiplicityVector]:
    """All (n_sigma) with n_sigma + n_conj = d_E and sum n_sigma = g."""
    if g < 1 or r < 0 or s < 0 or r + 2 * s != field_degree or field_degree < 1 or (2 * g) % field_degree:
        raise InconsistentSignature(f"signature ({r}, {s}) of degree {field_degree} does not fit 2g = {2 * g}")
    d_E = 2 * g // field_degree
    if r and d_E % 2:
        return []
    full = g * (g - 1) // 2
    real = (d_E // 2,) * r
    out = []
    for firsts in itertools.product(range(d_E + 1), repeat=s):
        pairs = tuple((a, d_E - a) for a in firsts)
        entries = list(real) + [v for p in pairs for v in p]
        assert sum(entries) == g
        h20 = sum(v * (v - 1) // 2 for v in entries)
        compatible = h20 in (0, full)
        excluded = None
        if compatible and h20 == full and field_degree == 2 and r == 0 and g >= 3:
            # imaginary quadratic E with n = (g, 0): End^0 would be a g x g matrix algebra over E
            compatible = False
            excluded = "imaginary quadratic split (g, 0): endomorphism algebra not a division algebra"
        out.append(MultiplicityVector(g, d_E, real, pairs, h20, compatible, excluded))
    return out


def no_vector_reason(g: int, field_degree: int, r: int, s: int) -> str | None:
    d_E = 2 * g // field_degree
    if r and d_E % 2:
        return f"NoVector: d_E = {d_E} is odd, so real embeddings cannot carry d_E/2"
    return None


# ---------------------------------------------------------------------
# H^2 decomposition


@dataclass
class H2Decomposition:
    g: int
    case: str
    invariant_dim: int
    moving_summands: list[int]
    two_simple_verdict: bool

    @property
    def total(self) -> int:
        return self.invariant_dim + sum(self.moving_summands)

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "case": self.case,
            "invariant_dim": self.invariant_dim,
            "moving_summands": self.moving_summands,
            "total": self.total,
            "expected_total": math.comb(2 * self.g, 2),
            "two_simple": self.two_simple_verdict,
        }


def h2_decomposition(g: int, case: str, action: PermGroup) -> H2Decomposition:
    """Split H^2(T, Q) along the orbits of ``action`` on 2-element sets of embeddings.

    degree_g: the Hodge-invariant part has dimension g and each orbit O of
    pairs contributes 4|O|. degree_2g: no invariant part, each orbit
    contributes |O| (distinct characters on 1-dimensional spaces).
    """
    if case not in ("degree_g", "degree_2g"):
        raise BadParameter(f"unknown case {case!r}")
    points = g if case == "degree_g" else 2 * g
    if action.n != points:
        raise WrongPointCount(f"{case} needs an action on {points} points, got {action.n}")
    if not action.is_transitive():
        raise NotTransitive("the Galois action on embeddings is transitive")
    sizes = sorted(len(o) for o in action.two_subset_orbits())
    if case == "degree_g":
        return H2Decomposition(g, case, g, [4 * k for k in sizes], len(sizes) == 1)
    return H2Decomposition(g, case, 0, sizes, len(sizes) == 1)


# ---------------------------------------------------------------------
# synthesis


def aut_rank_to_signature(g: int, d: int) -> tuple[int, int]:
    """(r, s) with r + 2s = g and r + s - 1 = d."""
    if g < 3:
        raise BadDimension(f"g = {g} < 3")
    if not (math.ceil(Fraction(g, 2) - 1) <= d <= g - 1):
        raise RankOutOfRange(f"rank {d} outside [{math.ceil(Fraction(g, 2) - 1)}, {g - 1}] for g = {g}")
    return 2 * (d + 1) - g, g - d - 1


def first_irreducible_mod(ell: int, degree: int) -> list[int]:
    """Lexicographically first monic irreducible of the given degree over F_ell."""
    for tail in itertools.product(range(ell), repeat=degree):
        cs = list(reversed(tail)) + [1]
        if cs[0] == 0 and degree > 1:
            continue
        if is_irreducible_mod_p(ModPolynomial(cs, ell)):
            return cs
    raise AssertionError("an irreducible polynomial exists in every degree")


def archimedean_model(r: int, s: int, K: int) -> Polynomial:
    """prod (x - K i) * prod (x^2 + (K j)^2): r real roots and s complex pairs."""
    out = Polynomial([1])
    for i in range(1, r + 1):
        out = out * Polynomial([-K * i, 1])
    for j in range(1, s + 1):
        out = out * Polynomial([(K * j) ** 2, 0, 1])
    return out


def approximate(n: int, r: int, s: int, K: int, u: list[int]) -> Polynomial:
    """Coefficientwise CRT: x^n - p mod p^2, x*u(x) mod ell, nearest the model scaled by K."""
    p, ell = SYNTHESIS_P, SYNTHESIS_ELL
    target = archimedean_model(r, s, K)
    h_p = [-p] + [0] * (n - 1)
    h_ell = [0] + u[:-1]
    cs = [crt_lift([(h_p[i] % p**2, p**2), (h_ell[i] % ell, ell)], target[i]) for i in range(n)]
    return Polynomial(cs + [1])


def synthesize_field(n: int, r: int, s: int, max_retries: int = SYNTHESIS_RETRIES, max_degree: int = DEFAULT_MAX_DEGREE):
    """Certified monic f of degree n with signature (r, s) and doubly transitive Galois action.

    Returns (f, FieldAnalysis). Every output passes Sturm, Eisenstein at 2
    and the (n-1)-cycle pattern at 3; on failure the archimedean scale
    doubles, and after ``max_retries`` failures SynthesisExhausted is raised.
    """
    if r < 0 or s < 0 or r + 2 * s != n:
        raise InconsistentSignature(f"r + 2s = {r} + 2*{s} != {n}")
    if n < 3:
        raise BadParameter("synthesis needs n >= 3")
    u = first_irreducible_mod(SYNTHESIS_ELL, n - 1)
    K = 1
    for _ in range(max_retries):
        f = approximate(n, r, s, K, u)
        ok = (
            is_squarefree(f)
            and sturm_real_root_count(f) == r
            and is_eisenstein(f, SYNTHESIS_P)
            and factor_mod_p(f, SYNTHESIS_ELL).pattern == [1, n - 1]
        )
        if ok:
            analysis = analyze_field(f, max_degree=max(max_degree, n))
            if (analysis.n, analysis.r, analysis.s) == (n, r, s) and analysis.transitivity.doubly.holds:
                return f, analysis
        K *= 2
    raise SynthesisExhausted(f"no certified polynomial for (n, r, s) = ({n}, {r}, {s}) after {max_retries} scales")


def synthesize_torus_profile(g: int, d: int, max_degree: int = DEFAULT_MAX_DEGREE):
    """Field of degree g whose 2-simple tori have Aut = Z^d x {+1,-1}; returns (f, classification)."""
    r, s = aut_rank_to_signature(g, d)
    f, analysis = synthesize_field(g, r, s, max_degree=max_degree)
    cls = classify_torus(g, analysis)
    if cls.endo_degree != g or cls.aut_rank != d:
        raise SynthesisExhausted(f"classification of {f} does not realize rank {d}")
    return f, cls, analysis
