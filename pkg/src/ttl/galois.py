"""Certified transitivity verdicts for the Galois action on roots.

A monic squarefree f of degree n defines the action of its Galois group
on the n roots. The action is

* transitive iff f is irreducible,
* almost doubly transitive iff additionally the pair-sum resolvent
  (roots a_i + a_j, i < j) is irreducible,
* doubly transitive iff the ordered-pair resolvent (roots a_i + t*a_j,
  i != j) is irreducible,

provided the resolvent is squarefree. Every verdict carries a JSON-ready
certificate that :func:`verify_certificate` re-checks from scratch.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from functools import reduce

from .errors import (
    BadParameter,
    CollisionDetected,
    DegenerateTransform,
    DegreeBoundExceeded,
    NonIntegerCoefficients,
    NonMonic,
    NotSquarefree,
    ResolventCollisionUnresolved,
)
from .exact import (
    Polynomial,
    composed_sum,
    factor_mod_p,
    factor_over_Z,
    is_eisenstein,
    is_prime,
    is_squarefree,
    is_squarefree_mod_p,
    poly_exact_sqrt,
    root_transform,
    small_primes,
    sturm_real_root_count,
)

log = logging.getLogger(__name__)

IRREDUCIBILITY_PRIMES = 25
DEFAULT_PRIME_BUDGET = 25
DEFAULT_MAX_DEGREE = 8
TSCHIRNHAUS_SCHEDULE = (1, 2, 3, -1, -2)
T_SCHEDULE = (2, 3, 4, 5)
EISENSTEIN_TRIAL_LIMIT = 10**5


def prime_budget() -> int:
    return int(os.environ.get("TTL_PRIME_BUDGET", DEFAULT_PRIME_BUDGET))


def poly_to_json(f: Polynomial) -> list[str]:
    return [str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in f.coeffs]


def poly_from_json(cs) -> Polynomial:
    return Polynomial(Fraction(c) for c in cs)


# ---------------------------------------------------------------------
# irreducibility


@dataclass(frozen=True)
class IrreducibilityCertificate:
    kind: str  # Eisenstein | IrreducibleModP | DegreePatternSieve | ZassenhausExhaustive
    poly: Polynomial
    prime: int | None = None
    patterns: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def to_json(self) -> dict:
        out = {"kind": self.kind, "poly": poly_to_json(self.poly)}
        if self.prime is not None:
            out["p"] = self.prime
        if self.kind == "DegreePatternSieve":
            out["patterns"] = [[p, list(pat)] for p, pat in self.patterns]
        return out


@dataclass(frozen=True)
class Reducible:
    poly: Polynomial
    factors: tuple[Polynomial, ...]

    def to_json(self) -> dict:
        return {
            "kind": "Reducible",
            "poly": poly_to_json(self.poly),
            "factors": [poly_to_json(g) for g in self.factors],
        }


def _subset_sums(degrees) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _eisenstein_candidates(cs: list[int]) -> list[int]:
    g = reduce(gcd, cs[:-1], 0)
    out, d = [], 2
    while g > 1 and d <= EISENSTEIN_TRIAL_LIMIT:
        if g % d == 0:
            out.append(d)
            while g % d == 0:
                g //= d
        d += 1 if d == 2 else 2
    if 1 < g < EISENSTEIN_TRIAL_LIMIT**2 and is_prime(g):
        out.append(g)
    return out


def _require_monic_integral(f: Polynomial) -> list[int]:
    if not f.is_monic():
        raise NonMonic(f"{f} is not monic")
    return f.int_coeffs()


def certify_irreducible(f: Polynomial, max_degree: int = 12) -> IrreducibilityCertificate | Reducible:
    """Irreducibility certificate for f over Q, or its nontrivial factorization.

    Tried in order: Eisenstein, irreducibility mod a single prime, the
    degree-pattern sieve over several primes, complete Zassenhaus factoring.
    """
    cs = _require_monic_integral(f)
    n = f.degree
    if n < 1:
        raise BadParameter("irreducibility needs degree >= 1")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} is not squarefree")
    for p in _eisenstein_candidates(cs):
        if is_eisenstein(f, p):
            return IrreducibilityCertificate("Eisenstein", f, prime=p)

    allowed = set(range(n + 1))
    used = []
    for p in small_primes(IRREDUCIBILITY_PRIMES):
        if not is_squarefree_mod_p(f, p):
            continue
        pattern = tuple(factor_mod_p(f, p).pattern)
        if pattern == (n,):
            return IrreducibilityCertificate("IrreducibleModP", f, prime=p)
        before = set(allowed)
        allowed &= _subset_sums(pattern)
        if allowed != before:
            used.append((p, pattern))
        if allowed == {0, n}:
            return IrreducibilityCertificate("DegreePatternSieve", f, patterns=tuple(used))

    factors = factor_over_Z(f, max_degree=max_degree)
    if len(factors) == 1:
        return IrreducibilityCertificate("ZassenhausExhaustive", f)
    return Reducible(f, tuple(g.monic() for g in factors))


# ---------------------------------------------------------------------
# resolvents


def _check_resolvent_input(f: Polynomial) -> None:
    if not f.is_monic():
        raise NonMonic(f"{f} is not monic")
    if f.degree < 2:
        raise BadParameter("resolvents need degree >= 2")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} is not squarefree")


def pair_sum_resolvent(f: Polynomial) -> Polynomial:
    """Monic polynomial with roots a_i + a_j over unordered pairs i < j."""
    _check_resolvent_input(f)
    n = f.degree
    full = composed_sum(f, f)
    diagonal = f.scale_var(Fraction(1, 2)) * 2**n
    doubled = full.exact_div(diagonal)
    R = poly_exact_sqrt(doubled)
    if R is None:
        raise ArithmeticError("off-diagonal composed sum is not a square")
    if not is_squarefree(R):
        raise CollisionDetected(f"pair sums of {f} collide")
    return R


def ordered_pair_resolvent(f: Polynomial, t: int) -> Polynomial:
    """Monic polynomial with roots a_i + t*a_j over ordered pairs i != j."""
    if t in (-1, 0, 1):
        raise BadParameter(f"t = {t} is excluded")
    _check_resolvent_input(f)
    n = f.degree
    scaled = f.scale_var(Fraction(1, t)) * Fraction(t) ** n
    full = composed_sum(f, scaled)
    diagonal = f.scale_var(Fraction(1, 1 + t)) * Fraction(1 + t) ** n
    R = full.exact_div(diagonal)
    if not is_squarefree(R):
        raise CollisionDetected(f"ordered pair values of {f} collide at t = {t}")
    return R


def tschirnhaus(f: Polynomial, c: int) -> Polynomial:
    """Monic polynomial with roots a^2 + c*a."""
    if not f.is_monic():
        raise NonMonic(f"{f} is not monic")
    return root_transform(f, Polynomial([0, c, 1]))


def _transforms(f: Polynomial):
    """Yield (c, g): f itself first, then squarefree Tschirnhaus transforms."""
    yield None, f
    degenerate = 0
    for c in TSCHIRNHAUS_SCHEDULE:
        g = tschirnhaus(f, c)
        if is_squarefree(g):
            yield c, g
        else:
            degenerate += 1
    if degenerate == len(TSCHIRNHAUS_SCHEDULE):
        raise DegenerateTransform(f"every transform of {f} in the schedule is degenerate")


def dedekind_patterns(f: Polynomial, prime_budget: int) -> list[tuple[int, list[int]]]:
    """Factor-degree patterns mod p over the first ``prime_budget`` primes.

    Primes where f is not squarefree are skipped; every recorded pattern is
    the cycle type of some element of the Galois group.
    """
    _require_monic_integral(f)
    out = []
    for p in small_primes(prime_budget):
        if is_squarefree_mod_p(f, p):
            out.append((p, factor_mod_p(f, p).pattern))
        else:
            log.debug("skipping p = %d: %s is not squarefree mod p", p, f)
    return out


# ---------------------------------------------------------------------
# the report


@dataclass
class Verdict:
    holds: bool
    certificate: dict

    def to_json(self) -> dict:
        return {"holds": self.holds, "certificate": self.certificate}


@dataclass
class TransitivityReport:
    poly: Polynomial
    real_roots: int
    transitive: Verdict
    almost_doubly: Verdict
    doubly: Verdict
    primitivity: str
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "poly": poly_to_json(self.poly),
            "real_roots": self.real_roots,
            "transitive": self.transitive.to_json(),
            "almost_doubly": self.almost_doubly.to_json(),
            "doubly": self.doubly.to_json(),
            "primitivity": self.primitivity,
            "notes": list(self.notes),
        }


def _resolvent_certificate(kind, f, c, g, R, cert, **extra) -> dict:
    out = {
        "kind": kind,
        "poly": poly_to_json(f),
        "tschirnhaus_c": c,
        "transformed": poly_to_json(g),
        "resolvent": poly_to_json(R),
        "resolvent_certificate": cert.to_json(),
    }
    out.update(extra)
    return out


def _pair_sum_verdict(f: Polynomial, notes: list[str]) -> Verdict:
    n = f.degree
    try:
        for c, g in _transforms(f):
            try:
                R = pair_sum_resolvent(g)
            except CollisionDetected:
                notes.append(f"pair sums collide for tschirnhaus c = {c}")
                continue
            cert = certify_irreducible(R, max_degree=n * (n - 1) // 2)
            holds = isinstance(cert, IrreducibilityCertificate)
            return Verdict(holds, _resolvent_certificate("PairSumResolvent", f, c, g, R, cert))
    except DegenerateTransform:
        pass
    raise ResolventCollisionUnresolved(f"no collision-free pair-sum resolvent for {f}")


def _ordered_pair_verdict(f: Polynomial, notes: list[str]) -> Verdict:
    n = f.degree
    try:
        for c, g in _transforms(f):
            for t in T_SCHEDULE:
                try:
                    R = ordered_pair_resolvent(g, t)
                except CollisionDetected:
                    notes.append(f"ordered pair values collide for tschirnhaus c = {c}, t = {t}")
                    continue
                cert = certify_irreducible(R, max_degree=n * (n - 1))
                holds = isinstance(cert, IrreducibilityCertificate)
                return Verdict(holds, _resolvent_certificate("OrderedPairResolvent", f, c, g, R, cert, t=t))
    except DegenerateTransform:
        pass
    raise ResolventCollisionUnresolved(f"no collision-free ordered-pair resolvent for {f}")


def transitivity_report(f: Polynomial, max_degree: int = DEFAULT_MAX_DEGREE, budget: int | None = None) -> TransitivityReport:
    """Transitive / almost doubly / doubly transitive verdicts with certificates."""
    _require_monic_integral(f)
    n = f.degree
    if n > max_degree:
        raise DegreeBoundExceeded(f"degree {n} exceeds the bound {max_degree}")
    if n < 3:
        raise BadParameter("transitivity report needs degree >= 3")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} is not squarefree")
    budget = prime_budget() if budget is None else budget
    notes: list[str] = []
    r = sturm_real_root_count(f)

    irr = certify_irreducible(f, max_degree=max(max_degree, 12))
    if isinstance(irr, Reducible):
        cert = irr.to_json()
        not_transitive = {"kind": "NotTransitive", "poly": poly_to_json(f), "factorization": cert}
        return TransitivityReport(
            poly=f,
            real_roots=r,
            transitive=Verdict(False, cert),
            almost_doubly=Verdict(False, not_transitive),
            doubly=Verdict(False, not_transitive),
            primitivity="no",
            notes=["reducible: the action on roots is intransitive"],
        )
    transitive = Verdict(True, irr.to_json())

    almost = _pair_sum_verdict(f, notes)
    if n == 3:
        notes.append("three points: every transitive action is almost doubly transitive")

    if not almost.holds:
        doubly = Verdict(False, {"kind": "NotAlmostDoubly", "poly": poly_to_json(f), "almost_doubly": almost.certificate})
    else:
        patterns = dedekind_patterns(f, budget)
        scanned = small_primes(budget)
        skipped = [p for p in scanned if p not in {q for q, _ in patterns}]
        if skipped:
            notes.append(f"primes skipped in the cycle-type scan (f not squarefree mod p): {skipped}")
        witness = next(((p, pat) for p, pat in patterns if pat == [1, n - 1]), None)
        if witness is not None:
            p, pat = witness
            doubly = Verdict(True, {
                "kind": "CycleWitness",
                "poly": poly_to_json(f),
                "p": p,
                "pattern": pat,
                "irreducibility": transitive.certificate,
            })
        elif r < n:
            doubly = Verdict(True, {
                "kind": "ParityShortcut",
                "poly": poly_to_json(f),
                "real_roots": r,
                "almost_doubly": almost.certificate,
            })
        else:
            doubly = _ordered_pair_verdict(f, notes)

    if is_prime(n):
        primitivity = "yes-by-prime-degree"
    elif almost.holds:
        primitivity = "yes-by-almost-2-transitivity"
    else:
        primitivity = "undetermined"

    return TransitivityReport(
        poly=f,
        real_roots=r,
        transitive=transitive,
        almost_doubly=almost,
        doubly=doubly,
        primitivity=primitivity,
        notes=notes,
    )


# ---------------------------------------------------------------------
# verification


def _verify_irreducibility(cert: dict) -> bool:
    f = poly_from_json(cert["poly"])
    kind = cert["kind"]
    n = f.degree
    if kind == "Eisenstein":
        return is_eisenstein(f, cert["p"])
    if kind == "IrreducibleModP":
        p = cert["p"]
        return is_squarefree_mod_p(f, p) and factor_mod_p(f, p).pattern == [n]
    if kind == "DegreePatternSieve":
        allowed = set(range(n + 1))
        for p, pat in cert["patterns"]:
            if not is_squarefree_mod_p(f, p) or factor_mod_p(f, p).pattern != list(pat):
                return False
            allowed &= _subset_sums(pat)
        return allowed == {0, n}
    if kind == "ZassenhausExhaustive":
        return len(factor_over_Z(f, max_degree=n)) == 1
    if kind == "Reducible":
        factors = [poly_from_json(g) for g in cert["factors"]]
        if len(factors) < 2 or any(g.degree < 1 for g in factors):
            return False
        prod = reduce(lambda a, b: a * b, factors)
        return prod.monic() == f.monic()
    return False


def _verify_resolvent(cert: dict, build) -> bool:
    f = poly_from_json(cert["poly"])
    c = cert["tschirnhaus_c"]
    g = f if c is None else tschirnhaus(f, c)
    if g != poly_from_json(cert["transformed"]) or not is_squarefree(g):
        return False
    try:
        R = build(g)
    except CollisionDetected:
        return False
    if R != poly_from_json(cert["resolvent"]):
        return False
    sub = cert["resolvent_certificate"]
    return poly_from_json(sub["poly"]) == R and _verify_irreducibility(sub)


def verify_certificate(cert: dict) -> bool:
    """Re-check any certificate produced by this module using exact primitives only."""
    kind = cert.get("kind")
    if kind in ("Eisenstein", "IrreducibleModP", "DegreePatternSieve", "ZassenhausExhaustive", "Reducible"):
        return _verify_irreducibility(cert)
    if kind == "PairSumResolvent":
        return _verify_resolvent(cert, pair_sum_resolvent)
    if kind == "OrderedPairResolvent":
        return _verify_resolvent(cert, lambda g: ordered_pair_resolvent(g, cert["t"]))
    f = poly_from_json(cert["poly"])
    if kind == "NotTransitive":
        return cert["factorization"]["kind"] == "Reducible" and poly_from_json(cert["factorization"]["poly"]) == f \
            and _verify_irreducibility(cert["factorization"])
    if kind == "NotAlmostDoubly":
        sub = cert["almost_doubly"]
        return sub["kind"] == "PairSumResolvent" and poly_from_json(sub["poly"]) == f \
            and sub["resolvent_certificate"]["kind"] == "Reducible" and verify_certificate(sub)
    if kind == "CycleWitness":
        p, n = cert["p"], f.degree
        irr = cert["irreducibility"]
        return (
            list(cert["pattern"]) == [1, n - 1]
            and is_squarefree_mod_p(f, p)
            and factor_mod_p(f, p).pattern == [1, n - 1]
            and poly_from_json(irr["poly"]) == f
            and irr["kind"] != "Reducible"
            and _verify_irreducibility(irr)
        )
    if kind == "ParityShortcut":
        sub = cert["almost_doubly"]
        return (
            sturm_real_root_count(f) == cert["real_roots"] < f.degree
            and poly_from_json(sub["poly"]) == f
            and sub["resolvent_certificate"]["kind"] != "Reducible"
            and verify_certificate(sub)
        )
    return False


def verify_report(report: TransitivityReport | dict) -> bool:
    data = report.to_json() if isinstance(report, TransitivityReport) else report
    verdicts = [data["transitive"], data["almost_doubly"], data["doubly"]]
    holds = [v["holds"] for v in verdicts]
    # doubly => almost doubly => transitive
    if holds[2] and not holds[1] or holds[1] and not holds[0]:
        return False
    for v in verdicts:
        cert = v["certificate"]
        if not verify_certificate(cert):
            return False
        sub = cert.get("resolvent_certificate")
        if sub is not None:
            negative = sub["kind"] == "Reducible"
        else:
            negative = cert["kind"] in ("Reducible", "NotTransitive", "NotAlmostDoubly")
        if v["holds"] == negative:
            return False
    return True
