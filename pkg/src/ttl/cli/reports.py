"""Report payloads for every subcommand.

A report is a plain dict with keys schema_version, command, inputs,
results and certificates. Each certificate carries a ``kind`` that the
verifier in :mod:`ttl.cli.verify` knows how to re-check from scratch.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .. import lie, torus
from ..errors import BadDimension, BadParameter
from ..exact import Polynomial, factor_mod_p
from ..galois import DEFAULT_MAX_DEGREE, poly_to_json
from ..permgrp import (
    PermGroup,
    affine_half_group,
    cyclic_group,
    group_closure,
    parse_generators,
    symmetric_group,
    transitivity_profile,
)

SCHEMA_VERSION = "1"


def make_report(command: str, inputs: dict, results: dict, certificates: list[dict]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "certificates": certificates,
    }


# ---------------------------------------------------------------------
# fields and tori


def _field_certificates(fa: torus.FieldAnalysis) -> list[dict]:
    certs = [
        {"kind": "Signature", "poly": poly_to_json(fa.poly), "r": fa.r, "s": fa.s},
        fa.irreducibility.to_json(),
    ]
    if fa.source is not None:
        certs.append({"kind": "IntegralModel", "source": poly_to_json(fa.source), "poly": poly_to_json(fa.poly)})
    if fa.transitivity is not None:
        certs.append({"kind": "TransitivityReport", "report": fa.transitivity.to_json()})
    return certs


def _classification_certificate(cls: torus.TorusClassification, fa: torus.FieldAnalysis | None) -> dict:
    return {
        "kind": "Classification",
        "g": cls.g,
        "degree": 1 if fa is None else fa.n,
        "r": None if fa is None else fa.r,
        "s": None if fa is None else fa.s,
        "endo_degree": cls.endo_degree,
        "aut_rank": cls.aut_rank,
        "two_simple": cls.two_simple,
        "almost_doubly": None if fa is None or fa.transitivity is None else fa.transitivity.almost_doubly.holds,
        "doubly": None if fa is None or fa.transitivity is None else fa.transitivity.doubly.holds,
    }


def cmd_analyze(poly: Polynomial, g: int | None = None, max_degree: int = DEFAULT_MAX_DEGREE) -> dict:
    inputs = {"poly": poly_to_json(poly), "g": g, "max_degree": max_degree}
    if g is not None and g < 2:
        raise BadDimension(f"g = {g}: a torus of interest has dimension >= 2")
    fa = torus.analyze_field(poly, max_degree=max_degree)
    results = {"field": fa.to_json(), "notes": []}
    certs = _field_certificates(fa)
    if g == 2:
        results["notes"].append("every 2-dimensional complex torus is 2-simple")
    elif g is not None:
        if fa.n in (1, g, 2 * g):
            cls = torus.classify_torus(g, fa)
            results["classification"] = cls.to_json()
            certs.append(_classification_certificate(cls, fa))
        else:
            results["notes"].append(f"degree {fa.n} is not 1, g or 2g: no 2-simple torus of dimension {g} has this endomorphism field")
    return make_report("analyze", inputs, results, certs)


def _synthesis_certificates(f: Polynomial, n: int) -> list[dict]:
    fac = factor_mod_p(f, torus.SYNTHESIS_ELL)
    return [
        {"kind": "Eisenstein", "poly": poly_to_json(f), "p": torus.SYNTHESIS_P},
        {"kind": "DedekindPattern", "poly": poly_to_json(f), "p": torus.SYNTHESIS_ELL, "pattern": fac.pattern},
    ]


def cmd_synthesize(n=None, r=None, s=None, g=None, d=None, max_degree: int = DEFAULT_MAX_DEGREE) -> dict:
    if g is not None or d is not None:
        if g is None or d is None or n is not None or r is not None or s is not None:
            raise BadParameter("use either --n/--r/--s or --g/--d")
        f, cls, fa = torus.synthesize_torus_profile(g, d, max_degree=max(max_degree, g))
        certs = _field_certificates(fa) + _synthesis_certificates(f, g)
        certs.append(_classification_certificate(cls, fa))
        results = {"poly": poly_to_json(f), "poly_text": str(f), "field": fa.to_json(), "classification": cls.to_json()}
        return make_report("synthesize", {"g": g, "d": d}, results, certs)
    if n is None or r is None or s is None:
        raise BadParameter("synthesize needs --n, --r and --s (or --g and --d)")
    f, fa = torus.synthesize_field(n, r, s, max_degree=max(max_degree, n))
    certs = _field_certificates(fa) + _synthesis_certificates(f, n)
    results = {"poly": poly_to_json(f), "poly_text": str(f), "field": fa.to_json()}
    return make_report("synthesize", {"n": n, "r": r, "s": s}, results, certs)


def _signatures(degree: int) -> list[tuple[int, int]]:
    return [(degree - 2 * s, s) for s in range(degree // 2, -1, -1)]


def cmd_hodge(g: int, degree: int, r: int | None = None, s: int | None = None) -> dict:
    if g < 2:
        raise BadDimension("g >= 2 required")
    if (r is None) != (s is None):
        raise BadParameter("give both --r and --s or neither")
    sigs = [(r, s)] if r is not None else _signatures(degree)
    tables, certs, notes = [], [], []
    for rr, ss in sigs:
        rows = torus.enumerate_multiplicity_vectors(g, degree, rr, ss)
        reason = torus.no_vector_reason(g, degree, rr, ss)
        tables.append({
            "r": rr, "s": ss,
            "rows": [v.to_json() for v in rows],
            "count": len(rows),
            "compatible": sum(v.two_simple_compatible for v in rows),
            "reason": reason,
        })
        certs.append({
            "kind": "MultiplicityTable", "g": g, "degree": degree, "r": rr, "s": ss,
            "rows": [v.entries() for v in rows], "h20": [v.h20_dim for v in rows],
        })
    if g >= 3 and degree not in (1, g, 2 * g):
        notes.append(f"degree {degree} is incompatible with 2-simplicity: the endomorphism field has degree 1, g or 2g")
    elif not any(t["compatible"] for t in tables):
        notes.append("no multiplicity vector is compatible with 2-simplicity")
    results = {"g": g, "degree": degree, "d_E": 2 * g // degree, "tables": tables, "notes": notes}
    return make_report("hodge", {"g": g, "degree": degree, "r": r, "s": s}, results, certs)


def cmd_h2(g: int, case: str, group_spec: str) -> dict:
    points = g if case == "degree_g" else 2 * g
    gens = parse_generators(group_spec, n=points)
    G = group_closure(gens, n=points)
    dec = torus.h2_decomposition(g, case, G)
    results = dec.to_json()
    results["group_order"] = G.order
    certs = [{
        "kind": "OrbitDecomposition", "g": g, "case": case, "n": points,
        "generators": [str(p) for p in gens],
        "orbit_sizes": sorted(len(o) for o in G.two_subset_orbits()),
        "invariant_dim": dec.invariant_dim, "moving_summands": dec.moving_summands,
        "two_simple": dec.two_simple_verdict,
    }]
    return make_report("h2", {"g": g, "case": case, "group": group_spec}, results, certs)


# ---------------------------------------------------------------------
# permutation groups


def named_group(spec: str) -> PermGroup:
    """'S5', 'C7', 'affine-half 7' or generators in cycle notation such as '(0 1 2); (0 1)@4'."""
    text = spec.strip()
    if text[:1] in "SC" and text[1:].isdigit():
        k = int(text[1:])
        return symmetric_group(k) if text[0] == "S" else cyclic_group(k)
    if text.startswith("affine-half"):
        return affine_half_group(int(text.split()[-1]))
    n = None
    if "@" in text:
        text, tail = text.rsplit("@", 1)
        n = int(tail)
    return group_closure(parse_generators(text, n=n), n=n)


def permgrp_certificate(G: PermGroup, profile: dict) -> dict:
    return {
        "kind": "PermGroupProfile", "n": G.n,
        "generators": [str(p) for p in G.generators],
        "order": profile["order"],
        "transitive": profile["transitive"],
        "two_set_transitive": profile["two_set_transitive"],
        "two_transitive": profile["two_transitive"],
    }


def cmd_permgrp(spec: str) -> dict:
    G = named_group(spec)
    prof = transitivity_profile(G)
    results = dict(prof)
    results["n"] = G.n
    results["generators"] = [str(p) for p in G.generators]
    return make_report("permgrp", {"group": spec}, results, [permgrp_certificate(G, prof)])


# ---------------------------------------------------------------------
# Lie computations


def _weyl_cert(w: lie.WeightA, dim: int) -> dict:
    return {"kind": "WeylDimension", "rank": w.rank, "coeffs": list(w.coeffs), "dim": dim}


def cmd_lie(action: str, **params) -> dict:
    inputs = {"action": action, **{k: v for k, v in params.items() if v is not None}}
    certs: list[dict] = []
    if action == "minuscule":
        table = lie.minuscule_dims(params["type"], params["rank"])
        results = {"type": params["type"], "rank": params["rank"], "table": [[name, d] for name, d in table]}
        certs.append({"kind": "MinusculeTable", "type": params["type"], "rank": params["rank"], "table": results["table"]})
    elif action == "weyl":
        w = lie.WeightA(params["rank"], tuple(params["weight"]))
        dim = lie.weyl_dim_A(params["rank"], w)
        results = {"weight": str(w), "dim": dim}
        certs.append(_weyl_cert(w, dim))
    elif action in ("wedge2", "wedge2-scan"):
        if action == "wedge2":
            decs = [lie.wedge2_omega_m_decomposition(params["m"])]
            results = decs[0].to_json()
        else:
            scan = lie.sl_wedge2_verdict_scan(params["m_max"])
            decs = [lie.wedge2_omega_m_decomposition(row["m"]) for row in scan["rows"]]
            results = scan
        for dec in decs:
            certs.append({
                "kind": "PlethysmIdentity", "m": dec.m,
                "summands": [list(w.coeffs) for w in dec.weights],
                "dims": dec.dims, "expected": dec.expected, "verdict": dec.verdict,
            })
    elif action == "bor-tabs":
        cands = lie.bor_tabs_enumerate(params["g"], allow_power=bool(params.get("allow_power")))
        results = {"g": params["g"], "candidates": [c.to_json() for c in cands], "labels": [str(c) for c in cands]}
        certs.append({"kind": "CandidateScan", "g": params["g"], "candidates": results["candidates"]})
    elif action == "spectrum":
        p, q, j = params["p"], params["q"], params["j"]
        a = Fraction(params["a"]) if params.get("a") is not None else Fraction(q)
        b = Fraction(params["b"]) if params.get("b") is not None else Fraction(-p)
        sa = lie.subset_sum_spectrum(p, q, j, a, b)
        results = sa.to_json()
        certs.append({"kind": "Spectrum", **sa.to_json()})
    elif action == "balanced":
        p, q, j = params["p"], params["q"], params["j"]
        results = lie.two_value_balanced_check(p, q, j)
        sa = lie.subset_sum_spectrum(p, q, j, q, -p)
        certs.append({"kind": "Spectrum", **sa.to_json()})
        certs.append({"kind": "BalancedVerdict", "p": p, "q": q, "j": j, "balanced": results["balanced"]})
    elif action == "sp-wedge2":
        irr, triv = lie.sp_wedge2_dims(params["g"])
        results = {"g": params["g"], "irreducible_dim": irr, "trivial_dim": triv, "total": comb(2 * params["g"], 2)}
        certs.append({"kind": "Binomial", "n": 2 * params["g"], "k": 2, "value": irr + triv})
    else:
        raise BadParameter(f"unknown lie action {action!r}")
    return make_report("lie", inputs, results, certs)

