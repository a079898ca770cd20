# app/induction/sp4.py
"""Reducerbarhet för parabolisk induktion till Sp4(F).

Samma dispatch som för GSp4 men utan likhetskaraktär; ν^{3/2}-twistarna av
St och 1 tappas eftersom de är triviala på Sp4.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable

from ..characters import SmoothChar, e_of, order_of
from ..errors import Unsupported
from .gsp4 import (
    Triple,
    guard_1ai,
    guard_1aii,
    guard_1aiii,
    guard_1aiv,
    guard_1bi,
    guard_1bii,
    guard_1biii,
    match_torus_case,
    torus_reducible,
)
from .types import (
    Constituent,
    InducedRep,
    J,
    ReducibilityReport,
    build_report,
    fmt,
    irreducible_report,
    rtimes,
    tw,
    twist_nu,
)

logger = logging.getLogger("llc.induction")

HALF = Fraction(1, 2)

AMBIGUOUS_1A = "sp4-1a-both-order-two"
EQUAL_1A = "sp4-1a-equal-characters"


def sp4_orbit(chi1: SmoothChar, chi2: SmoothChar) -> list[Triple]:
    """Weylbanan (teckenbyten och byte) av (χ1, χ2), indata först."""
    one = chi1.group.one()
    start = (chi1, chi2, one)
    seen = {start}
    for a, b in ((chi1, chi2), (chi2, chi1)):
        for x in (a, a.inverse()):
            for y in (b, b.inverse()):
                seen.add((x, y, one))
    rest = sorted((t for t in seen if t != start), key=lambda t: [(c.nu_exp, c.tame) for c in t])
    return [start] + rest


def restriction_split(label: str, tag: str, case: str, marks=("+", "-"), length: int = 1,
                      tempered: bool = True) -> list[Constituent]:
    """Två konstituenter med opaka ±-etiketter; den första markeras generisk.

    Används när en irreducibel representation av GSp4 (eller GSp2) delar sig
    i två vid restriktion till Sp4 (Sp2) och satsen inte pekar ut någon av dem.
    """
    return [
        Constituent(tag=f"{tag}{mark}", label=f"{label}^{{{mark}}}", case=case, length=length,
                    tempered=tempered, generic=(i == 0))
        for i, mark in enumerate(marks)
    ]


# Sp4-fallen heter 1b*/1c* men vakterna är desamma som GSp4:s 1a*/1b*
SP4_TORUS_CASES: tuple[tuple[str, Callable], ...] = (
    ("1biii", guard_1aiii),
    ("1biv", guard_1aiv),
    ("1bi", guard_1ai),
    ("1bii", guard_1aii),
    ("1ci", guard_1bi),
    ("1cii", guard_1bii),
    ("1ciii", guard_1biii),
)


def _torus_constituents(case: str, a: SmoothChar, b: SmoothChar) -> list[Constituent]:
    nu = a.group.nu
    if case == "1biii":
        return [
            Constituent(tag="St_Sp4", label="St_Sp4", case=case, tempered=True, square_integrable=True,
                        generic=True),
            Constituent(tag="one_Sp4", label="1_Sp4", case=case, langlands=J(fmt(nu(2)), fmt(nu(1)), tail="1")),
            Constituent(tag="J_nu2_St_Sp2", label=J(fmt(nu(2)), tail=tw(nu(HALF), "St_Sp2")), case=case,
                        langlands=J(fmt(nu(2)), tail=tw(nu(HALF), "St_Sp2"))),
            Constituent(tag="J_St_GL2", label=J(tw(nu(Fraction(3, 2)), "St_GL2"), tail="1"), case=case,
                        langlands=J(tw(nu(Fraction(3, 2)), "St_GL2"), tail="1")),
        ]
    if case == "1biv":
        return [
            Constituent(tag="one_GL2", label=rtimes(tw(b.twist(HALF), "1_GL2"), "1"), case=case, length=3),
            Constituent(tag="St_GL2", label=rtimes(tw(b.twist(HALF), "St_GL2"), "1"), case=case, length=3,
                        generic=True),
        ]
    if case == "1bi":
        return [
            Constituent(tag="one_GL2", label=rtimes(tw(b.twist(HALF), "1_GL2"), "1"), case=case),
            Constituent(tag="St_GL2", label=rtimes(tw(b.twist(HALF), "St_GL2"), "1"), case=case, generic=True,
                        tempered=e_of(b) == -HALF),
        ]
    if case == "1bii":
        return [
            Constituent(tag="St_Sp2", label=rtimes(fmt(a), tw(nu(HALF), "St_Sp2")), case=case, generic=True,
                        tempered=e_of(a) == 0),
            Constituent(tag="one_Sp2", label=rtimes(fmt(a), tw(nu(HALF), "1_Sp2")), case=case),
        ]
    if case == "1ci":
        j1 = J("nu", tail=rtimes("1", "1_Sp2"))
        j2 = J(tw(nu(HALF), "St_GL2"), tail="1")
        return [
            Constituent(tag="tau_prime", label="τ'", case=case, tempered=True, generic=True),
            Constituent(tag="tau", label="τ", case=case, tempered=True),
            Constituent(tag="J_nu_1", label=j1, case=case, langlands=j1),
            Constituent(tag="J_St_GL2", label=j2, case=case, langlands=j2),
        ]
    if case == "1cii":
        return [
            Constituent(tag="one_Sp2", label=rtimes("nu", tw(nu(HALF), "1_Sp2")), case=case),
            Constituent(tag="St_Sp2", label=rtimes("nu", tw(nu(HALF), "St_Sp2")), case=case, generic=True),
        ]
    if case == "1ciii":
        return [
            Constituent(tag="one_GL2", label=rtimes(tw(b.twist(HALF), "1_GL2"), "1"), case=case),
            Constituent(tag="St_GL2", label=rtimes(tw(b.twist(HALF), "St_GL2"), "1"), case=case,
                        tempered=True, generic=True),
        ]
    raise ValueError(case)


def _case_1a(rep: InducedRep) -> ReducibilityReport:
    """Inga ν-relationer: reducibelt precis när någon karaktär har ordning 2."""
    orbit = sp4_orbit(rep.chi1, rep.chi2)
    hit = next(((a, b) for a, b, _ in orbit if order_of(b) == 2), None)
    if hit is None:
        return irreducible_report(rep)
    a, b = hit
    t_label = f"T_{{{b.render()}}}"
    if a == b:
        logger.debug("Sp4 %s: case 1a(ii)", rep.render())
        pieces = restriction_split(rtimes(fmt(a), t_label), "T", "1aii", marks=("1", "2"), length=2,
                                   tempered=e_of(a) == 0)
        # bitarna av längd två bryts inte ned vidare
        return build_report(rep, "1aii", pieces, flags=[EQUAL_1A])
    if order_of(a) != 2:
        pieces = restriction_split(rtimes(fmt(a), t_label), "T", "1ai", marks=("1", "2"),
                                   tempered=e_of(a) == 0)
        return build_report(rep, "1ai", pieces)
    # båda av ordning 2 och olika: satsens (i) och (ii) säger emot varandra
    logger.warning("Sp4 %s: both characters of order two, case 1a is ambiguous", rep.render())
    pieces = restriction_split(rtimes(fmt(a), t_label), "T", "1aii", marks=("1", "2"), length=2)
    return build_report(rep, "1aii", pieces, flags=[AMBIGUOUS_1A])


def _decide_torus(rep: InducedRep) -> ReducibilityReport:
    if not torus_reducible(rep.chi1, rep.chi2):
        return _case_1a(rep)
    found = match_torus_case(sp4_orbit(rep.chi1, rep.chi2), SP4_TORUS_CASES)
    if found is None:
        raise Unsupported(f"no reducibility case matches {rep.render()}")
    case, (a, b, _) = found
    logger.debug("Sp4 %s matched case %s", rep.render(), case)
    return build_report(rep, case, _torus_constituents(case, a, b))


def _decide_siegel(rep: InducedRep) -> ReducibilityReport:
    sigma, beta = rep.sigma, rep.beta
    if not sigma.self_dual:
        return irreducible_report(rep)
    omega_trivial = sigma.central_char.is_trivial
    if abs(beta) == HALF and omega_trivial:
        base = rtimes(twist_nu(HALF, sigma.ref), "1")
        return build_report(rep, "2a", [
            Constituent(tag="delta", label=f"δ({base})", case="2a", tempered=True, square_integrable=True,
                        generic=True),
            Constituent(tag="L", label=f"L({base})", case="2a", langlands=J(twist_nu(HALF, sigma.ref), tail="1")),
        ])
    if beta == 0 and not omega_trivial:
        return build_report(rep, "2b", restriction_split(rtimes(sigma.ref, "1"), "tau", "2b"))
    return irreducible_report(rep)


def _decide_klingen(rep: InducedRep) -> ReducibilityReport:
    chi, rho = rep.chi, rep.rho
    beta, xi = e_of(chi), chi.unitary
    if xi.is_trivial and beta == 0:
        return build_report(rep, "3a", restriction_split(rtimes("1", rho.ref), "tau", "3a"))
    if order_of(xi) != 2:
        return irreducible_report(rep)
    if beta == 0 and not rho.trivial_on_fsigma(xi):
        return build_report(rep, "3b", restriction_split(rtimes(fmt(xi), rho.ref), "tau", "3b"))
    if abs(beta) == 1 and rho.trivial_on_fsigma(xi):
        base = rtimes(fmt(xi.twist(1)), rho.ref)
        return build_report(rep, "3c", [
            Constituent(tag="delta", label=f"δ({base})", case="3c", tempered=True, square_integrable=True,
                        generic=True),
            Constituent(tag="L", label=f"L({base})", case="3c", langlands=J(fmt(xi.twist(1)), tail=rho.ref)),
        ])
    return irreducible_report(rep)


def decide_sp4(rep: InducedRep) -> ReducibilityReport:
    if rep.levi == "T":
        return _decide_torus(rep)
    if rep.levi == "GL2×Sp0":
        return _decide_siegel(rep)
    return _decide_klingen(rep)
