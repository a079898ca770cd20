# app/induction/gsp4.py
"""Reducerbarhet för parabolisk induktion till GSp4(F)."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Optional

from ..characters import SmoothChar, e_of, is_nu_power, order_of
from ..errors import Unsupported
from .langlands import one_gl2_branch, one_gsp2_branch, st_gl2_branch, st_gsp2_branch
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

Triple = tuple[SmoothChar, SmoothChar, SmoothChar]


# ----------------------- Weylbanan -----------------------
def _key(t: tuple) -> tuple:
    return tuple((c.nu_exp, c.tame) for c in t)


def weyl_orbit(chi1: SmoothChar, chi2: SmoothChar, theta: SmoothChar) -> list[Triple]:
    """Weylbanan av (χ1, χ2, θ): indata först, sedan resten i kanonisk ordning."""
    start = (chi1, chi2, theta)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for a, b, t in frontier:
            for img in ((b, a, t), (a, b.inverse(), b * t)):
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    rest = sorted((t for t in seen if t != start), key=_key)
    return [start] + rest


# ----------------------- Villkor -----------------------
def is_regular(chi1: SmoothChar, chi2: SmoothChar) -> bool:
    return not chi1.is_trivial and not chi2.is_trivial and chi1 != chi2 and chi1 != chi2.inverse()


def torus_reducible(chi1: SmoothChar, chi2: SmoothChar) -> bool:
    """χ1 × χ2 ⋊ θ är reducibel precis när χ1 = ν^{±1}, χ2 = ν^{±1} eller χ1 = ν^{±1}χ2^{±1}."""
    if is_nu_power(chi1, 1, -1) or is_nu_power(chi2, 1, -1):
        return True
    for c in (chi2, chi2.inverse()):
        if chi1 == c.twist(1) or chi1 == c.twist(-1):
            return True
    return False


def _is_order_two(chi: SmoothChar) -> bool:
    return order_of(chi) == 2


def guard_1aiii(a, b):
    return is_nu_power(a, 2) and is_nu_power(b, 1)


def guard_1aiv(a, b):
    return is_regular(a, b) and a == b.twist(1) and _is_order_two(b)


def guard_1ai(a, b):
    if not (is_regular(a, b) and a == b.twist(1)):
        return False
    return not is_nu_power(b * b, -2, -1, 0) and not is_nu_power(b, -2, 1)


def guard_1aii(a, b):
    return is_regular(a, b) and is_nu_power(b, 1) and not is_nu_power(a, 0, 1, -1, 2, -2)


def guard_1bi(a, b):
    return is_nu_power(a, 1) and b.is_trivial


def guard_1bii(a, b):
    return is_nu_power(a, 1) and is_nu_power(b, 1)


def guard_1biii(a, b):
    return not is_regular(a, b) and a == b.twist(1) and is_nu_power(a * a, 1)


# exakta likheter före ν-förskjutna villkor; reguljära fall före icke-reguljära
GSP4_TORUS_CASES: tuple[tuple[str, Callable], ...] = (
    ("1aiii", guard_1aiii),
    ("1aiv", guard_1aiv),
    ("1ai", guard_1ai),
    ("1aii", guard_1aii),
    ("1bi", guard_1bi),
    ("1bii", guard_1bii),
    ("1biii", guard_1biii),
)


def match_torus_case(orbit: list[Triple], cases) -> Optional[tuple[str, Triple]]:
    """Första fallet (i dispatchordning) som någon punkt i banan uppfyller."""
    for name, guard in cases:
        for a, b, t in orbit:
            if guard(a, b):
                return name, (a, b, t)
    return None


# ----------------------- Konstituenter -----------------------
def _torus_constituents(case: str, a: SmoothChar, b: SmoothChar, t: SmoothChar) -> list[Constituent]:
    g = a.group
    nu = g.nu
    half = Fraction(1, 2)
    if case == "1ai":
        st = tw(b.twist(half), "St_GL2")
        one = tw(b.twist(half), "1_GL2")
        st_label, st_branch, st_tempered = st_gl2_branch(b, t)
        one_label, one_branch = one_gl2_branch(b, t)
        return [
            Constituent(tag="one_GL2", label=rtimes(one, fmt(t)), case=case,
                        langlands=one_label, langlands_branch=one_branch),
            Constituent(tag="St_GL2", label=rtimes(st, fmt(t)), case=case, generic=True,
                        tempered=st_tempered, langlands=st_label, langlands_branch=st_branch),
        ]
    if case == "1aii":
        st_label, st_branch, st_tempered = st_gsp2_branch(a, t)
        one_label, one_branch = one_gsp2_branch(a, t)
        return [
            Constituent(tag="St_GSp2", label=rtimes(fmt(a), tw(t.twist(half), "St_GSp2")), case=case,
                        generic=True, tempered=st_tempered, langlands=st_label, langlands_branch=st_branch),
            Constituent(tag="one_GSp2", label=rtimes(fmt(a), tw(t.twist(half), "1_GSp2")), case=case,
                        langlands=one_label, langlands_branch=one_branch),
        ]
    if case == "1aiii":
        t32 = t.twist(Fraction(3, 2))
        return [
            Constituent(tag="St_GSp4", label=tw(t32, "St_GSp4"), case=case,
                        tempered=True, square_integrable=True, generic=True),
            Constituent(tag="one_GSp4", label=tw(t32, "1_GSp4"), case=case,
                        langlands=J(fmt(nu(2)), fmt(nu(1)), tail=fmt(t))),
            Constituent(tag="J_nu2_St_GSp2", label=J(fmt(nu(2)), tail=tw(t.twist(half), "St_GSp2")), case=case,
                        langlands=J(fmt(nu(2)), tail=tw(t.twist(half), "St_GSp2"))),
            Constituent(tag="J_St_GL2", label=J(tw(nu(Fraction(3, 2)), "St_GL2"), tail=fmt(t)), case=case,
                        langlands=J(tw(nu(Fraction(3, 2)), "St_GL2"), tail=fmt(t))),
        ]
    if case == "1aiv":
        st = tw(b.twist(half), "St_GL2")
        j1 = J(st, tail=fmt(t))
        j2 = J(st, tail=fmt(b * t))
        j3 = J(fmt(b.twist(1)), tail=rtimes(fmt(b), fmt(t)))
        return [
            Constituent(tag="delta", label=f"δ([{b.render()}, {b.twist(1).render()}], {t.render()})", case=case,
                        tempered=True, square_integrable=True, generic=True),
            Constituent(tag="J_St_GL2_theta", label=j1, case=case, langlands=j1),
            Constituent(tag="J_St_GL2_chi2theta", label=j2, case=case, langlands=j2),
            Constituent(tag="J_nuchi2", label=j3, case=case, langlands=j3),
        ]
    if case == "1bi":
        j1 = J("nu", tail=rtimes("1", fmt(t)))
        j2 = J(tw(nu(half), "St_GL2"), tail=fmt(t))
        return [
            Constituent(tag="tau_S", label=f"τ(S, {t.render()})", case=case, tempered=True, generic=True),
            Constituent(tag="tau_T", label=f"τ(T, {t.render()})", case=case, tempered=True),
            Constituent(tag="J_nu_1", label=j1, case=case, langlands=j1),
            Constituent(tag="J_St_GL2", label=j2, case=case, langlands=j2),
        ]
    if case == "1bii":
        st = tw(t.twist(half), "St_GSp2")
        one = tw(t.twist(half), "1_GSp2")
        # etiketterna följer satsen ordagrant
        j_one = J("nu", tail=st)
        j_st = J("nu", "nu", tail=fmt(t))
        return [
            Constituent(tag="one_GSp2", label=rtimes("nu", one), case=case, langlands=j_one),
            Constituent(tag="St_GSp2", label=rtimes("nu", st), case=case, generic=True, langlands=j_st),
        ]
    if case == "1biii":
        j_one = J(fmt(b.twist(1)), fmt(b.twist(1)), tail=fmt(b * t))
        return [
            Constituent(tag="one_GL2", label=rtimes(tw(b.twist(half), "1_GL2"), fmt(t)), case=case,
                        langlands=j_one),
            Constituent(tag="St_GL2", label=rtimes(tw(b.twist(half), "St_GL2"), fmt(t)), case=case,
                        tempered=True, generic=True),
        ]
    raise ValueError(case)


# ----------------------- Beslut -----------------------
def _decide_torus(rep: InducedRep) -> ReducibilityReport:
    if not torus_reducible(rep.chi1, rep.chi2):
        logger.debug("GSp4 %s irreducible: no ν-relation between the characters", rep.render())
        return irreducible_report(rep)
    found = match_torus_case(weyl_orbit(rep.chi1, rep.chi2, rep.theta), GSP4_TORUS_CASES)
    if found is None:
        raise Unsupported(f"no reducibility case matches {rep.render()}")
    case, (a, b, t) = found
    logger.debug("GSp4 %s matched case %s", rep.render(), case)
    return build_report(rep, case, _torus_constituents(case, a, b, t))


def _decide_siegel(rep: InducedRep) -> ReducibilityReport:
    sigma, beta, chi = rep.sigma, rep.beta, rep.chi
    if not (abs(beta) == Fraction(1, 2) and sigma.self_dual and sigma.central_char.is_trivial):
        return irreducible_report(rep)
    # ν^{-1/2}ρ ⋊ χ har samma konstituenter som ν^{1/2}ρ ⋊ ν^{-1}χ
    chi0 = chi if beta > 0 else chi.twist(-1)
    base = rtimes(twist_nu(Fraction(1, 2), sigma.ref), fmt(chi0))
    j = J(twist_nu(Fraction(1, 2), sigma.ref), tail=fmt(chi0))
    return build_report(rep, "2", [
        Constituent(tag="delta", label=f"δ({base})", case="2", tempered=True, square_integrable=True, generic=True),
        Constituent(tag="L", label=f"L({base})", case="2", langlands=j),
    ])


def _decide_klingen(rep: InducedRep) -> ReducibilityReport:
    chi, rho = rep.chi, rep.rho
    if chi.is_trivial:
        return build_report(rep, "3a", [
            Constituent(tag="tau_1", label=f"τ_1(1 ⋊ {rho.ref})", case="3a", tempered=True, generic=True),
            Constituent(tag="tau_2", label=f"τ_2(1 ⋊ {rho.ref})", case="3a", tempered=True),
        ])
    xi = chi.unitary
    if abs(e_of(chi)) == 1 and order_of(xi) == 2 and rho.fixed_by(xi):
        # ν^{-1}ξ ⋊ ρ har samma konstituenter som νξ ⋊ ν^{-1}ξρ ≅ νξ ⋊ ν^{-1}ρ
        rho_label = rho.ref if e_of(chi) > 0 else twist_nu(Fraction(-1), rho.ref)
        base = rtimes(fmt(xi.twist(1)), rho_label)
        return build_report(rep, "3b", [
            Constituent(tag="delta", label=f"δ({base})", case="3b", tempered=True, square_integrable=True,
                        generic=True),
            Constituent(tag="L", label=f"L({base})", case="3b", langlands=J(fmt(xi.twist(1)), tail=rho_label)),
        ])
    return irreducible_report(rep)


def decide_gsp4(rep: InducedRep) -> ReducibilityReport:
    if rep.levi == "T":
        return _decide_torus(rep)
    if rep.levi == "GL2×GSp0":
        return _decide_siegel(rep)
    return _decide_klingen(rep)
