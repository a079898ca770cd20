# app/induction/langlands.py
"""Langlandsklassifikation för de reguljära längd 2-fallen 1ai och 1aii.

Varje funktion returnerar (etikett, gren) och för Steinberg-delarna även en
flagga för om konstituenten är väsentligen tempererad. Tempererade grenar har
ingen J-etikett.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..characters import SmoothChar, e_of
from ..errors import NotApplicable, Unsupported
from .types import Constituent, J, fmt, rtimes, tw

HALF = Fraction(1, 2)


def st_gl2_branch(chi2: SmoothChar, theta: SmoothChar) -> tuple[Optional[str], str, bool]:
    """ν^{1/2}χ2 St_GL2 ⋊ θ."""
    e = e_of(chi2)
    st = tw(chi2.twist(HALF), "St_GL2")
    if e > -HALF:
        return J(st, tail=fmt(theta)), "e(chi2) > -1/2", False
    if e == -HALF:
        return None, "e(chi2) = -1/2", True
    st_dual = tw(chi2.inverse().twist(-HALF), "St_GL2")
    return J(st_dual, tail=fmt((chi2 * chi2 * theta).twist(1))), "e(chi2) < -1/2", False


def one_gl2_branch(chi2: SmoothChar, theta: SmoothChar) -> tuple[str, str]:
    """ν^{1/2}χ2 1_GL2 ⋊ θ."""
    e = e_of(chi2)
    nu_chi2 = chi2.twist(1)
    inv = chi2.inverse()
    if e > 0:
        return J(fmt(nu_chi2), fmt(chi2), tail=fmt(theta)), "e(chi2) > 0"
    if e == 0:
        return J(fmt(nu_chi2), tail=rtimes(fmt(chi2), fmt(theta))), "e(chi2) = 0"
    if e >= -HALF:
        return J(fmt(nu_chi2), fmt(inv), tail=fmt(chi2 * theta)), "0 > e(chi2) >= -1/2"
    if e > -1:
        return J(fmt(inv), fmt(nu_chi2), tail=fmt(nu_chi2 * theta)), "-1/2 > e(chi2) > -1"
    sq_theta = (chi2 * chi2 * theta).twist(1)
    if e == -1:
        return J(fmt(inv), tail=rtimes(fmt(inv.twist(-1)), fmt(sq_theta))), "e(chi2) = -1"
    return J(fmt(inv), fmt(inv.twist(-1)), tail=fmt(sq_theta)), "e(chi2) < -1"


def st_gsp2_branch(chi1: SmoothChar, theta: SmoothChar) -> tuple[Optional[str], str, bool]:
    """χ1 ⋊ ν^{1/2}θ St_GSp2."""
    e = e_of(chi1)
    if e > 0:
        return J(fmt(chi1), tail=tw(theta.twist(HALF), "St_GSp2")), "e(chi1) > 0", False
    if e == 0:
        return None, "e(chi1) = 0", True
    return J(fmt(chi1.inverse()), tail=tw((chi1 * theta).twist(HALF), "St_GSp2")), "e(chi1) < 0", False


def one_gsp2_branch(chi1: SmoothChar, theta: SmoothChar) -> tuple[str, str]:
    """χ1 ⋊ ν^{1/2}θ 1_GSp2."""
    e = e_of(chi1)
    if e > 0:
        return J(fmt(chi1), "nu", tail=fmt(theta)), "e(chi1) > 0"
    if e == 0:
        return J("nu", tail=rtimes(fmt(chi1), fmt(theta))), "e(chi1) = 0"
    return J(fmt(chi1.inverse()), "nu", tail=fmt(chi1 * theta)), "e(chi1) < 0"


def quotient_label(constituent: Constituent) -> str:
    if constituent.tempered:
        raise NotApplicable(f"{constituent.label} is tempered; it is not a Langlands quotient")
    if constituent.langlands is None:
        raise Unsupported(f"no Langlands data recorded for {constituent.label} in case {constituent.case}")
    return constituent.langlands
