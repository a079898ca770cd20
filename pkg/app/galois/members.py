# app/galois/members.py
"""Byggstenar för paketmedlemmar.

Medlemmar med stöd i en äkta Levi hämtar etikett, temperering och
generiskhet från reducerbarhetsmodulen; superkuspidala medlemmar pekar på
djup-noll-tabellen när en nyckel finns.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

from ..characters import SmoothChar
from ..errors import Unsupported
from ..induction.reducibility import decide_reducibility
from ..induction.types import InducedRep, ReducibilityReport
from ..rootdata import LeviLabel, dual_levi
from ..supercuspidal import depth_zero_rep
from .descriptor import PacketMember

logger = logging.getLogger("llc.galois")

HALF = Fraction(1, 2)


def dual_name(group: str, levi: str) -> str:
    return dual_levi(LeviLabel(levi, group)).name


# ----------------------- Infinitesimala parametrar -----------------------
def jordan(chi: SmoothChar, size: int) -> tuple[SmoothChar, ...]:
    """χ‖w‖^{(k-1)/2}, …, χ‖w‖^{-(k-1)/2} för ett Jordanblock av storlek k."""
    top = Fraction(size - 1, 2)
    return tuple(chi.twist(top - j) for j in range(size))


def block_jordan(tag: str, size: int) -> tuple[str, ...]:
    top = Fraction(size - 1, 2)
    out = []
    for j in range(size):
        s = top - j
        out.append(tag if s == 0 else f"nu^{{{s}}}·{tag}")
    return tuple(out)


def rendered(*parts) -> tuple[str, ...]:
    """Platta ut karaktärer och blocketiketter till text."""
    out: list[str] = []
    for p in parts:
        if isinstance(p, SmoothChar):
            out.append(p.render())
        elif isinstance(p, str):
            out.append(p)
        else:
            out.extend(x.render() if isinstance(x, SmoothChar) else x for x in p)
    return tuple(out)


def dual_torus_image(rep: InducedRep) -> tuple[SmoothChar, ...]:
    """Bilden i T^∨ av torusdatumet, som multimängd av karaktärer av W_F."""
    a, b, t = rep.chi1, rep.chi2, rep.theta
    if rep.group == "Sp4":
        return (a, a.inverse(), b, b.inverse(), a.group.one())
    # Roberts–Schmidt-diagonalen, inverterad av självdualiteten
    return tuple(c.inverse() for c in (a * b * t, a * t, b * t, t))


# ----------------------- Medlemmar -----------------------
def pick_tag(report: ReducibilityReport, by_case: dict[str, str]) -> Optional[str]:
    """Konstituenten som fallet pekar ut; None betyder hela den irreducibla induktionen."""
    if report.case in by_case:
        return by_case[report.case]
    if report.irreducible:
        return None
    raise Unsupported(
        f"{report.inducing} is reducible (case {report.case}) and the packet member is not pinned down"
    )


def constituent_member(
    rep: InducedRep,
    tag: Optional[str],
    levi_dual: str,
    enhancement: str = "1",
    springer: Optional[str] = None,
    label: Optional[str] = None,
    square_integrable: Optional[bool] = None,
    restriction: Optional[list[str]] = None,
    generic: Optional[bool] = None,
) -> PacketMember:
    report = decide_reducibility(rep)
    if tag is None:
        if not report.irreducible:
            raise Unsupported(
                f"{report.inducing} is reducible (case {report.case}) and the packet member is not pinned down"
            )
        c = report.constituents[0]
    else:
        c = report.constituent(tag)
    sq = c.square_integrable if square_integrable is None else square_integrable
    return PacketMember(
        kind="principal series" if rep.levi == "T" else "intermediate series",
        label=label or c.label,
        enhancement=enhancement,
        generic=c.generic if generic is None else generic,
        tempered=c.tempered or sq,
        square_integrable=sq,
        levi=rep.levi,
        levi_dual=levi_dual,
        springer=springer,
        induced_from=report.inducing,
        induction_case=report.case,
        constituent_tag=c.tag,
        support=rendered(dual_torus_image(rep)) if rep.levi == "T" else (),
        restriction=restriction,
    )


def textual_member(
    kind: str,
    label: str,
    levi: str,
    levi_dual: str,
    enhancement: str = "1",
    tempered: bool = True,
    square_integrable: bool = False,
    springer: Optional[str] = None,
    induced_from: Optional[str] = None,
) -> PacketMember:
    """Medlem vars etikett följer fallbeskrivningen direkt, utan ny reducerbarhetsanalys."""
    return PacketMember(
        kind=kind, label=label, enhancement=enhancement, tempered=tempered or square_integrable,
        square_integrable=square_integrable, levi=levi, levi_dual=levi_dual, springer=springer,
        induced_from=induced_from or label,
    )


def sc_member(
    group: str,
    label: str,
    enhancement: str = "1",
    key: Optional[str] = None,
    springer: Optional[str] = None,
    restriction: Optional[list[str]] = None,
) -> PacketMember:
    if key is not None:
        depth_zero_rep(group, key)
    return PacketMember(
        kind="supercuspidal", label=label, enhancement=enhancement, tempered=True, square_integrable=True,
        levi="G", levi_dual=dual_name(group, "G"), springer=springer, sc_key=key, restriction=restriction,
    )


def sc_family(group: str, label: str, signs: tuple[str, ...]) -> tuple[PacketMember, ...]:
    """Rent superkuspidalt paket: en medlem per förstärkning."""
    if len(signs) == 1:
        return (sc_member(group, f"π({label})", signs[0]),)
    return tuple(sc_member(group, f"π^{{{s}}}({label})", s) for s in signs)


def split_members(
    rep: InducedRep,
    signs: tuple[str, ...],
    levi_dual: str,
    springers: Optional[tuple[str, ...]] = None,
) -> tuple[PacketMember, ...]:
    """En medlem per konstituent, i rapportens ordning."""
    report = decide_reducibility(rep)
    if len(report.constituents) != len(signs):
        raise Unsupported(
            f"{report.inducing} has {len(report.constituents)} pieces but the packet needs {len(signs)}"
        )
    springers = springers or (None,) * len(signs)
    return tuple(
        constituent_member(rep, c.tag, levi_dual, s, sp)
        for c, s, sp in zip(report.constituents, signs, springers)
    )
