# app/galois/packets.py
"""Galoissidans ingång: centralisator, paket, kuspidalt stöd, infinitesimal parameter.

Alla operationer tar en ParamDescriptor och en LabelGroup och går via
samma klassificering, så att rapporterna alltid beskriver samma fall.
"""
from __future__ import annotations

import logging

from pydantic import ValidationError

from ..characters import LabelGroup
from ..errors import IncompleteData, InvalidDatum, InvalidEnhancement, InvalidOperand
from .descriptor import (
    CaseResult,
    CentralizerReport,
    PacketDescriptor,
    PacketMember,
    ParamDescriptor,
    Resolved,
    SupportReport,
    resolve,
)
from .gsp4_cases import classify_gsp4
from .members import dual_name
from .sp4_cases import classify_sp4
from .springer import resolve_pair

logger = logging.getLogger("llc.galois")


def classify(p: ParamDescriptor, labels: LabelGroup) -> tuple[Resolved, CaseResult]:
    r = resolve(p, labels)
    result = classify_sp4(r) if r.group == "Sp4" else classify_gsp4(r)
    return r, result


def centralizer(p: ParamDescriptor, labels: LabelGroup) -> CentralizerReport:
    r, c = classify(p, labels)
    return CentralizerReport(
        group=r.group,
        case=c.case,
        centralizer=c.centralizer,
        a_phi=c.a_phi,
        s_rank=c.s_rank,
        discrete=c.discrete,
        bounded=r.bounded,
        springer_table=c.springer_table,
    )


def assemble_packet(p: ParamDescriptor, labels: LabelGroup) -> PacketDescriptor:
    r, c = classify(p, labels)
    members = list(c.members)
    if r.bounded:
        # den triviala förstärkningen bär den generiska medlemmen
        members = [m.model_copy(update={"generic": i == 0}) for i, m in enumerate(members)]
    try:
        packet = PacketDescriptor(
            group=r.group,
            case=c.case,
            centralizer=c.centralizer,
            s_rank=c.s_rank,
            size=len(members),
            tempered=r.bounded,
            discrete=c.discrete,
            members=members,
            infinitesimal=list(c.infinitesimal),
            flags=list(c.flags),
        )
    except ValidationError as exc:
        raise InvalidDatum(f"case {c.case} produced an inconsistent packet: {exc.errors()[0]['msg']}") from exc
    logger.info("Assembled %s packet for case %s%s: size %d", r.group, c.case,
                f" ({p.name})" if p.name else "", packet.size)
    return packet


def infinitesimal(p: ParamDescriptor, labels: LabelGroup) -> list[str]:
    _, c = classify(p, labels)
    return list(c.infinitesimal)


def _member_for(c: CaseResult, enhancement: str) -> PacketMember:
    for m in c.members:
        if m.enhancement == enhancement:
            return m
    known = ", ".join(m.enhancement for m in c.members)
    raise InvalidEnhancement(f"{enhancement!r} is not an enhancement in case {c.case} (known: {known})")


def cuspidal_support(p: ParamDescriptor, enhancement: str, labels: LabelGroup) -> SupportReport:
    r, c = classify(p, labels)
    m = _member_for(c, enhancement)
    row = resolve_pair(m.springer) if m.springer else None
    if m.kind == "supercuspidal":
        sketch = f"(φ, {enhancement}) is cuspidal; the member {m.label} is supercuspidal"
    elif m.levi == "T":
        sketch = f"support in the dual torus: {', '.join(m.support)}"
    else:
        sketch = f"support in {m.levi_dual}; the member is a constituent of {m.induced_from}"
    return SupportReport(
        group=r.group,
        case=c.case,
        enhancement=enhancement,
        levi_dual=m.levi_dual,
        levi=m.levi,
        springer=m.springer,
        springer_image=row.weyl_rep if row else None,
        no_levi_shortcut=c.springer_table is None,
        sketch=sketch,
    )


# ----------------------- Sp4 ⊂ GSp4 -----------------------
def sp4_from_gsp4(packet: PacketDescriptor) -> list[str]:
    """Sp4-paketet under GSp4-paketet, från de deklarerade restriktionerna."""
    if packet.group != "GSp4":
        raise InvalidOperand(f"restriction starts from a GSp4 packet, got {packet.group}")
    if packet.size == 1 and packet.members[0].restriction is None:
        return [f"{packet.members[0].label}|_Sp4"]
    out: list[str] = []
    for m in packet.members:
        if m.restriction is None:
            raise IncompleteData(f"no Sp4 restriction is recorded for {m.label} (case {packet.case})")
        out.extend(m.restriction)
    n = len(out)
    if n & (n - 1):
        raise IncompleteData(f"the declared restrictions give {n} members, not a power of two")
    return out


# ----------------------- Kontroller -----------------------
def support_commutes(packet: PacketDescriptor) -> bool:
    """Stödets Levi på Galoissidan är dualen av den inducerande Levin för varje icke-superkuspidal medlem."""
    return all(
        dual_name(packet.group, m.levi) == m.levi_dual
        for m in packet.members
        if m.kind != "supercuspidal"
    )


def infinitesimal_matches(packet: PacketDescriptor) -> bool:
    return all(
        sorted(m.support) == sorted(packet.infinitesimal)
        for m in packet.members
        if m.kind == "principal series"
    )
