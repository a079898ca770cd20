# app/induction/bernstein.py
"""Bernsteinblock för huvudserien av GSp4 och unipotenta klasser för konstituenterna.

Blocket s = [T, χ1 ⊗ χ2 ⊗ θ] bestäms av den duala karaktärens restriktion
till o_F^×, så bara karaktärernas enhetsrestriktioner används. Iwahori–Hecke-
etiketterna (t_e, t_a, t_b, t_a×t_o, t_a×t_a) är index i de klassiska
tabellerna över Iwahori–Hecke-moduler.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..characters import SmoothChar
from ..errors import Unsupported
from .types import Constituent

logger = logging.getLogger("llc.induction")

P_1111 = "[1^4]"
P_211 = "[2,1^2]"
P_22 = "[2^2]"
P_4 = "[4]"


@dataclass(frozen=True)
class BernsteinBlockJ:
    tag: str                 # J0 … J4
    dual_group: str          # 𝒥^s = Z_{G^∨}(Im c^s)
    group: str               # J^s, dual till 𝒥^s
    hecke: tuple[str, ...]   # möjliga Iwahori–Hecke-index i blocket

    def render(self) -> str:
        return f"{self.tag}: J^s = {self.group}"


_BLOCKS = {
    "J1": BernsteinBlockJ("J1", "G^∨", "GSp4", ("t_a", "t_b", "t_c", "t_e")),
    "J2": BernsteinBlockJ("J2", "GL2×GSp0", "GL1×GSp2", ("t_a",)),
    "J3": BernsteinBlockJ("J3", "{(g,h) ∈ GL2×GL2 : det g = det h}", "GL2×GL2/GL1", ("t_a×t_o", "t_a×t_a")),
    "J4": BernsteinBlockJ("J4", "GL1×GSp2", "GL2×GSp0", ("t_a",)),
    # båda ramifierade utan relation: Heckealgebran är kommutativ
    "J0": BernsteinBlockJ("J0", "T^∨", "T", ()),
}


def _on_units(chi: SmoothChar) -> SmoothChar:
    return SmoothChar(Fraction(0), chi.unit_restriction(), chi.group)


def bernstein_block_J(chi1: SmoothChar, chi2: SmoothChar, group: str = "GSp4") -> BernsteinBlockJ:
    """Fallen J1–J4 upp till Weylkonjugering; θ påverkar inte blocket."""
    if group != "GSp4":
        raise Unsupported("Bernstein blocks are only tabulated for GSp4 principal series")
    a, b = _on_units(chi1), _on_units(chi2)
    if a.is_trivial and b.is_trivial:
        tag = "J1"
    elif a.is_trivial or b.is_trivial:
        tag = "J2"
    elif a == b or a == b.inverse():
        tag = "J3" if (a * a).is_trivial else "J4"
    else:
        tag = "J0"
    logger.debug("Bernstein block of (%s, %s): %s", chi1.render(), chi2.render(), tag)
    return _BLOCKS[tag]


@dataclass(frozen=True)
class UnipotentAssignment:
    partition: str
    enhancement: int = 1
    hecke: Optional[str] = None

    def render(self) -> str:
        return f"(φ_{{σ,{self.partition}}}, {self.enhancement:+d})"


# (fall, block, konstituent) -> tilldelning
_ASSIGNMENTS: dict[tuple[str, str, str], UnipotentAssignment] = {}


def _put(case: str, blocks: tuple[str, ...], hecke: Optional[str], table: dict[str, tuple[str, int]]) -> None:
    for blk in blocks:
        for tag, (partition, sign) in table.items():
            _ASSIGNMENTS[(case, blk, tag)] = UnipotentAssignment(partition, sign, hecke)


_GL2_PAIR = {"one_GL2": (P_1111, 1), "St_GL2": (P_22, 1)}
_GSP2_PAIR = {"one_GSp2": (P_1111, 1), "St_GSp2": (P_22, 1)}

_put("1ai", ("J1",), "t_e", _GL2_PAIR)
_put("1ai", ("J3",), "t_a×t_o", _GL2_PAIR)
_put("1ai", ("J4",), "t_a", _GL2_PAIR)
_put("1aii", ("J1",), "t_e", _GSP2_PAIR)
_put("1aii", ("J2",), "t_a", _GSP2_PAIR)
_put("1aiii", ("J1",), None, {"St_GSp4": (P_4, 1)})
_put("1aiv", ("J1",), "t_a", {"delta": (P_1111, 1)})
_put("1aiv", ("J3",), "t_a×t_a", {
    "J_nuchi2": (P_1111, 1),
    "J_St_GL2_theta": (P_211, 1),
    "J_St_GL2_chi2theta": (P_211, 1),
    "delta": (P_22, 1),
})
_put("1bi", ("J1",), "t_b", {
    "J_nu_1": (P_1111, 1),
    "J_St_GL2": (P_22, 1),
    "tau_T": (P_211, -1),
    "tau_S": (P_211, 1),
})
_put("1biii", ("J1",), "t_e", _GL2_PAIR)
_put("1biii", ("J3",), "t_a×t_o", _GL2_PAIR)


def unipotent_class_of_constituent(block: BernsteinBlockJ, constituent: Constituent) -> UnipotentAssignment:
    key = (constituent.case, block.tag, constituent.tag)
    found = _ASSIGNMENTS.get(key)
    if found is None:
        raise Unsupported(
            f"no unipotent assignment for {constituent.label} (case {constituent.case}, block {block.tag})"
        )
    return found


def covered_assignments() -> list[dict]:
    return [
        {"case": c, "block": b, "constituent": t, "partition": a.partition, "enhancement": a.enhancement,
         "hecke": a.hecke}
        for (c, b, t), a in sorted(_ASSIGNMENTS.items())
    ]
