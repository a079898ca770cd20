# app/galois/presets.py
"""Namngivna parametrar, en eller flera per fall.

Alla förinställningar tolkas i etikettgruppen PRESET_LABELS. Namnen följer
fallnumreringen, t.ex. "sp4-case-7biii-eta" för det blandade O4-paketet med
χ = η.
"""
from __future__ import annotations

from ..characters import LabelGroup
from ..errors import InvalidOperand
from .descriptor import ParamDescriptor

PRESET_LABELS = "zeta:6,xi:generic"


def _c(tag: str, mult: int = 1) -> dict:
    return {"dim": 1, "tag": tag, "mult": mult}


def _v(tag: str, dim: int, kind: str = "none", mult: int = 1, **extra) -> dict:
    return {"dim": dim, "kind": kind, "tag": tag, "mult": mult, **extra}


def _sp4(summands: list[dict], sl2: str = "trivial") -> dict:
    return {"group": "Sp4", "summands": summands, "sl2": sl2}


def _gsp4(summands: list[dict], xi: str = "1", sl2: str = "trivial") -> dict:
    return {"group": "GSp4", "summands": summands, "xi": xi, "sl2": sl2}


PRESETS: dict[str, dict] = {
    # ---- Sp4: U irreducibel eller med högdimensionella summander ----
    "sp4-case-1": _sp4([_v("V5", 5, "orthogonal")]),
    "sp4-case-2": _sp4([_v("V4", 4, "orthogonal"), _c("eta")]),
    "sp4-case-3": _sp4([_v("V3", 3, "orthogonal"), _v("V2", 2, "orthogonal")]),
    "sp4-case-4a": _sp4([_v("V3", 3, "orthogonal"), _c("eta", 2)]),
    "sp4-case-4b": _sp4([_v("V3", 3, "orthogonal"), _c("eta"), _c("eta2")]),
    "sp4-case-4c": _sp4([_v("V3", 3, "orthogonal"), _c("zeta"), _c("zeta^{5}")]),
    "sp4-case-5a": _sp4([_v("V", 2, "orthogonal", 2), _c("eta")]),
    "sp4-case-5bi": _sp4([_v("V", 2, "symplectic", 2), _c("1")]),
    "sp4-case-5bii": _sp4([_v("V", 2, "symplectic", 2), _c("1")], sl2="nontrivial"),
    "sp4-case-5bii-positive-depth": _sp4([_v("V", 2, "symplectic", 2, depth="1/2"), _c("1")], sl2="nontrivial"),
    "sp4-case-5c": _sp4([_v("A", 2, "orthogonal"), _v("B", 2, "orthogonal"), _c("eta")]),
    "sp4-case-5d": _sp4([_v("A", 2), _v("B", 2, dual_of="A"), _c("1")]),
    "sp4-case-6a": _sp4([_v("V2", 2, "orthogonal"), _c("eta", 3)]),
    "sp4-case-6a-sl2": _sp4([_v("V2", 2, "orthogonal"), _c("eta", 3)], sl2="nontrivial"),
    "sp4-case-6b": _sp4([_v("V2", 2, "orthogonal"), _c("eta", 2), _c("eta2")]),
    "sp4-case-6c": _sp4([_v("V2", 2, "orthogonal"), _c("eta"), _c("eta2"), _c("eta2'")]),
    "sp4-case-6d": _sp4([_v("V2", 2, "orthogonal"), _c("eta"), _c("zeta"), _c("zeta^{5}")]),
    # ---- Sp4: U summa av karaktärer ----
    "sp4-case-7a-steinberg": _sp4([_c("1", 5)], sl2="[5]"),
    "sp4-case-7a-subregular": _sp4([_c("1", 5)], sl2="[3,1^2]"),
    "sp4-case-7a-minimal": _sp4([_c("1", 5)], sl2="[2^2,1]"),
    "sp4-case-7a-trivial": _sp4([_c("1", 5)]),
    "sp4-case-7bi": _sp4([_c("1"), _c("eta", 4)]),
    "sp4-case-7bii": _sp4([_c("1"), _c("eta", 4)], sl2="first"),
    "sp4-case-7biii-eta": _sp4([_c("1"), _c("eta", 4)], sl2="diagonal"),
    "sp4-case-7biii-eta2": _sp4([_c("1"), _c("eta2", 4)], sl2="diagonal"),
    "sp4-case-7biii-eta2p": _sp4([_c("1"), _c("eta2'", 4)], sl2="diagonal"),
    "sp4-case-7c": _sp4([_c("1", 3), _c("eta", 2)]),
    "sp4-case-7c-sl2": _sp4([_c("1", 3), _c("eta", 2)], sl2="nontrivial"),
    "sp4-case-7d": _sp4([_c("1", 3), _c("zeta"), _c("zeta^{5}")]),
    "sp4-case-7e": _sp4([_c("1"), _c("eta", 2), _c("eta2", 2)]),
    "sp4-case-7f": _sp4([_c("1"), _c("zeta", 2), _c("zeta^{5}", 2)]),
    "sp4-case-7f-sl2": _sp4([_c("1"), _c("zeta", 2), _c("zeta^{5}", 2)], sl2="nontrivial"),
    "sp4-case-7g": _sp4([_c("1"), _c("zeta"), _c("zeta^{5}"), _c("xi"), _c("xi^{-1}")]),
    # ---- GSp4 ----
    "gsp4-case-1": _gsp4([_v("V4", 4, "symplectic")]),
    "gsp4-case-2a": _gsp4([_v("V", 2, "symplectic", 2)]),
    "gsp4-case-2bi": _gsp4([_v("V", 2, "orthogonal", 2)]),
    "gsp4-case-2bii": _gsp4([_v("V", 2, "orthogonal", 2)], sl2="nontrivial"),
    "gsp4-case-2c": _gsp4([_v("A", 2, "symplectic"), _v("B", 2, "symplectic")]),
    "gsp4-case-3ai": _gsp4([_v("V", 2, "symplectic"), _c("1", 2)]),
    "gsp4-case-3aii": _gsp4([_v("V", 2, "symplectic"), _c("1", 2)], sl2="regular"),
    "gsp4-case-3aii-positive-depth": _gsp4([_v("V", 2, "symplectic", depth="1"), _c("1", 2)], sl2="regular"),
    "gsp4-case-3b": _gsp4([_v("V", 2, "symplectic"), _c("zeta"), _c("zeta^{5}")]),
    "gsp4-case-4a-steinberg": _gsp4([_c("1", 4)], sl2="[4]"),
    "gsp4-case-4a-subregular": _gsp4([_c("1", 4)], sl2="[2^2]"),
    "gsp4-case-4a-minimal": _gsp4([_c("1", 4)], sl2="[2,1^2]"),
    "gsp4-case-4a-trivial": _gsp4([_c("1", 4)]),
    "gsp4-case-4bi": _gsp4([_c("1", 2), _c("eta", 2)]),
    "gsp4-case-4bii": _gsp4([_c("1", 2), _c("eta", 2)], sl2="first"),
    "gsp4-case-4biv-eta": _gsp4([_c("1", 2), _c("eta", 2)], sl2="regular"),
    "gsp4-case-4biv-eta2": _gsp4([_c("1", 2), _c("eta2", 2)], sl2="regular"),
    "gsp4-case-4c": _gsp4([_c("zeta", 2), _c("1", 2)], xi="zeta"),
    "gsp4-case-4c-sl2": _gsp4([_c("zeta", 2), _c("1", 2)], xi="zeta", sl2="nontrivial"),
    "gsp4-case-4d": _gsp4([_c("1", 2), _c("zeta"), _c("zeta^{5}")]),
    "gsp4-case-4e": _gsp4([_c("nu^{3/2}"), _c("nu^{1/2}"), _c("nu^{-1/2}"), _c("nu^{-3/2}")]),
    "gsp4-case-4e-generic": _gsp4([_c("zeta"), _c("zeta^{5}"), _c("xi"), _c("xi^{-1}")]),
}


def preset_names(group: str | None = None) -> list[str]:
    prefix = f"{group.lower()}-" if group else ""
    return sorted(n for n in PRESETS if n.startswith(prefix))


def preset_labels() -> LabelGroup:
    return LabelGroup.from_declarations(PRESET_LABELS)


def load_preset(name: str) -> ParamDescriptor:
    if name not in PRESETS:
        raise InvalidOperand(f"unknown preset {name!r}")
    return ParamDescriptor.from_data({**PRESETS[name], "name": name})
