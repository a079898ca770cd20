# app/induction/types.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from ..characters import SmoothChar, SupercuspidalLabel
from ..errors import InvalidOperand
from ..rootdata import check_group

# Levi-namn som i rootdata; ASCII-varianter accepteras på CLI
LEVI_ALIASES = {
    "T": "T",
    "GL2xGSp0": "GL2×GSp0",
    "GL2×GSp0": "GL2×GSp0",
    "GL1xGSp2": "GL1×GSp2",
    "GL1×GSp2": "GL1×GSp2",
    "GL2xSp0": "GL2×Sp0",
    "GL2×Sp0": "GL2×Sp0",
    "GL2": "GL2×Sp0",
    "GL1xSp2": "GL1×Sp2",
    "GL1×Sp2": "GL1×Sp2",
    "siegel": "siegel",
    "klingen": "klingen",
}

_SIEGEL = {"GSp4": "GL2×GSp0", "Sp4": "GL2×Sp0"}
_KLINGEN = {"GSp4": "GL1×GSp2", "Sp4": "GL1×Sp2"}


def normalize_levi(group: str, levi: str) -> str:
    name = LEVI_ALIASES.get((levi or "").strip())
    if name is None:
        raise InvalidOperand(f"unknown Levi {levi!r}")
    if name == "siegel":
        return _SIEGEL[group]
    if name == "klingen":
        return _KLINGEN[group]
    if name != "T" and name not in (_SIEGEL[group], _KLINGEN[group]):
        raise InvalidOperand(f"Levi {name} does not belong to {group}")
    return name


@dataclass(frozen=True)
class InducedRep:
    """Parabolisk induktion till GSp4 eller Sp4."""
    group: str
    levi: str
    # L = T: χ1 × χ2 ⋊ θ (θ = 1 för Sp4)
    chi1: Optional[SmoothChar] = None
    chi2: Optional[SmoothChar] = None
    theta: Optional[SmoothChar] = None
    # Siegel: ν^β σ ⋊ χ
    sigma: Optional[SupercuspidalLabel] = None
    beta: Fraction = Fraction(0)
    # Klingen: χ ⋊ ρ (samt Siegel-karaktären χ för GSp4)
    chi: Optional[SmoothChar] = None
    rho: Optional[SupercuspidalLabel] = None

    def __post_init__(self):
        check_group(self.group)
        object.__setattr__(self, "levi", normalize_levi(self.group, self.levi))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.levi == "T":
            if self.chi1 is None or self.chi2 is None:
                raise InvalidOperand("torus induction needs chi1 and chi2")
            if self.theta is None:
                object.__setattr__(self, "theta", self.chi1.group.one())
            if self.group == "Sp4" and not self.theta.is_trivial:
                raise InvalidOperand("Sp4 principal series take no theta")
        elif self.levi in _SIEGEL.values():
            if self.sigma is None:
                raise InvalidOperand("Siegel induction needs a GL2 supercuspidal sigma")
            if self.group == "GSp4" and self.chi is None:
                raise InvalidOperand("GSp4 Siegel induction needs chi")
        else:
            if self.rho is None or self.chi is None:
                raise InvalidOperand("Klingen induction needs chi and rho")

    def render(self) -> str:
        if self.levi == "T":
            return f"{fmt(self.chi1)} × {fmt(self.chi2)} ⋊ {fmt(self.theta)}"
        if self.levi in _SIEGEL.values():
            tail = fmt(self.chi) if self.group == "GSp4" else "1"
            return f"{twist_nu(self.beta, self.sigma.ref)} ⋊ {tail}"
        return f"{fmt(self.chi)} ⋊ {self.rho.ref}"


# ----------------------- Rapporter -----------------------
class Constituent(BaseModel):
    tag: str                                # stabil nyckel inom fallet
    label: str                              # symboliskt namn med insatta karaktärer
    case: str
    length: int = 1                         # > 1 när satsen bara anger en delsumma
    tempered: bool = False                  # väsentligen tempererad
    square_integrable: bool = False         # kvadratintegrerbar modulo centrum
    generic: bool = False
    langlands: Optional[str] = None         # J(P, π, ν)-etikett
    langlands_branch: Optional[str] = None  # grenvillkor i e(χ)-tabellen


class ReducibilityReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    group: str
    levi: str
    inducing: str
    case: str
    length: int
    irreducible: bool
    constituents: list[Constituent]
    flags: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check(self) -> "ReducibilityReport":
        if self.length < 1:
            raise ValueError("length must be positive")
        if sum(c.length for c in self.constituents) != self.length:
            raise ValueError("constituent lengths do not add up")
        for c in self.constituents:
            if c.square_integrable and not c.tempered:
                raise ValueError(f"{c.label} is square-integrable but not tempered")
        return self

    @property
    def generic_count(self) -> int:
        return sum(1 for c in self.constituents if c.generic)

    def constituent(self, tag: str) -> Constituent:
        for c in self.constituents:
            if c.tag == tag:
                return c
        raise InvalidOperand(f"no constituent {tag!r} in case {self.case}")


def irreducible_report(rep: InducedRep, case: str = "irreducible") -> ReducibilityReport:
    return ReducibilityReport(
        group=rep.group,
        levi=rep.levi,
        inducing=rep.render(),
        case=case,
        length=1,
        irreducible=True,
        constituents=[Constituent(tag="full", label=rep.render(), case=case, generic=True)],
    )


def build_report(rep: InducedRep, case: str, constituents: list[Constituent], flags=()) -> ReducibilityReport:
    for c in constituents:
        c.case = case
    return ReducibilityReport(
        group=rep.group,
        levi=rep.levi,
        inducing=rep.render(),
        case=case,
        length=sum(c.length for c in constituents),
        irreducible=False,
        constituents=constituents,
        flags=list(flags),
    )


# ----------------------- Formatering -----------------------
def fmt(chi: SmoothChar) -> str:
    s = chi.render()
    return f"({s})" if "*" in s else s


def tw(chi: SmoothChar, body: str) -> str:
    """χ·body, där trivial χ utelämnas."""
    return body if chi.is_trivial else f"{fmt(chi)}·{body}"


def twist_nu(beta: Fraction, body: str) -> str:
    if beta == 0:
        return body
    if beta == 1:
        return f"nu·{body}"
    return f"nu^{{{beta}}}·{body}"


def rtimes(left: str, right: str) -> str:
    return f"{left} ⋊ {right}"


def J(*args: str, tail: Optional[str] = None) -> str:
    head = ", ".join(args)
    return f"J({head})" if tail is None else f"J({head}; {tail})"
