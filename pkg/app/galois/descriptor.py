# app/galois/descriptor.py
"""Symboliska L-parametrar och rapporterna som Galoissidan producerar.

En parameter beskrivs av hur W_F-representationen U delar sig: karaktärer
(dimension 1, skrivna i karaktärsgrammatiken) och irreducibla summander av
högre dimension (opaka etiketter med självdualitetstyp och determinant).
Inga Weilgruppskocykler konstrueras.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..characters import LabelGroup, SmoothChar
from ..errors import MalformedDescriptor
from ..rootdata import GROUPS

logger = logging.getLogger("llc.galois")

SelfDuality = Literal["orthogonal", "symplectic", "none"]

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"

# φ|_SL2: partition eller inbäddning i 𝒢_φ; "regular" och "nontrivial" är synonymer
SL2_VALUES = (
    "trivial", "nontrivial", "regular", "first", "second", "diagonal",
    "[5]", "[3,1^2]", "[2^2,1]", "[1^5]",
    "[4]", "[2^2]", "[2,1^2]", "[1^4]",
)
_SL2_ALIASES = {"regular": NONTRIVIAL, "[1^5]": TRIVIAL, "[1^4]": TRIVIAL}


class Summand(BaseModel):
    dim: int = Field(ge=1, le=5)
    kind: SelfDuality = "none"
    tag: str                        # karaktärstext för dim 1, annars opak etikett
    mult: int = Field(default=1, ge=1)
    det: Optional[str] = None       # determinanten som karaktärstext
    dual_of: Optional[str] = None   # V ≅ W^∨ där W är summanden med denna etikett
    depth: str = "0"                # djupet hos motsvarande superkuspidal

    @property
    def depth_value(self) -> Fraction:
        try:
            return Fraction(self.depth)
        except ValueError as exc:
            raise MalformedDescriptor(f"invalid depth {self.depth!r} on {self.tag}") from exc


class ParamDescriptor(BaseModel):
    group: str
    summands: list[Summand]
    xi: Optional[str] = None        # likhetskaraktär, bara GSp4
    sl2: str = TRIVIAL
    name: Optional[str] = None

    @classmethod
    def from_data(cls, data: dict) -> "ParamDescriptor":
        try:
            desc = cls.model_validate(data)
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(p) for p in first.get("loc", ()))
            raise MalformedDescriptor(f"descriptor field {where}: {first.get('msg')}") from exc
        desc.check_shape()
        return desc

    def check_shape(self) -> "ParamDescriptor":
        if self.group not in GROUPS:
            raise MalformedDescriptor(f"unknown group {self.group!r}")
        if self.sl2 not in SL2_VALUES:
            raise MalformedDescriptor(f"unknown sl2 restriction {self.sl2!r}")
        total = sum(s.dim * s.mult for s in self.summands)
        need = 5 if self.group == "Sp4" else 4
        if total != need:
            raise MalformedDescriptor(f"{self.group} parameters have dimension {need}, got {total}")
        for s in self.summands:
            if s.dim == 1 and s.kind == "symplectic":
                raise MalformedDescriptor(f"character {s.tag} cannot carry a symplectic form")
            s.depth_value
        if self.group == "Sp4":
            if self.xi is not None:
                raise MalformedDescriptor("Sp4 parameters take no similitude character")
        else:
            if self.xi is None:
                raise MalformedDescriptor("GSp4 parameters need the similitude character xi")
            if any(s.dim == 3 for s in self.summands):
                raise MalformedDescriptor("the partition [3,1] is impossible for a symplectic U")
        return self

    @property
    def sl2_normalized(self) -> str:
        return _SL2_ALIASES.get(self.sl2, self.sl2)


# ----------------------- Upplöst parameter -----------------------
@dataclass(frozen=True)
class Block:
    """Irreducibel summand av dimension ≥ 2."""
    tag: str
    dim: int
    kind: str
    det: Optional[SmoothChar]
    dual_of: Optional[str]
    depth: Fraction


@dataclass(frozen=True)
class Resolved:
    group: str
    labels: LabelGroup
    chars: tuple[SmoothChar, ...]
    blocks: tuple[Block, ...]
    xi: Optional[SmoothChar]
    sl2: str

    @property
    def bounded(self) -> bool:
        """φ(W_F) begränsad (modulo centrum för GSp4)."""
        centre = self.xi.nu_exp / 2 if self.xi is not None else Fraction(0)
        return all(c.nu_exp == centre for c in self.chars)

    @property
    def block_dims(self) -> tuple[int, ...]:
        return tuple(sorted((b.dim for b in self.blocks), reverse=True))


def resolve(desc: ParamDescriptor, labels: LabelGroup) -> Resolved:
    desc.check_shape()
    chars: list[SmoothChar] = []
    blocks: list[Block] = []
    for s in desc.summands:
        for _ in range(s.mult):
            if s.dim == 1:
                chars.append(labels.parse(s.tag))
            else:
                det = labels.parse(s.det) if s.det else None
                blocks.append(Block(s.tag, s.dim, s.kind, det, s.dual_of, s.depth_value))
    xi = labels.parse(desc.xi) if desc.xi else None
    if desc.group == "Sp4" and all(b.det is not None for b in blocks):
        total = labels.one()
        for c in chars:
            total = total * c
        for b in blocks:
            total = total * b.det
        if not total.is_trivial:
            raise MalformedDescriptor(f"det U = {total.render()} is not trivial")
    out = Resolved(desc.group, labels, tuple(chars), tuple(blocks), xi, desc.sl2_normalized)
    logger.debug("Resolved %s descriptor: blocks %s, %d characters", desc.group, out.block_dims, len(chars))
    return out


# ----------------------- Förstärkningar -----------------------
def enhancements(rank: int) -> tuple[str, ...]:
    """Irr(μ2^rank) som teckentupler i lexikografisk ordning, trivial först."""
    if rank == 0:
        return ("1",)
    signs = [""]
    for _ in range(rank):
        signs = [s + m for s in signs for m in "+-"]
    if rank == 1:
        return tuple(signs)
    return tuple("(" + ",".join(s) + ")" for s in signs)


# ----------------------- Rapporter -----------------------
MemberKind = Literal["supercuspidal", "principal series", "intermediate series"]


class PacketMember(BaseModel):
    kind: MemberKind
    label: str
    enhancement: str = "1"
    generic: bool = False
    tempered: bool = False
    square_integrable: bool = False
    levi: str = "G"                          # stödets Levi på gruppsidan
    levi_dual: str = "G"                     # Z_{G^∨}(Z°_{𝓛_φ}) på Galoissidan
    springer: Optional[str] = None           # unipotent par (u, ρ) i 𝒢_φ
    induced_from: Optional[str] = None       # induktionsdatum i reducerbarhetsmodulen
    induction_case: Optional[str] = None
    constituent_tag: Optional[str] = None
    sc_key: Optional[str] = None             # djup-noll-nyckel i superkuspidalmodulen
    support: tuple[str, ...] = ()            # karaktärerna i stödet, som text
    restriction: Optional[list[str]] = None  # deklarerade Sp4-konstituenter


class CentralizerReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    group: str
    case: str
    centralizer: str        # 𝒢_φ
    a_phi: str              # A_φ = π0(𝒢_φ)
    s_rank: int             # S_φ ≅ μ2^rank
    discrete: bool
    bounded: bool
    springer_table: Optional[str] = None

    @property
    def irr_count(self) -> int:
        return 2 ** self.s_rank


class PacketDescriptor(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    group: str
    case: str
    centralizer: str
    s_rank: int
    size: int
    tempered: bool
    discrete: bool
    members: list[PacketMember]
    infinitesimal: list[str] = Field(default_factory=list)
    flags: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check(self) -> "PacketDescriptor":
        if self.size != len(self.members) or self.size != 2 ** self.s_rank:
            raise ValueError(f"packet size {len(self.members)} does not match |Irr(S_phi)| = {2 ** self.s_rank}")
        if len({m.enhancement for m in self.members}) != self.size:
            raise ValueError("enhancements are not distinct")
        if self.discrete and not self.tempered:
            raise ValueError("discrete packets are tempered")
        if self.tempered and sum(1 for m in self.members if m.generic) != 1:
            raise ValueError("a tempered packet has exactly one generic member")
        return self

    @property
    def mixed(self) -> bool:
        kinds = {m.kind == "supercuspidal" for m in self.members}
        return len(kinds) == 2

    def member(self, enhancement: str) -> PacketMember:
        for m in self.members:
            if m.enhancement == enhancement:
                return m
        raise KeyError(enhancement)


@dataclass(frozen=True)
class CaseResult:
    """Det som ett matchat fall levererar till packets."""
    case: str
    centralizer: str
    a_phi: str
    s_rank: int
    discrete: bool
    members: tuple[PacketMember, ...]
    infinitesimal: tuple[str, ...]
    springer_table: Optional[str] = None
    flags: tuple[str, ...] = field(default_factory=tuple)


class SupportReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    group: str
    case: str
    enhancement: str
    levi_dual: str
    levi: str
    springer: Optional[str] = None
    springer_image: Optional[str] = None     # Weylrepresentation eller "cusp"
    no_levi_shortcut: bool = False           # 𝒢_φ° abelsk
    sketch: str
