# app/characters.py
"""Syntaktisk modell av släta karaktärer på F^×.

En karaktär är ν^e · (tam etikett), där den tama delen är ett element i en
deklarerad ändligt genererad abelsk etikettgrupp. Gruppen innehåller alltid
η (oramifierad kvadratisk) och η2 (ramifierad kvadratisk); η2′ = η·η2 är
den tredje karaktären av ordning 2.
"""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidOperand, LabelGroupMismatch, NeedsDeclaration

logger = logging.getLogger("llc.characters")

INFINITE = math.inf
Order = Union[int, float]


@dataclass(frozen=True)
class Generator:
    name: str
    order: Optional[int]      # None = generisk (oändlig ordning, inga relationer)
    unramified: bool = False


_BUILTIN = (
    Generator("eta", 2, unramified=True),
    Generator("eta2", 2, unramified=False),
)

_ALIASES = {
    "η": "eta",
    "η2": "eta2",
    "η2′": "eta2p",
    "eta2'": "eta2p",
    "ν": "nu",
}

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class LabelGroup:
    """Deklarerad etikettgrupp; fryst när sessionen skapas."""
    generators: tuple[Generator, ...] = _BUILTIN

    @classmethod
    def from_declarations(cls, text: str) -> "LabelGroup":
        """Tolkar t.ex. "zeta:6,xi:generic,u1:3:unramified"."""
        gens = list(_BUILTIN)
        for part in [p.strip() for p in (text or "").split(",") if p.strip()]:
            bits = part.split(":")
            if len(bits) not in (2, 3):
                raise InvalidOperand(f"malformed label declaration: {part!r}")
            name, order_s = bits[0].strip(), bits[1].strip()
            if not _NAME_RE.match(name) or name in ("nu", "eta", "eta2", "eta2p"):
                raise InvalidOperand(f"invalid or reserved label name: {name!r}")
            if any(g.name == name for g in gens):
                raise InvalidOperand(f"label declared twice: {name!r}")
            if order_s == "generic":
                order = None
            else:
                try:
                    order = int(order_s)
                except ValueError as exc:
                    raise InvalidOperand(f"invalid order in {part!r}") from exc
                if order < 1:
                    raise InvalidOperand(f"order must be positive in {part!r}")
            unram = len(bits) == 3 and bits[2].strip() == "unramified"
            gens.append(Generator(name, order, unram))
        group = cls(tuple(gens))
        logger.debug("Declared label group with generators %s", [g.name for g in gens])
        return group

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise NeedsDeclaration(f"label {name!r} is not declared in this session")

    # --- konstruktion av karaktärer ---
    def one(self) -> "SmoothChar":
        return SmoothChar(Fraction(0), (), self)

    def nu(self, e=1) -> "SmoothChar":
        return SmoothChar(Fraction(e), (), self)

    def label(self, name: str, exponent: int = 1) -> "SmoothChar":
        name = _ALIASES.get(name, name)
        if name == "eta2p":
            return self.label("eta", exponent) * self.label("eta2", exponent)
        if name == "nu":
            return self.nu(exponent)
        self.generator(name)
        return SmoothChar(Fraction(0), _normalize(self, {name: exponent}), self)

    def parse(self, text: str) -> "SmoothChar":
        return parse_char(text, self)

    def order_two_characters(self) -> tuple["SmoothChar", ...]:
        """η, η2, η2′ i fast ordning."""
        return (self.label("eta"), self.label("eta2"), self.label("eta2p"))


def _normalize(group: LabelGroup, exps: dict[str, int]) -> tuple[tuple[str, int], ...]:
    out = []
    for g in group.generators:
        e = exps.get(g.name, 0)
        if g.order is not None:
            e %= g.order
        if e:
            out.append((g.name, e))
    return tuple(out)


@dataclass(frozen=True)
class SmoothChar:
    nu_exp: Fraction
    tame: tuple[tuple[str, int], ...]
    group: LabelGroup = field(repr=False, compare=False)

    def _check(self, other: "SmoothChar") -> None:
        if self.group != other.group:
            raise LabelGroupMismatch("characters come from different label groups")

    def __mul__(self, other: "SmoothChar") -> "SmoothChar":
        self._check(other)
        exps = dict(self.tame)
        for k, v in other.tame:
            exps[k] = exps.get(k, 0) + v
        return SmoothChar(self.nu_exp + other.nu_exp, _normalize(self.group, exps), self.group)

    def inverse(self) -> "SmoothChar":
        return SmoothChar(-self.nu_exp, _normalize(self.group, {k: -v for k, v in self.tame}), self.group)

    def __pow__(self, n: int) -> "SmoothChar":
        return SmoothChar(
            self.nu_exp * n, _normalize(self.group, {k: v * n for k, v in self.tame}), self.group
        )

    def twist(self, e) -> "SmoothChar":
        """ν^e · χ."""
        return SmoothChar(self.nu_exp + Fraction(e), self.tame, self.group)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SmoothChar):
            return NotImplemented
        self._check(other)
        return self.nu_exp == other.nu_exp and self.tame == other.tame

    def __hash__(self) -> int:
        return hash((self.nu_exp, self.tame))

    @property
    def unitary(self) -> "SmoothChar":
        return SmoothChar(Fraction(0), self.tame, self.group)

    @property
    def is_trivial(self) -> bool:
        return self.nu_exp == 0 and not self.tame

    @property
    def is_unramified(self) -> bool:
        return all(self.group.generator(k).unramified for k, _ in self.tame)

    def unit_restriction(self) -> tuple[tuple[str, int], ...]:
        """Den tama delen modulo oramifierade generatorer."""
        return tuple((k, v) for k, v in self.tame if not self.group.generator(k).unramified)

    def restrict_eq(self, other: "SmoothChar") -> bool:
        self._check(other)
        return self.unit_restriction() == other.unit_restriction()

    def render(self) -> str:
        parts = []
        if self.nu_exp == 1:
            parts.append("nu")
        elif self.nu_exp != 0:
            parts.append(f"nu^{{{self.nu_exp}}}")
        exps = dict(self.tame)
        # η·η2 skrivs som η2′
        if exps.get("eta") == 1 and exps.get("eta2") == 1:
            exps.pop("eta")
            exps.pop("eta2")
            parts.append("eta2'")
        for k, v in exps.items():
            parts.append(k if v == 1 else f"{k}^{{{v}}}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


# ----------------------- Operationer -----------------------
def char_op(a: SmoothChar, b: Optional[SmoothChar], op: str):
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "eq":
        return a == b
    raise InvalidOperand(f"unknown character operation: {op}")


def e_of(chi: SmoothChar) -> Fraction:
    return chi.nu_exp


def order_of(chi: SmoothChar) -> Order:
    if chi.nu_exp != 0:
        return INFINITE
    order = 1
    for name, e in chi.tame:
        g = chi.group.generator(name)
        if g.order is None:
            return INFINITE
        order = math.lcm(order, g.order // math.gcd(e, g.order))
    return order


def unit_order(chi: SmoothChar) -> Order:
    """Ordningen av restriktionen till o_F^×."""
    restricted = SmoothChar(Fraction(0), chi.unit_restriction(), chi.group)
    return order_of(restricted)


def is_nu_power(chi: SmoothChar, *exps) -> bool:
    """Sant om χ = ν^e för något e i exps."""
    return not chi.tame and chi.nu_exp in {Fraction(e) for e in exps}


_FACTOR_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_']*|ν|η2′|η2|η|1)\s*(?:\^\s*\{?\s*([+-]?\d+(?:/\d+)?)\s*\}?)?\s*$")


def parse_char(text: str, group: LabelGroup) -> SmoothChar:
    """Tolkar `nu^{a/b} * label`-grammatiken."""
    if text is None or not str(text).strip():
        raise InvalidOperand("empty character literal")
    out = group.one()
    for factor in str(text).split("*"):
        m = _FACTOR_RE.match(factor)
        if not m:
            raise InvalidOperand(f"malformed character literal: {text!r}")
        name, exp_s = m.group(1), m.group(2)
        exp = Fraction(exp_s) if exp_s else Fraction(1)
        name = _ALIASES.get(name, name)
        if name == "1":
            continue
        if name == "nu":
            out = out * group.nu(exp)
            continue
        if exp.denominator != 1:
            raise InvalidOperand(f"only nu may carry fractional exponents: {factor!r}")
        out = out * group.label(name, int(exp))
    return out


# ----------------------- Superkuspidala etiketter -----------------------
@dataclass(frozen=True)
class SupercuspidalLabel:
    group: str                       # GL2, GSp2, PGL2, Sp2, ...
    ref: str                         # t.ex. "(E/F, theta)" eller opakt id
    central_char: SmoothChar
    self_dual: bool = False
    depth: Fraction = Fraction(0)
    # karaktärer av ordning ≤ 2 som är triviala på F_σ^× (bara för Sp2)
    fsigma_trivial: tuple[SmoothChar, ...] = ()
    # kvadratiska ξ med ξρ ≅ ρ (för GL2/GSp2-superkuspidaler)
    self_twists: tuple[SmoothChar, ...] = ()

    def __post_init__(self):
        if self.depth < 0:
            raise InvalidOperand("depth must be nonnegative")
        if self.self_dual:
            order = order_of(self.central_char)
            if order not in (1, 2):
                raise InvalidOperand(
                    f"self-dual supercuspidal {self.ref} needs central character of order dividing 2"
                )

    def trivial_on_fsigma(self, chi: SmoothChar) -> bool:
        return chi.unitary in {c.unitary for c in self.fsigma_trivial} or chi.unitary.is_trivial

    def render(self) -> str:
        return self.ref

    def fixed_by(self, xi: SmoothChar) -> bool:
        """Sant om ξρ ≅ ρ enligt de deklarerade självtwistarna."""
        return xi.unitary in {c.unitary for c in self.self_twists}
