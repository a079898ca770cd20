# app/stability.py
"""Symbolisk stabilitetsbokföring för de blandade paketen med η2.

Karaktärer uttrycks som koefficientvektorer över en fast bas av sju
distributioner (sex stabila och D^{unst}_{A1×A1}). Greenfunktionerna är
opaka symboler och inga integraler beräknas. Konstanterna c, c1, c2 är
formella positiva obestämda; en koefficient är noll endast om den är noll
som polynom i dem.

Nära s räknas D_{(F_{A1×A1},𝒢_sgn)} som instabil på GSp_{2,2}, så där
krävs att både D^{unst}- och 𝒢_sgn-koefficienterna försvinner.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Literal, Optional

import sympy
from pydantic import BaseModel, Field

from .errors import InvalidDatum, InvalidOperand, Unsupported
from .rootdata import apartment

logger = logging.getLogger("llc.stability")

Near = Literal["1", "s"]
Convention = Literal["plus_for_eta2", "minus_for_eta2"]

ETAS = ("eta2", "eta2'")

C, C1, C2 = sympy.symbols("c c1 c2", positive=True)


# ----------------------- Bas -----------------------
@dataclass(frozen=True)
class DistBasis:
    stable: tuple[str, ...]
    unstable: str
    green_symbols: tuple[str, ...]
    sgn_key: str

    @property
    def elements(self) -> tuple[str, ...]:
        return self.stable + (self.unstable,)

    def change_of_basis(self) -> sympy.Matrix:
        """(D_{(F_C2,Q)}, D_{(F_{A1×A1},Q)}) → (D^{st}, D^{unst}); inverterbar."""
        return sympy.Matrix([[1, 1], [1, -1]])

    def is_stable_key(self, key: str, near: Near) -> bool:
        if key == self.unstable:
            return False
        if near == "s" and key == self.sgn_key:
            return False
        return True


BASIS = DistBasis(
    stable=(
        "D_C2^st",
        "D_A1^st",
        "D_Ã1^st",
        "D_e^st",
        "D_A1×A1^st",
        "D_(F_A1×A1,G_sgn)^st",
    ),
    unstable="D_A1×A1^unst",
    green_symbols=(
        "Q_1^{C2}", "Q_A1^{C2}", "Q_A1×A1^{C2}",
        "Q_1^{A1×A1}", "Q_A1×A1^{A1×A1}", "q*G_sgn",
        "Q_1^{A1}", "Q_1^{Ã1}", "1",
    ),
    sgn_key="D_(F_A1×A1,G_sgn)^st",
)

ST, UNST, SGN, D_E = "D_A1×A1^st", BASIS.unstable, BASIS.sgn_key, "D_e^st"


# ----------------------- Vektorer -----------------------
@dataclass(frozen=True)
class DistVector:
    coeffs: tuple[tuple[str, sympy.Expr], ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, mapping: dict[str, sympy.Expr]) -> "DistVector":
        clean = {k: sympy.expand(v) for k, v in mapping.items()}
        return cls(tuple(sorted((k, v) for k, v in clean.items() if v != 0)))

    def as_dict(self) -> dict[str, sympy.Expr]:
        return dict(self.coeffs)

    def coeff(self, key: str) -> sympy.Expr:
        return self.as_dict().get(key, sympy.Integer(0))

    def __add__(self, other: "DistVector") -> "DistVector":
        out = self.as_dict()
        for k, v in other.coeffs:
            out[k] = out.get(k, 0) + v
        return DistVector.of(out)

    def scale(self, factor) -> "DistVector":
        return DistVector.of({k: factor * v for k, v in self.coeffs})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def render(self) -> dict[str, str]:
        return {k: str(v) for k, v in self.coeffs}


def total(vectors) -> DistVector:
    out = DistVector()
    for v in vectors:
        out = out + v
    return out


# ----------------------- Teckenkonventioner -----------------------
SIGN_TABLE: dict[str, dict[str, int]] = {
    "plus_for_eta2": {"eta2": 1, "eta2'": -1},
    "minus_for_eta2": {"eta2": -1, "eta2'": 1},
}


def eta_sign(eta: str, convention: Convention = "plus_for_eta2") -> int:
    """Tecknet ± i ½(Q ± q*𝒢_sgn) för η; samma för δ och π_α med samma η."""
    if convention not in SIGN_TABLE:
        raise InvalidOperand(f"unknown sign convention {convention!r}")
    if eta not in ETAS:
        raise InvalidOperand(f"{eta!r} is not a ramified quadratic character (expected eta2 or eta2')")
    return SIGN_TABLE[convention][eta]


def facet_prefactor(kind: str, q_mod_4: int) -> int:
    """(-1)^{(q-1)/2} för δ och (-1)^{(q+1)/2} för π_α på F_{A1×A1} nära s."""
    if q_mod_4 not in (1, 3):
        raise InvalidOperand(f"q must be odd, got q ≡ {q_mod_4} mod 4")
    eps = 1 if q_mod_4 == 1 else -1
    return eps if kind == "delta" else -eps


# ----------------------- Kandidater -----------------------
KINDS = ("delta", "pi_alpha", "pi1", "pi2", "pi_alpha+", "pi_alpha-")
_RESTRICTION = {"pi1": "delta", "pi2": "delta", "pi_alpha+": "pi_alpha", "pi_alpha-": "pi_alpha"}


def render_label(kind: str, eta: str) -> str:
    return {
        "delta": f"δ([{eta},nu*{eta}],1)",
        "pi_alpha": f"π_α({eta};1)",
        "pi1": f"π1({eta})",
        "pi2": f"π2({eta})",
        "pi_alpha+": f"π_α^+({eta})",
        "pi_alpha-": f"π_α^-({eta})",
    }[kind]


def parse_label(label: str, eta: Optional[str] = None) -> tuple[str, str]:
    """Etikett → (typ, η); η kan ges separat om etiketten är en typnyckel."""
    if label in KINDS:
        if eta is None:
            raise InvalidOperand(f"{label!r} needs an eta choice")
        return label, eta
    for kind in KINDS:
        for e in ETAS:
            if render_label(kind, e) == label:
                if eta is not None and eta != e:
                    raise InvalidOperand(f"{label!r} carries {e}, not {eta}")
                return kind, e
    raise Unsupported(f"no character vector is recorded for {label!r}")


def _split_constant(role: str, eta: str) -> sympy.Symbol:
    # instabil del som skiljer Sp4-konstituenterna åt; tar ut varandra i par
    return sympy.Symbol(f"k_{role}({eta})", positive=True)


def character_vector(
    label: str,
    eta: Optional[str] = None,
    sign: Optional[int] = None,
    near: Near = "s",
    convention: Convention = "plus_for_eta2",
    q_mod_4: int = 1,
    facet: Optional[str] = None,
) -> DistVector:
    """Koefficientvektorn för Ch_π över basen, eller restriktionen till en facett."""
    kind, eta = parse_label(label, eta)
    if facet is not None:
        return parahoric_profile(label, eta, sign, convention).at(facet)
    pm = eta_sign(eta, convention) if sign is None else sign
    if pm not in (1, -1):
        raise InvalidOperand(f"sign must be +1 or -1, got {pm}")
    base = _RESTRICTION.get(kind, kind)
    sgn = pm * C2
    if near == "s":
        sgn = facet_prefactor(base, q_mod_4) * sgn
    if base == "delta":
        vec = DistVector.of({ST: C1 / 2, UNST: -C1 / 2, SGN: sgn, D_E: C})
    else:
        vec = DistVector.of({ST: C1 / 2, UNST: C1 / 2, SGN: sgn})
    if kind == base:
        return vec
    half = vec.scale(sympy.Rational(1, 2))
    role = "princ" if base == "delta" else "sc"
    k = _split_constant(role, eta)
    split = k if kind in ("pi1", "pi_alpha+") else -k
    return half + DistVector.of({UNST: split})


def is_stable(v: DistVector, near: Near = "s") -> bool:
    return all(BASIS.is_stable_key(k, near) for k, _ in v.coeffs)


# ----------------------- Minimala stabila delmängder -----------------------
def minimal_stable_subsets(
    candidates: list[tuple[str, DistVector]], near: Near = "s"
) -> list[tuple[str, ...]]:
    """Inklusionsminimala icke-tomma delmängder med stabil summa, i storleksordning."""
    found: list[frozenset[int]] = []
    for size in range(1, len(candidates) + 1):
        for combo in itertools.combinations(range(len(candidates)), size):
            chosen = frozenset(combo)
            if any(f <= chosen for f in found):
                continue
            if is_stable(total(candidates[i][1] for i in combo), near):
                found.append(chosen)
    logger.debug("Found %d minimal stable subsets among %d candidates", len(found), len(candidates))
    return [tuple(candidates[i][0] for i in sorted(f)) for f in found]


# ----------------------- Paraboliska invarianter -----------------------
class ParahoricInvariantProfile(BaseModel):
    label: str
    eta: str
    sign: int
    facets: dict[str, dict[str, str]]  # facett → Greensymbol → koefficient

    def at(self, facet: str) -> DistVector:
        if facet not in self.facets:
            raise InvalidOperand(f"unknown facet {facet!r} (known: {', '.join(self.facets)})")
        return DistVector.of({k: sympy.sympify(v) for k, v in self.facets[facet].items()})


_PROFILE_FACETS = ("F_C2", "F_A1xA1", "F_A1", "F_A1t", "F_e")


def parahoric_profile(
    label: str, eta: Optional[str] = None, sign: Optional[int] = None,
    convention: Convention = "plus_for_eta2",
) -> ParahoricInvariantProfile:
    """Restriktionerna π^{G_{F+}} i Greensymboler för varje facett i kammarens slutna hölje."""
    kind, eta = parse_label(label, eta)
    if kind not in ("delta", "pi_alpha"):
        raise Unsupported(f"parahoric profiles are recorded for the GSp4 pair only, not {label!r}")
    pm = eta_sign(eta, convention) if sign is None else sign
    half = sympy.Rational(1, 2)
    known = {f.name for f in apartment("GSp4")}
    if kind == "delta":
        facets = {
            "F_C2": {"Q_A1×A1^{C2}": sympy.Rational(1, 4), "Q_A1^{C2}": -half, "Q_1^{C2}": sympy.Rational(1, 4)},
            "F_A1xA1": {"Q_1^{A1×A1}": half, "q*G_sgn": pm * half},
            "F_A1": {"Q_1^{A1}": 1},
            "F_A1t": {"Q_1^{Ã1}": 1},
            "F_e": {"1": 2},
        }
    else:
        # superkuspidal i hörnet α: inga invarianter vid δ eller i lägre facetter
        facets = {name: {} for name in _PROFILE_FACETS}
        facets["F_A1xA1"] = {"Q_A1×A1^{A1×A1}": half, "q*G_sgn": pm * half}
    if not set(facets) <= known:
        raise InvalidDatum(f"profile facets {sorted(set(facets) - known)} are not in the apartment")
    return ParahoricInvariantProfile(
        label=render_label(kind, eta),
        eta=eta,
        sign=pm,
        facets={f: {k: str(v) for k, v in row.items()} for f, row in facets.items()},
    )


# ----------------------- Rapporter -----------------------
class StabilityCandidate(BaseModel):
    label: str
    eta: Optional[str] = None
    sign: Optional[int] = None


class StableSubset(BaseModel):
    members: list[str]
    trace: dict[str, str]   # koefficienterna i summan


class StabilityReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    near: str
    convention: str
    q_mod_4: int
    candidates: dict[str, dict[str, str]]
    subsets: list[StableSubset]


def gsp4_candidates() -> list[StabilityCandidate]:
    return [StabilityCandidate(label=render_label(k, e)) for e in ETAS for k in ("delta", "pi_alpha")]


def sp4_candidates() -> list[StabilityCandidate]:
    return [StabilityCandidate(label=render_label(k, e)) for e in ETAS for k in ("pi1", "pi2", "pi_alpha+", "pi_alpha-")]


CANDIDATE_SETS = {"gsp4": gsp4_candidates, "sp4": sp4_candidates}


def stability_report(
    candidates: list[StabilityCandidate],
    near: Near = "s",
    convention: Convention = "plus_for_eta2",
    q_mod_4: int = 1,
) -> StabilityReport:
    if near not in ("1", "s"):
        raise InvalidOperand(f"near must be '1' or 's', got {near!r}")
    vectors = [
        (c.label, character_vector(c.label, c.eta, c.sign, near, convention, q_mod_4))
        for c in candidates
    ]
    by_label = dict(vectors)
    subsets = minimal_stable_subsets(vectors, near)
    logger.info("Stability near %s: %d candidates, %d minimal stable subsets", near, len(vectors), len(subsets))
    return StabilityReport(
        near=near,
        convention=convention,
        q_mod_4=q_mod_4,
        candidates={label: v.render() for label, v in vectors},
        subsets=[StableSubset(members=list(s), trace=total(by_label[m] for m in s).render()) for s in subsets],
    )
