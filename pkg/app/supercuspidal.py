# app/supercuspidal.py
"""Superkuspidala representationer av Sp4 och GSp4.

Djup noll: uppräkning av familjerna med singularitetstyp och formella
grader ur kvotformeln dim(τ) · q^{dim 𝔾/2} / |𝔾(F_q)|. Positivt djup:
formeln för formell grad ur en sammanfattning av ett kuspidalt datum, samt
mallar för typdata och elliptiska maximala tori.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import IncompleteData, InvalidDatum, InvalidOperand
from .finite_reductive import cuspidal_class, finite_group, group_dimension, group_order
from .qfield import ONE, Q, QHalf, factor, prime_to_p_part, qh_eval, qpow
from .rootdata import SP4_VERTEX_ALIASES, check_group, quotient_at

logger = logging.getLogger("llc.supercuspidal")

# Singularitetstyper
REGULAR = "regular"
NONSINGULAR = "nonsingular"
F_SINGULAR = "F-singular, k_F-nonsingular"
KF_SINGULAR = "k_F-singular"

SINGULARITIES = (REGULAR, NONSINGULAR, F_SINGULAR, KF_SINGULAR)


@dataclass(frozen=True)
class DepthZeroSC:
    group: str
    key: str                  # stabil nyckel, t.ex. "pi_alpha_eta2"
    name: str                 # visningsnamn, t.ex. "π_α(η2;χ)"
    family: str               # numrering inom gruppens lista: "1", "2a", ...
    vertex: str               # hörnetikett som i klassificeringen (β, γ, α, δ)
    cuspidal: str             # kuspidal serie i finite_reductive
    singularity: str
    twist: str = ""           # t.ex. "χ" för GSp4-familjer
    fraction: Fraction = Fraction(1)  # andel av seriens dimension som induceras
    convention: str = "full"  # full | p_prime (vilken gruppordning kvoten använder)
    count: Optional[QHalf] = None

    @property
    def f_singular(self) -> bool:
        return self.singularity in (F_SINGULAR, KF_SINGULAR)

    @property
    def expected_packet(self) -> str:
        """Singulära medlemmar hamnar i blandade paket, övriga i rent superkuspidala."""
        return "mixed" if self.f_singular else "pure"

    @property
    def quotient(self) -> str:
        node = SP4_VERTEX_ALIASES.get(self.vertex, self.vertex) if self.group == "Sp4" else self.vertex
        return quotient_at(self.group, node).removesuffix("(F_q)")


@lru_cache(maxsize=None)
def _depth_zero_table() -> dict[str, tuple[DepthZeroSC, ...]]:
    return {
        "GSp4": (
            DepthZeroSC("GSp4", "pi_S_theta_C2", "π_(S,θ), S of type C2", "1", "delta", "RT_C2", REGULAR),
            DepthZeroSC("GSp4", "pi_S_theta_A1xA1", "π_(S,θ), S of type A1×A1", "1", "delta", "RT_A1xA1", REGULAR),
            DepthZeroSC(
                "GSp4", "pi_beta_theta10", "π_β(θ10⊗χ)", "2", "beta", "theta10_twist", KF_SINGULAR,
                twist="χ", convention="p_prime",
            ),
            DepthZeroSC(
                "GSp4", "pi_alpha_eta2", "π_α(η2;χ)", "3", "alpha", "rho_pm", KF_SINGULAR, twist="χ",
            ),
            DepthZeroSC(
                "GSp4", "pi_S_theta_theta", "π_(S,θ⊠θ⊗χ)", "4", "alpha", "rho", F_SINGULAR, twist="χ",
            ),
        ),
        "Sp4": (
            DepthZeroSC("Sp4", "pi_S_theta_C2", "π_(S,θ), S of type C2", "1", "beta", "anisotropic_torus", REGULAR),
            DepthZeroSC(
                "Sp4", "pi_S_theta_A1xA1", "π_(S,θ), S of type A1×A1", "1", "beta", "isotropic_torus", REGULAR,
            ),
            DepthZeroSC("Sp4", "pi_beta_theta10", "π_β(θ10)", "2a", "beta", "theta10", KF_SINGULAR, count=ONE),
            DepthZeroSC("Sp4", "pi_gamma_theta10", "π_γ(θ10)", "2a", "gamma", "theta10", KF_SINGULAR, count=ONE),
            DepthZeroSC(
                "Sp4", "O2xU1", "cInd ρ, ρ ∈ E(Sp4, s), Z(s) = O2×U1", "2b", "beta", "O2xU1", NONSINGULAR,
                count=Q - 1,
            ),
            DepthZeroSC(
                "Sp4", "pi_alpha_plus_eta2", "π_α^+(η2)", "3", "alpha", "R_pm_theta0", KF_SINGULAR, count=ONE,
            ),
            DepthZeroSC(
                "Sp4", "pi_alpha_minus_eta2", "π_α^-(η2)", "3", "alpha", "R_pm_theta0", KF_SINGULAR, count=ONE,
            ),
            DepthZeroSC("Sp4", "pi_alpha_theta", "π_α(θ)", "4", "alpha", "RT_RT", F_SINGULAR),
        ),
    }


def enumerate_depth_zero(group: str) -> tuple[DepthZeroSC, ...]:
    return _depth_zero_table()[check_group(group)]


def depth_zero_rep(group: str, key: str) -> DepthZeroSC:
    for rep in enumerate_depth_zero(group):
        if rep.key == key:
            return rep
    known = ", ".join(r.key for r in enumerate_depth_zero(group))
    raise InvalidOperand(f"unknown depth-zero representation {key!r} for {group} (known: {known})")


def inducing_dimension(rep: DepthZeroSC) -> QHalf:
    cls = cuspidal_class(rep.quotient, rep.cuspidal)
    if cls.dimension is None:
        raise IncompleteData(f"dimension of the inducing cuspidal for {rep.name} is not tabulated")
    return cls.dimension * rep.fraction


def formal_degree_depth_zero(rep: DepthZeroSC) -> QHalf:
    """fdeg = dim(τ) · q^{dim 𝔾_x / 2} / |𝔾_x(F_q)|, med p′-ordningen när så anges."""
    quotient = finite_group(rep.quotient)
    order = group_order(quotient)
    if rep.convention == "p_prime":
        order, _ = prime_to_p_part(order)
    fdeg = inducing_dimension(rep) * qpow(Fraction(group_dimension(quotient), 2)) / order
    logger.debug("fdeg(%s) on %s = %s", rep.key, rep.group, fdeg.render())
    return fdeg


# ----------------------- Diskreta serien i de blandade paketen -----------------------
def formal_degree_delta_eta2() -> QHalf:
    """fdeg(δ([η2,νη2],χ)) som Steinbergmodulens grad i Heckealgebran för GL2×GL2/Gm.

    ½ · 1/(q²-1) · (q-1)/(q²-1) · q^{3/2}; ska vara lika med fdeg(π_α(η2;χ)).
    """
    q2m1 = Q * Q - ONE
    fdeg = QHalf.const(Fraction(1, 2)) * (Q - ONE) / (q2m1 * q2m1) * qpow(Fraction(3, 2))
    logger.debug("fdeg(delta_eta2) on GSp4 = %s", fdeg.render())
    return fdeg


DISCRETE_SERIES = {("GSp4", "delta_eta2"): ("δ([η2,νη2],χ)", formal_degree_delta_eta2)}


def representation_name(group: str, key: str) -> str:
    check_group(group)
    if (group, key) in DISCRETE_SERIES:
        return DISCRETE_SERIES[(group, key)][0]
    return depth_zero_rep(group, key).name


def formal_degree(group: str, key: str) -> QHalf:
    """Formell grad för en namngiven representation: djup noll eller diskret serie."""
    check_group(group)
    if (group, key) in DISCRETE_SERIES:
        return DISCRETE_SERIES[(group, key)][1]()
    return formal_degree_depth_zero(depth_zero_rep(group, key))


# ----------------------- Positivt djup -----------------------
@dataclass(frozen=True)
class CuspidalDatumSummary:
    dim_rho: QHalf
    index: QHalf                      # [G0_[y] : G0_{y,0+}]
    dim_g: int
    dim_g0: int                       # dim 𝔾0_{y,0}
    depths: tuple[Fraction, ...]      # r_0, ..., r_d
    root_counts: tuple[int, ...]      # |R_0|, ..., |R_d|


@dataclass(frozen=True)
class PositiveDepthDegree:
    coefficient: QHalf
    exponent: Fraction

    @property
    def value(self) -> Optional[QHalf]:
        """Hela graden som QHalf när exponenten är ett halvtal."""
        if (self.exponent * 2).denominator != 1:
            return None
        return self.coefficient * qpow(self.exponent)

    def render(self) -> str:
        e = self.exponent
        exp_text = f"q^{{{e.numerator}}}" if e.denominator == 1 else f"q^{{{e.numerator}/{e.denominator}}}"
        return f"{exp_text} * ({self.coefficient.render()})"


def _validate(datum: CuspidalDatumSummary) -> None:
    r, roots = [Fraction(x) for x in datum.depths], datum.root_counts
    if not r:
        raise InvalidDatum("a cuspidal datum needs at least one depth")
    if len(roots) != len(r):
        raise InvalidDatum("need one root count per twisted Levi")
    d = len(r) - 1
    if d == 0:
        if r[0] < 0:
            raise InvalidDatum("r_0 must be nonnegative")
    else:
        if r[0] <= 0:
            raise InvalidDatum("r_0 must be positive when d > 0")
        for i in range(d - 1):
            if not r[i] < r[i + 1]:
                raise InvalidDatum(f"depths must increase strictly: r_{i} = {r[i]}, r_{i + 1} = {r[i + 1]}")
        if not r[d - 1] <= r[d]:
            raise InvalidDatum("r_{d-1} <= r_d fails")
    if any(b < a for a, b in zip(roots, roots[1:])):
        raise InvalidDatum("root counts must be nondecreasing along the Levi sequence")
    if datum.dim_rho.is_zero or datum.index.is_zero:
        raise InvalidDatum("dim ρ and the index must be nonzero")


def formal_degree_positive_depth(datum: CuspidalDatumSummary) -> PositiveDepthDegree:
    _validate(datum)
    r = [Fraction(x) for x in datum.depths]
    jumps = sum(
        (r[i] * (datum.root_counts[i + 1] - datum.root_counts[i]) for i in range(len(r) - 1)),
        Fraction(0),
    )
    exponent = Fraction(datum.dim_g, 2) + Fraction(datum.dim_g0, 2) + jumps / 2
    out = PositiveDepthDegree(datum.dim_rho / datum.index, exponent)
    logger.debug("positive-depth fdeg exponent %s", exponent)
    return out


# ----------------------- Mallar -----------------------
@dataclass(frozen=True)
class TypeDatumTemplate:
    group: str
    index: int
    levi_sequence: tuple[str, ...]   # G^0 ⊂ G^1 ⊂ ... ⊂ G
    extensions: str                  # symbolisk beskrivning av kroppsutvidgningarna
    abelian_g0: bool
    singular_possible: bool
    discriminant_condition: Optional[str] = None
    notes: str = ""

    @property
    def dim_rho0(self) -> Optional[int]:
        return 1 if self.abelian_g0 else None

    @property
    def verdict(self) -> str:
        if not self.singular_possible:
            return "nonsingular"
        return f"singular iff {self.discriminant_condition}"


_DISC = "-c1*c2 ∈ Nm_{F1/F}(F1^×)"


@lru_cache(maxsize=None)
def _templates() -> dict[str, tuple[TypeDatumTemplate, ...]]:
    tower = "F1/F1#/F tower of quadratic extensions"
    split = "F1#/F quadratic"
    pair = "F1, F2/F quadratic"
    one = "F1/F quadratic"
    sp4 = (
        TypeDatumTemplate("Sp4", 1, ("T^(1)_{F1/F1#}", "G"), tower, True, False),
        TypeDatumTemplate("Sp4", 2, ("T^(1)_{F1#⊕F1#/F1#}", "G"), split, True, False),
        TypeDatumTemplate("Sp4", 3, ("T^(1)_{F1/F,F2/F}", "G"), pair, True, False),
        TypeDatumTemplate(
            "Sp4", 4, ("R^(1)_{F1/F}Gm × SL2", "G"), one, False, False,
            notes="R^(1)_{F1/F}Gm × SL2(F) has no singular supercuspidals",
        ),
        TypeDatumTemplate(
            "Sp4", 5, ("U_{F1/F}(c1,c2)", "G"), one, False, True, _DISC,
            notes="φ_0 = 1; singular supercuspidals exist iff U_{F1/F}(c1,c2) is quasi-split",
        ),
        TypeDatumTemplate("Sp4", 6, ("T^(1)_{F1/F,F2/F}", "R^(1)_{F1/F}Gm × SL2", "G"), pair, True, False),
        TypeDatumTemplate(
            "Sp4", 7, ("T^(1)_{F1/F,F1/F}", "U_{F1/F}(c1,c2)", "G"), one, True, False, notes="φ_1 = 1",
        ),
        TypeDatumTemplate("Sp4", 8, ("T^(1)_{F1#⊕F1#/F1#}", "GL2 × Sp0", "G"), split, True, False),
    )
    gsp4 = (
        TypeDatumTemplate("GSp4", 1, ("T_{F1/F1#}", "G"), tower, True, False),
        TypeDatumTemplate("GSp4", 2, ("T_{F1#⊕F1#/F1#}", "G"), split, True, False),
        TypeDatumTemplate("GSp4", 3, ("T_{F1/F,F2/F}", "G"), pair, True, False),
        TypeDatumTemplate(
            "GSp4", 4, ("{(x,y) ∈ R_{F1/F}Gm × GL2 : Nm x = det y}", "G"), one, False, False,
            notes="R_{F1/F}Gm × GL2(F) has no singular supercuspidals",
        ),
        TypeDatumTemplate(
            "GSp4", 5, ("GU_{F1/F}(c1,c2)", "G"), one, False, True, _DISC,
            notes="singular supercuspidals exist iff GU_{F1/F}(c1,c2) is quasi-split",
        ),
        TypeDatumTemplate(
            "GSp4", 6, ("T_{F1/F,F2/F}", "{(x,y) ∈ R_{F1/F}Gm × GL2 : Nm x = det y}", "G"), pair, True, False,
        ),
        TypeDatumTemplate("GSp4", 7, ("T_{F1/F,F1/F}", "GU_{F1/F}(2)", "G"), one, True, False),
        TypeDatumTemplate("GSp4", 8, ("T^(1)_{F1#⊕F1#/F1#}", "GL2 × GSp0", "G"), split, True, False),
    )
    return {"Sp4": sp4, "GSp4": gsp4}


def enumerate_type_templates(group: str) -> tuple[TypeDatumTemplate, ...]:
    return _templates()[check_group(group)]


def template_ok(t: TypeDatumTemplate) -> bool:
    """Sekvensen växer strikt och slutar i G; bara icke-abelska G^0 kan bära singulära."""
    seq = t.levi_sequence
    if len(set(seq)) != len(seq) or seq[-1] != "G":
        return False
    if t.singular_possible and (t.abelian_g0 or t.discriminant_condition is None):
        return False
    return True


@dataclass(frozen=True)
class ToriClassTemplate:
    group: str
    key: str
    torus: str
    equation: str
    sharp_degrees: tuple[int, ...]   # [F_i^# : F]
    parameters: tuple[str, ...] = field(default_factory=tuple)  # c_i modulo normer
    subtori: str = ""

    @property
    def rank(self) -> int:
        return sum(self.sharp_degrees)


@lru_cache(maxsize=None)
def _tori() -> dict[str, tuple[ToriClassTemplate, ...]]:
    return {
        "Sp4": (
            ToriClassTemplate(
                "Sp4", "F1/F,F2/F", "T^(1)_{F1/F,F2/F}(c1,c2)", "R^(1)_{F1/F}Gm × R^(1)_{F2/F}Gm", (1, 1),
                ("c1 ∈ F^×/N(F1^×)", "c2 ∈ F^×/N(F2^×)"),
                "centralizers R^(1)Gm × SL2, SL2 × R^(1)Gm; U_{F1/F}(c1,c2) when F1 = F2",
            ),
            ToriClassTemplate(
                "Sp4", "F1#+F1#/F1#", "T^(1)_{F1#⊕F1#/F1#}", "{(x,y) ∈ R_{F1#/F}Gm² : xy = 1}", (2,),
                (), "centralizer GL2 × Sp0",
            ),
            ToriClassTemplate(
                "Sp4", "F1/F1#", "T^(1)_{F1/F1#}(c)", "R_{F1#/F} R^(1)_{F1/F1#} Gm", (2,),
                ("c ∈ F1#^×/N(F1^×)",), "no nontrivial F-rational subtori",
            ),
        ),
        "GSp4": (
            ToriClassTemplate(
                "GSp4", "F1/F,F2/F", "T_{F1/F,F2/F}(c1,c2)",
                "{(x,y) ∈ R_{F1/F}Gm × R_{F2/F}Gm : Nm x = Nm y}", (1, 1),
                ("c1 ∈ F^×/N(F1^×)", "c2 ∈ F^×/N(F2^×)"),
                "centralizer {(x,y) : Nm x = det y}; GU_{F1/F}(2) when F1 = F2",
            ),
            ToriClassTemplate(
                "GSp4", "F1#+F1#/F1#", "T_{F1#⊕F1#/F1#}", "{(x,y) ∈ R_{F1#/F}Gm² : xy ∈ F^×}", (2,),
            ),
            ToriClassTemplate(
                "GSp4", "F1/F1#", "T_{F1/F1#}(c)", "{x ∈ R_{F1/F}Gm : Nm_{F1/F1#} x ∈ F^×}", (2,),
                ("c ∈ F1#^×/N(F1^×)",),
            ),
        ),
    }


def enumerate_tori(group: str) -> tuple[ToriClassTemplate, ...]:
    return _tori()[check_group(group)]


def depth_zero_table(group: str, q0: Optional[int] = None) -> list[dict]:
    """Familjerna som JSON-vänliga poster, med formell grad när den finns."""
    out = []
    for rep in enumerate_depth_zero(group):
        row = {
            "key": rep.key,
            "name": rep.name,
            "family": rep.family,
            "vertex": rep.vertex,
            "quotient": rep.quotient,
            "singularity": rep.singularity,
            "expected_packet": rep.expected_packet,
        }
        try:
            fdeg = formal_degree_depth_zero(rep)
            row["fdeg"] = factor(fdeg).pretty()
            if q0 is not None:
                row["fdeg_at_q0"] = qh_eval(fdeg, q0).render()
        except IncompleteData as e:
            row["fdeg"] = None
            row["fdeg_error"] = e.code
        out.append(row)
    return out
