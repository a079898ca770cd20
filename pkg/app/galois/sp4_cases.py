# app/galois/sp4_cases.py
"""L-parametrar W_F × SL2(ℂ) → SO5(ℂ), dvs L-paket för Sp4(F).

U är femdimensionell med invariant symmetrisk form och trivial determinant.
Fallen väljs efter dimensionerna hos de irreducibla summanderna och sedan
efter relationerna mellan karaktärerna. Förstärkningarna räknas upp i den
ordning som enhancements() ger; medlemmarna kommer i samma ordning.
"""
from __future__ import annotations

import logging
from fractions import Fraction

from ..characters import LabelGroup, SmoothChar, SupercuspidalLabel
from ..errors import MalformedDescriptor, Unsupported
from ..induction.reducibility import decide_reducibility
from ..induction.types import InducedRep, J, tw
from ..rootdata import nilpotent_orbits
from .descriptor import NONTRIVIAL, TRIVIAL, Block, CaseResult, PacketMember, Resolved, enhancements
from .members import (
    HALF,
    block_jordan,
    constituent_member,
    jordan,
    pick_tag,
    rendered,
    sc_family,
    sc_member,
    split_members,
)
from .springer import pair_text

logger = logging.getLogger("llc.galois")

GROUP = "Sp4"
SIEGEL_DUAL = "GL2×SO1"
KLINGEN_DUAL = "GL1×SO3"


# ----------------------- Hjälpare -----------------------
def _quadratic(c: SmoothChar) -> bool:
    return (c * c).is_trivial


def _order_two(c: SmoothChar) -> bool:
    return _quadratic(c) and not c.is_trivial


def _canon(c: SmoothChar) -> SmoothChar:
    """Representant för {χ, χ^{-1}} med e(χ) ≥ 0."""
    return max(c, c.inverse(), key=lambda x: (x.nu_exp, x.tame))


def _need_sl2(r: Resolved, *allowed: str) -> None:
    if r.sl2 not in allowed:
        raise MalformedDescriptor(
            f"sl2 restriction {r.sl2!r} does not fit this parameter (allowed: {', '.join(allowed)})"
        )


def _need_kind(block: Block, kind: str) -> None:
    if block.kind != kind:
        raise MalformedDescriptor(f"summand {block.tag} must be {kind}, got {block.kind}")


def _need_quadratic(c: SmoothChar) -> None:
    if not _quadratic(c):
        raise MalformedDescriptor(f"{c.render()} must be quadratic here")


def _torus(a: SmoothChar, b: SmoothChar) -> InducedRep:
    return InducedRep(group=GROUP, levi="T", chi1=a, chi2=b)


# Langlandskvoten när φ|SL2 är trivial och χ1 × χ2 ⋊ 1 är reducibel
TRIVIAL_SL2_QUOTIENT = {
    "1biii": "one_Sp4",
    "1bi": "one_GL2",
    "1bii": "one_Sp2",
    "1ci": "J_nu_1",
    "1cii": "one_Sp2",
    "1ciii": "one_GL2",
}


def _quotient_member(a: SmoothChar, b: SmoothChar, springer: str | None = None) -> PacketMember:
    rep = _torus(a, b)
    tag = pick_tag(decide_reducibility(rep), TRIVIAL_SL2_QUOTIENT)
    return constituent_member(rep, tag, "T", springer=springer)


def _klingen(chi: SmoothChar, ref: str, r: Resolved, trivial_on: tuple[SmoothChar, ...] = ()) -> InducedRep:
    rho = SupercuspidalLabel(group="Sp2", ref=ref, central_char=r.labels.one(), fsigma_trivial=trivial_on)
    return InducedRep(group=GROUP, levi="klingen", chi=chi, rho=rho)


def _siegel(block: Block, r: Resolved, beta: Fraction = Fraction(0), self_dual: bool = True) -> InducedRep:
    sigma = SupercuspidalLabel(group="GL2", ref=f"π_{block.tag}", central_char=r.labels.one(),
                               self_dual=self_dual)
    return InducedRep(group=GROUP, levi="siegel", sigma=sigma, beta=beta)


def principal_pair_labels(chi: SmoothChar) -> tuple[str, str]:
    """De två Sp4-konstituenterna av δ([χ, νχ], 1)|_Sp4."""
    name = chi.render()
    return f"π1({name})", f"π2({name})"


def mixed_partners(labels: LabelGroup, chi: SmoothChar) -> tuple[tuple[str, str], tuple[str, str]]:
    """Superkuspidala partner (etikett, djup-noll-nyckel) i det blandade O4-paketet."""
    eta, eta2, eta2p = labels.order_two_characters()
    if chi == eta:
        return ("π_β(θ10)", "pi_beta_theta10"), ("π_γ(θ10)", "pi_gamma_theta10")
    if chi in (eta2, eta2p):
        name = chi.render()
        return (f"π_α^+({name})", "pi_alpha_plus_eta2"), (f"π_α^-({name})", "pi_alpha_minus_eta2")
    raise Unsupported(f"no depth-zero partners are recorded for the quadratic character {chi.render()}")


# ----------------------- Irreducibel U och U = V ⊕ χ -----------------------
def _case_1(r: Resolved) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    (v,) = r.blocks
    _need_kind(v, "orthogonal")
    return CaseResult("1", "1", "1", 0, True, sc_family(GROUP, v.tag, enhancements(0)), rendered(v.tag))


def _case_2(r: Resolved) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    (v,), (chi,) = r.blocks, r.chars
    _need_kind(v, "orthogonal")
    _need_quadratic(chi)
    members = sc_family(GROUP, f"{v.tag}⊕{chi.render()}", enhancements(1))
    return CaseResult("2", "μ2", "μ2", 1, True, members, rendered(v.tag, chi))


def _case_3(r: Resolved) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    v3, v2 = sorted(r.blocks, key=lambda b: -b.dim)
    _need_kind(v3, "orthogonal")
    _need_kind(v2, "orthogonal")
    members = sc_family(GROUP, f"{v3.tag}⊕{v2.tag}", enhancements(1))
    return CaseResult("3", "μ2", "μ2", 1, True, members, rendered(v3.tag, v2.tag))


# ----------------------- U = V3 ⊕ χ1 ⊕ χ2 -----------------------
def _case_4(r: Resolved) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    (v,) = r.blocks
    _need_kind(v, "orthogonal")
    a, b = r.chars
    inf = rendered(v.tag, a, b)
    ref = f"π_{v.tag}"
    if a == b:
        _need_quadratic(a)
        members = split_members(_klingen(a, ref, r), enhancements(1), KLINGEN_DUAL)
        return CaseResult("4a", "O2", "μ2", 1, False, members, inf)
    if _quadratic(a) and _quadratic(b):
        members = sc_family(GROUP, f"{v.tag}⊕{a.render()}⊕{b.render()}", enhancements(2))
        return CaseResult("4b", "μ2^2", "μ2^2", 2, True, members, inf)
    if a == b.inverse():
        member = constituent_member(_klingen(_canon(a), ref, r), None, KLINGEN_DUAL)
        return CaseResult("4c", "ℂ^×", "1", 0, False, (member,), inf)
    raise MalformedDescriptor(f"{a.render()} ⊕ {b.render()} is not orthogonal next to {v.tag}")


# ----------------------- U = V2 ⊕ V2' ⊕ χ -----------------------
def _case_5(r: Resolved) -> CaseResult:
    v1, v2 = r.blocks
    (chi,) = r.chars
    _need_quadratic(chi)
    inf = rendered(v1.tag, v2.tag, chi)
    if v1.tag == v2.tag and v1.kind == "orthogonal":
        _need_sl2(r, TRIVIAL)
        members = sc_family(GROUP, f"{v1.tag}⊕{v1.tag}⊕{chi.render()}", enhancements(0))
        return CaseResult("5a", "ℂ^×", "1", 0, False, members, inf)
    if v1.tag == v2.tag and v1.kind == "symplectic":
        if not chi.is_trivial:
            raise MalformedDescriptor("V ⊗ std with V symplectic needs the trivial character beside it")
        return _case_5b(r, v1)
    if v1.dual_of == v2.tag or v2.dual_of == v1.tag:
        _need_sl2(r, TRIVIAL)
        member = constituent_member(_siegel(v1, r, self_dual=False), None, SIEGEL_DUAL)
        return CaseResult("5d", "ℂ^×", "1", 0, False, (member,), inf)
    if v1.kind == v2.kind == "orthogonal":
        _need_sl2(r, TRIVIAL)
        members = sc_family(GROUP, f"{v1.tag}⊕{v2.tag}⊕{chi.render()}", enhancements(2))
        return CaseResult("5c", "μ2^2", "μ2^2", 2, True, members, inf)
    raise MalformedDescriptor(f"{v1.tag} ⊕ {v2.tag} is neither orthogonal nor a dual pair")


def _case_5b(r: Resolved, v: Block) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    if r.sl2 == TRIVIAL:
        member = constituent_member(_siegel(v, r), None, SIEGEL_DUAL, springer=pair_text("SL2", "[1^2]"))
        return CaseResult("5b", "Sp2", "1", 0, False, (member,), rendered(v.tag, v.tag, "1"),
                          springer_table="SL2")
    plus, minus = enhancements(1)
    delta = constituent_member(_siegel(v, r, HALF), "delta", SIEGEL_DUAL, plus, pair_text("SL2", "[2]"))
    cusp = pair_text("SL2", "[2]", "-1")
    if v.depth == 0:
        sc = sc_member(GROUP, f"π_α({v.tag})", minus, key="pi_alpha_theta", springer=cusp)
    else:
        sc = sc_member(GROUP, f"π_χ({v.tag})", minus, springer=cusp)
    return CaseResult("5b", "Sp2", "μ2", 1, True, (delta, sc), rendered(block_jordan(v.tag, 2), "1"),
                      springer_table="SL2")


# ----------------------- U = V2 ⊕ χ1 ⊕ χ2 ⊕ χ3 -----------------------
def _sp2_refs(v: Block, chi: SmoothChar) -> tuple[str, str]:
    """L-paketet {σ1, σ2} för Sp2 med parameter V ⊕ χ."""
    base = f"{v.tag}⊕{chi.render()}"
    return f"π_1({base})", f"π_2({base})"


def _case_6(r: Resolved) -> CaseResult:
    (v,) = r.blocks
    _need_kind(v, "orthogonal")
    x, y, z = r.chars
    chars = [x, y, z]
    if x == y == z:
        if not _order_two(x):
            raise MalformedDescriptor(f"{x.render()} must have order two")
        return _case_6a(r, v, x)
    quad = [c for c in chars if _quadratic(c)]
    if len(quad) == 3:
        _need_sl2(r, TRIVIAL)
        inf = rendered(v.tag, *chars)
        if len(set(chars)) == 2:
            p = next(c for c in chars if chars.count(c) == 2)
            q = next(c for c in chars if c != p)
            return _case_6b(r, v, p, q, inf)
        members = sc_family(GROUP, f"{v.tag}⊕{x.render()}⊕{y.render()}⊕{z.render()}", enhancements(3))
        return CaseResult("6c", "μ2×S(μ2^3)", "μ2^3", 3, True, members, inf)
    if len(quad) == 1:
        _need_sl2(r, TRIVIAL)
        i = next(k for k, c in enumerate(chars) if _quadratic(c))
        c1 = chars[i]
        c2, c3 = chars[:i] + chars[i + 1:]
        if c2 == c3.inverse():
            signs = enhancements(1)
            members = tuple(
                constituent_member(_klingen(_canon(c2), ref, r, (c1,)), None, KLINGEN_DUAL, s)
                for ref, s in zip(_sp2_refs(v, c1), signs)
            )
            return CaseResult("6d", "μ2×ℂ^×", "μ2", 1, False, members, rendered(v.tag, *chars))
    raise MalformedDescriptor(f"the characters beside {v.tag} do not form an orthogonal summand")


def _case_6a(r: Resolved, v: Block, x: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    signs = enhancements(1)
    refs = _sp2_refs(v, x)
    if r.sl2 == TRIVIAL:
        springer = pair_text("SO3", "[1^2]")
        members = tuple(
            constituent_member(_klingen(x, ref, r, (x,)), None, KLINGEN_DUAL, s, springer)
            for ref, s in zip(refs, signs)
        )
        return CaseResult("6a", "SO3×μ2", "μ2", 1, False, members, rendered(v.tag, x, x, x),
                          springer_table="SO3")
    springer = pair_text("SO3", "[2]")
    members = tuple(
        constituent_member(_klingen(x.twist(1), ref, r, (x,)), "delta", KLINGEN_DUAL, s, springer)
        for ref, s in zip(refs, signs)
    )
    return CaseResult("6a", "SO3×μ2", "μ2", 1, True, members, rendered(v.tag, jordan(x, 3)),
                      springer_table="SO3")


def _case_6b(r: Resolved, v: Block, p: SmoothChar, q: SmoothChar, inf: tuple[str, ...]) -> CaseResult:
    signs = enhancements(2)
    members: list[PacketMember] = []
    for i, ref in enumerate(_sp2_refs(v, q)):
        members.extend(split_members(_klingen(p, ref, r), signs[2 * i:2 * i + 2], KLINGEN_DUAL))
    return CaseResult("6b", "μ2×S(O2×μ2)", "μ2^2", 2, False, tuple(members), inf)


# ----------------------- U = 1 ⊕ χ1^{±1} ⊕ χ2^{±1} -----------------------
_B2_OF_C2 = {o.c2_partition: o.b2_partition for o in nilpotent_orbits()}


def _pairs(r: Resolved) -> tuple[SmoothChar, SmoothChar]:
    rest = list(r.chars)
    one = next((c for c in rest if c.is_trivial), None)
    if one is None:
        raise MalformedDescriptor("a sum of five characters in SO5 needs a trivial summand")
    rest.remove(one)
    a = rest.pop(0)
    if a.inverse() not in rest:
        raise MalformedDescriptor(f"{a.render()} appears without its inverse")
    rest.remove(a.inverse())
    b, c = rest
    if b != c.inverse():
        raise MalformedDescriptor(f"{b.render()} and {c.render()} are not mutually inverse")
    c1, c2 = _canon(a), _canon(b)
    if c1.is_trivial:
        c1, c2 = c2, c1
    return c1, c2


def _case_7(r: Resolved) -> CaseResult:
    c1, c2 = _pairs(r)
    if c1.is_trivial:
        return _case_7a(r)
    if c1 == c2:
        return _case_7b(r, c1) if _order_two(c1) else _case_7f(r, c1)
    if c2.is_trivial:
        return _case_7c(r, c1) if _order_two(c1) else _case_7d(r, c1)
    if _order_two(c1) and _order_two(c2):
        return _case_7e(r, c1, c2)
    return _case_7g(r, c1, c2)


def _case_7a(r: Resolved) -> CaseResult:
    part = _B2_OF_C2.get(r.sl2, r.sl2)
    part = {TRIVIAL: "[1^5]", NONTRIVIAL: "[5]"}.get(part, part)
    nu, one = r.labels.nu, r.labels.one()
    if part == "[5]":
        member = constituent_member(_torus(nu(2), nu(1)), "St_Sp4", "T", springer=pair_text("SO5", "[5]"))
        return CaseResult("7a", "SO5", "1", 0, True, (member,), rendered(jordan(one, 5)), springer_table="SO5")
    if part == "[3,1^2]":
        rep = _torus(nu(1), one)
        plus, minus = enhancements(1)
        members = (
            constituent_member(rep, "tau_prime", "T", plus, pair_text("SO5", "[3,1^2]", "1")),
            constituent_member(rep, "tau", "T", minus, pair_text("SO5", "[3,1^2]", "-1")),
        )
        return CaseResult("7a", "SO5", "μ2", 1, False, members, rendered(jordan(one, 3), one, one),
                          springer_table="SO5")
    if part == "[2^2,1]":
        member = constituent_member(_torus(nu(HALF), nu(-HALF)), "St_GL2", "T",
                                    springer=pair_text("SO5", "[2^2,1]"))
        return CaseResult("7a", "SO5", "1", 0, False, (member,), rendered(jordan(one, 2), jordan(one, 2), one),
                          springer_table="SO5")
    if part == "[1^5]":
        member = constituent_member(_torus(one, one), None, "T", springer=pair_text("SO5", "[1^5]"))
        return CaseResult("7a", "SO5", "1", 0, False, (member,), rendered(*(one,) * 5), springer_table="SO5")
    raise MalformedDescriptor(f"{r.sl2!r} is not a unipotent class of SO5")


def _case_7b(r: Resolved, chi: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, "first", "diagonal")
    one = r.labels.one()
    if r.sl2 == TRIVIAL:
        springers = (pair_text("O4", "00", "1"), pair_text("O4", "00", "-1"))
        rep = _torus(chi, chi)
        members = split_members(rep, enhancements(1), "T", springers)
        return CaseResult("7b", "O4", "μ2", 1, False, members, rendered(chi, chi, chi, chi, one),
                          springer_table="O4", flags=tuple(decide_reducibility(rep).flags))
    if r.sl2 == "first":
        member = constituent_member(_torus(chi.twist(HALF), chi.twist(-HALF)), "St_GL2", "T",
                                    springer=pair_text("O4", "0e"))
        return CaseResult("7b", "O4", "1", 0, False, (member,), rendered(jordan(chi, 2), jordan(chi, 2), one),
                          springer_table="O4")
    signs = enhancements(2)
    rep = _torus(chi.twist(1), chi)
    principal = tuple(
        constituent_member(rep, "St_GL2", "T", s, pair_text("O4", "ee", ls), label=label, square_integrable=True)
        for label, s, ls in zip(principal_pair_labels(chi), signs[:2], ("(1,1)", "(1,-1)"))
    )
    cuspidal = tuple(
        sc_member(GROUP, label, s, key=key, springer=pair_text("O4", "ee", ls))
        for (label, key), s, ls in zip(mixed_partners(r.labels, chi), signs[2:], ("(-1,1)", "(-1,-1)"))
    )
    logger.info("Mixed O4 packet for %s: two principal and two supercuspidal members", chi.render())
    return CaseResult("7b", "O4", "μ2^2", 2, True, principal + cuspidal, rendered(jordan(chi, 3), chi, one),
                      springer_table="O4")


def _case_7c(r: Resolved, chi: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    one = r.labels.one()
    if r.sl2 == TRIVIAL:
        springer = pair_text("SO3", "[1^2]")
        rep = _torus(one, chi)
        inf = rendered(one, one, one, chi, chi)
    else:
        springer = pair_text("SO3", "[2]")
        rep = _torus(r.labels.nu(HALF), chi)
        inf = rendered(jordan(one, 2), chi, chi, one)
    members = split_members(rep, enhancements(1), "T", (springer, springer))
    return CaseResult("7c", "SO3×O2", "μ2", 1, False, members, inf, springer_table="SO3")


def _case_7d(r: Resolved, chi: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    one = r.labels.one()
    if r.sl2 == TRIVIAL:
        member = _quotient_member(chi, one, springer=pair_text("SO3", "[1^2]"))
        inf = rendered(chi, chi.inverse(), one, one, one)
    else:
        member = constituent_member(_torus(chi, r.labels.nu(HALF)), None, "T", springer=pair_text("SO3", "[2]"))
        inf = rendered(chi, chi.inverse(), jordan(one, 2), one)
    return CaseResult("7d", "SO3×SO2", "1", 0, False, (member,), inf, springer_table="SO3")


def _case_7e(r: Resolved, c1: SmoothChar, c2: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    rep = _torus(c1, c2)
    report = decide_reducibility(rep)
    signs = iter(enhancements(2))
    members = [
        constituent_member(rep, piece.tag, "T", next(signs), label=f"π^{{{mark}}}({piece.label})")
        for piece in report.constituents
        for mark in ("+", "-")
    ]
    if len(members) != 4:
        raise Unsupported(f"{report.inducing} does not split into four pieces")
    return CaseResult("7e", "O2^2", "μ2^2", 2, False, tuple(members), rendered(c1, c1, c2, c2, r.labels.one()),
                      flags=tuple(report.flags))


def _case_7f(r: Resolved, chi: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    one = r.labels.one()
    if r.sl2 == TRIVIAL:
        member = _quotient_member(chi, chi)
        inf = rendered(chi, chi, chi.inverse(), chi.inverse(), one)
        return CaseResult("7f", "GL2", "1", 0, False, (member,), inf)
    rep = _torus(chi.twist(HALF), chi.twist(-HALF))
    report = decide_reducibility(rep)
    tag = pick_tag(report, {"1bi": "St_GL2", "1biii": "J_St_GL2", "1ci": "J_St_GL2", "1biv": "St_GL2"})
    if report.case == "1biv":
        # halvan av längd tre; parametern pekar ut dess Langlandskvot
        label = J(tw(chi.unitary.twist(HALF), "St_GL2"), tail="1")
        member = constituent_member(rep, tag, "T", label=label, generic=False)
    else:
        member = constituent_member(rep, tag, "T")
    inf = rendered(jordan(chi, 2), jordan(chi.inverse(), 2), one)
    return CaseResult("7f", "GL2", "1", 0, False, (member,), inf)


def _case_7g(r: Resolved, c1: SmoothChar, c2: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    member = _quotient_member(c1, c2)
    inf = rendered(c1, c1.inverse(), c2, c2.inverse(), r.labels.one())
    return CaseResult("7g", "ℂ^××ℂ^×", "1", 0, False, (member,), inf)


_BY_SHAPE = {
    (5,): _case_1,
    (4,): _case_2,
    (3, 2): _case_3,
    (3,): _case_4,
    (2, 2): _case_5,
    (2,): _case_6,
    (): _case_7,
}


def classify_sp4(r: Resolved) -> CaseResult:
    handler = _BY_SHAPE.get(r.block_dims)
    if handler is None:
        raise MalformedDescriptor(f"no SO5 parameter has irreducible summands of dimensions {list(r.block_dims)}")
    result = handler(r)
    logger.debug("Sp4 parameter matched case %s (S_phi rank %d)", result.case, result.s_rank)
    return result
