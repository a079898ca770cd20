# app/galois/gsp4_cases.py
"""L-parametrar W_F × SL2(ℂ) → GSp4(ℂ), dvs L-paket för GSp4(F).

U är fyrdimensionell med en symplektisk form U ⊗ U → ξ. Fallen följer
partitionen av U i irreducibla summander. Medlemmar som delar sig vid
restriktion till Sp4 bär sina Sp4-konstituenter i `restriction` när de
är kända.
"""
from __future__ import annotations

import logging
from fractions import Fraction

from ..characters import SmoothChar, SupercuspidalLabel, e_of
from ..errors import MalformedDescriptor, Unsupported
from ..induction.reducibility import decide_reducibility
from ..induction.types import InducedRep, fmt, rtimes, twist_nu
from ..rootdata import nilpotent_orbits
from .descriptor import NONTRIVIAL, TRIVIAL, Block, CaseResult, Resolved, enhancements
from .members import (
    HALF,
    constituent_member,
    jordan,
    pick_tag,
    rendered,
    sc_family,
    sc_member,
    split_members,
    textual_member,
)
from .sp4_cases import mixed_partners, principal_pair_labels
from .springer import pair_text

logger = logging.getLogger("llc.galois")

GROUP = "GSp4"
SIEGEL, SIEGEL_DUAL = "GL2×GSp0", "GL1×GSp2"
KLINGEN, KLINGEN_DUAL = "GL1×GSp2", "GL2×GSp0"

_C2_PARTS = {o.c2_partition for o in nilpotent_orbits()}


def _key(c: SmoothChar) -> tuple:
    return (c.nu_exp, c.tame)


def _need_sl2(r: Resolved, *allowed: str) -> None:
    if r.sl2 not in allowed:
        raise MalformedDescriptor(
            f"sl2 restriction {r.sl2!r} does not fit this parameter (allowed: {', '.join(allowed)})"
        )


def _torus(a: SmoothChar, b: SmoothChar, t: SmoothChar) -> InducedRep:
    return InducedRep(group=GROUP, levi="T", chi1=a, chi2=b, theta=t)


# ----------------------- U irreducibel -----------------------
def _case_1(r: Resolved) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    (v,) = r.blocks
    if v.kind != "symplectic":
        raise MalformedDescriptor(f"an irreducible {v.tag} must carry the symplectic form")
    return CaseResult("1", "ℂ^×", "1", 0, True, sc_family(GROUP, v.tag, enhancements(0)), rendered(v.tag))


# ----------------------- U = V1 ⊕ V2 -----------------------
def _case_2(r: Resolved) -> CaseResult:
    v1, v2 = r.blocks
    xi = r.xi
    inf = rendered(v1.tag, v2.tag)
    if v1.tag == v2.tag and v1.kind == "symplectic":
        _need_sl2(r, TRIVIAL)
        rho = SupercuspidalLabel(group="GSp2", ref=f"π_{v1.tag}^∨", central_char=xi.inverse())
        rep = InducedRep(group=GROUP, levi="klingen", chi=r.labels.one(), rho=rho)
        members = split_members(rep, enhancements(1), KLINGEN_DUAL)
        return CaseResult("2a", "GO2", "μ2", 1, False, members, inf)
    if v1.tag == v2.tag and v1.kind == "orthogonal":
        return _case_2b(r, v1)
    if v1.tag != v2.tag:
        _need_sl2(r, TRIVIAL)
        label = rtimes("1", f"π_{v1.tag}^∨")
        member = textual_member("intermediate series", label, KLINGEN, KLINGEN_DUAL, tempered=r.bounded)
        return CaseResult("2c", "ℂ^××ℂ^×", "1", 0, False, (member,), inf)
    raise MalformedDescriptor(f"{v1.tag} ⊕ {v2.tag} carries no symplectic form")


def _case_2b(r: Resolved, v: Block) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    xi = r.xi
    beta = e_of(xi)
    ref = f"π_{v.tag}"
    if r.sl2 == TRIVIAL:
        base = rtimes(ref, fmt(xi.inverse()))
        label = f"τ({base})" if abs(beta) == 1 else base
        member = textual_member("intermediate series", label, SIEGEL, SIEGEL_DUAL,
                                tempered=beta == 0, induced_from=base)
        return CaseResult("2b", "GL2", "1", 0, False, (member,), rendered(v.tag, v.tag))
    base = rtimes(twist_nu(HALF, ref), fmt(xi.inverse().twist(-1)))
    member = textual_member("intermediate series", f"τ({base})", SIEGEL, SIEGEL_DUAL,
                            square_integrable=True, induced_from=base)
    inf = rendered(f"nu^{{1/2}}·{v.tag}", f"nu^{{-1/2}}·{v.tag}")
    return CaseResult("2b", "ℂ^×", "1", 0, True, (member,), inf)


# ----------------------- U = V ⊕ χ1 ⊕ χ2 -----------------------
def _case_3(r: Resolved) -> CaseResult:
    (v,) = r.blocks
    if v.kind != "symplectic":
        raise MalformedDescriptor(f"{v.tag} must carry the symplectic form")
    a, b = sorted(r.chars, key=_key, reverse=True)
    if a * b != r.xi:
        raise MalformedDescriptor(f"{a.render()}·{b.render()} must equal the similitude character")
    if a == b:
        return _case_3a(r, v, a)
    _need_sl2(r, TRIVIAL)
    base = rtimes(f"({fmt(a)}⊗π_{v.tag}^∨)", fmt(a.inverse()))
    beta = e_of(a * b.inverse())
    label = f"L({base})" if abs(beta) == 1 else base
    member = textual_member("intermediate series", label, SIEGEL, SIEGEL_DUAL, tempered=beta == 0,
                            induced_from=base)
    return CaseResult("3b", "ℂ^××ℂ^×", "1", 0, False, (member,), rendered(v.tag, a, b))


def _case_3a(r: Resolved, v: Block, c: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    one = r.labels.one()
    if r.sl2 == TRIVIAL:
        sigma = SupercuspidalLabel(group="GL2", ref=f"({fmt(c)}⊗π_{v.tag}^∨)", central_char=one)
        rep = InducedRep(group=GROUP, levi="siegel", sigma=sigma, chi=c.inverse())
        member = constituent_member(rep, None, SIEGEL_DUAL, springer=pair_text("SL2", "[1^2]"))
        return CaseResult("3a", "ℂ^××SL2", "1", 0, False, (member,), rendered(v.tag, c, c), springer_table="SL2")
    plus, minus = enhancements(1)
    sigma = SupercuspidalLabel(group="GL2", ref=f"π_u({v.tag})", central_char=one, self_dual=True)
    rep = InducedRep(group=GROUP, levi="siegel", sigma=sigma, beta=HALF, chi=c.inverse().twist(-HALF))
    delta = constituent_member(rep, "delta", SIEGEL_DUAL, plus, pair_text("SL2", "[2]"))
    cusp = pair_text("SL2", "[2]", "-1")
    twist = fmt(c.inverse())
    if v.depth == 0:
        sc = sc_member(GROUP, f"π_(S,θ⊠θ⊗{twist})", minus, key="pi_S_theta_theta", springer=cusp)
    else:
        sc = sc_member(GROUP, f"π(π_u({v.tag}))⊗{twist}", minus, springer=cusp)
    return CaseResult("3a", "ℂ^××SL2", "μ2", 1, True, (delta, sc), rendered(jordan(c, 2), v.tag),
                      springer_table="SL2")


# ----------------------- U = χ1 ⊕ χ2 ⊕ χ3 ⊕ χ4 -----------------------
def _case_4(r: Resolved) -> CaseResult:
    xi = r.xi
    chars = sorted(r.chars, key=_key, reverse=True)
    distinct: list[SmoothChar] = []
    for c in chars:
        if c not in distinct:
            distinct.append(c)
    counts = [chars.count(c) for c in distinct]
    if len(distinct) == 1:
        c = distinct[0]
        if c * c != xi:
            raise MalformedDescriptor(f"{c.render()}^2 must equal the similitude character")
        return _case_4a(r, c)
    if counts == [2, 2]:
        p, q = distinct
        if p * p == xi and q * q == xi:
            return _case_4b(r, p, q)
        if p * q == xi:
            return _case_4c(r, p, q)
    elif len(distinct) == 3 and 2 in counts:
        p = distinct[counts.index(2)]
        c, d = [x for x in distinct if x != p]
        if p * p == xi and c * d == xi:
            return _case_4d(r, p, c, d)
    elif len(distinct) == 4:
        first = chars[0]
        partner = xi * first.inverse()
        if partner in chars[1:]:
            rest = [x for x in chars[1:] if x != partner]
            if rest[0] * rest[1] == xi:
                return _case_4e(r, first, rest[0], rest[1], partner)
    raise MalformedDescriptor("the characters do not pair up under the similitude character")


def _case_4a(r: Resolved, c: SmoothChar) -> CaseResult:
    part = {TRIVIAL: "[1^4]", NONTRIVIAL: "[4]"}.get(r.sl2, r.sl2)
    if part not in _C2_PARTS:
        raise MalformedDescriptor(f"{r.sl2!r} is not a unipotent class of GSp4")
    nu, one = r.labels.nu, r.labels.one()
    ci = c.inverse()
    if part == "[4]":
        member = constituent_member(_torus(nu(2), nu(1), ci.twist(Fraction(-3, 2))), "St_GSp4", "T",
                                    springer=pair_text("GSp4", "[4]"))
        return CaseResult("4a", "GSp4", "1", 0, True, (member,), rendered(jordan(c, 4)), springer_table="GSp4")
    if part == "[2^2]":
        rep = _torus(nu(1), one, ci.twist(-HALF))
        plus, minus = enhancements(1)
        members = (
            constituent_member(rep, "tau_S", "T", plus, pair_text("GSp4", "[2^2]", "1")),
            constituent_member(rep, "tau_T", "T", minus, pair_text("GSp4", "[2^2]", "-1")),
        )
        return CaseResult("4a", "GSp4", "μ2", 1, False, members, rendered(jordan(c, 2), jordan(c, 2)),
                          springer_table="GSp4")
    if part == "[2,1^2]":
        member = constituent_member(_torus(nu(HALF), nu(-HALF), ci), "St_GL2", "T",
                                    springer=pair_text("GSp4", "[2,1^2]"))
        return CaseResult("4a", "GSp4", "1", 0, False, (member,), rendered(jordan(c, 2), c, c),
                          springer_table="GSp4")
    member = constituent_member(_torus(one, one, ci), None, "T", springer=pair_text("GSp4", "[1^4]"))
    return CaseResult("4a", "GSp4", "1", 0, False, (member,), rendered(c, c, c, c), springer_table="GSp4")


def _case_4b(r: Resolved, p: SmoothChar, q: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, "first", "second", NONTRIVIAL)
    centralizer = "GSp2×_μ GSp2"
    if r.sl2 == TRIVIAL:
        t = p.inverse() * q
        member = constituent_member(_torus(t, t, p.inverse()), None, "T", springer=pair_text("GSp22", "00"))
        return CaseResult("4b", centralizer, "1", 0, False, (member,), rendered(p, p, q, q),
                          springer_table="GSp22")
    if r.sl2 in ("first", "second"):
        # SL2 verkar på blocket för p ("first") eller q ("second")
        moving, fixed, orbit = (p, q, "e0") if r.sl2 == "first" else (q, p, "0e")
        t = fixed * moving.inverse()
        rep = _torus(t.twist(HALF), t.twist(-HALF), fixed.inverse())
        member = constituent_member(rep, "St_GL2", "T", springer=pair_text("GSp22", orbit))
        return CaseResult("4b", centralizer, "1", 0, False, (member,), rendered(jordan(moving, 2), fixed, fixed),
                          springer_table="GSp22")
    theta = p * q.inverse()
    eta = r.labels.order_two_characters()[0]
    plus, minus = enhancements(1)
    rep = _torus(theta.twist(1), theta, p.inverse().twist(-HALF))
    delta = constituent_member(rep, "delta", "T", plus, pair_text("GSp22", "ee", "1"),
                               restriction=list(principal_pair_labels(theta)))
    partners = [label for label, _ in mixed_partners(r.labels, theta)]
    cusp = pair_text("GSp22", "ee", "-1")
    pinv = fmt(p.inverse())
    if theta == eta:
        sc = sc_member(GROUP, f"π_β(θ10⊗{pinv})", minus, key="pi_beta_theta10", springer=cusp,
                       restriction=partners)
    else:
        sc = sc_member(GROUP, f"π_α({theta.render()};{pinv})", minus, key="pi_alpha_eta2", springer=cusp,
                       restriction=partners)
    logger.info("Mixed GSp4 packet for θ = %s", theta.render())
    return CaseResult("4b", centralizer, "μ2", 1, True, (delta, sc), rendered(jordan(p, 2), jordan(q, 2)),
                      springer_table="GSp22")


def _case_4c(r: Resolved, p: SmoothChar, q: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL, NONTRIVIAL)
    nu, one = r.labels.nu, r.labels.one()
    psi = q.inverse() * p
    if r.sl2 == TRIVIAL:
        rep = _torus(psi, one, p.inverse())
        tag = pick_tag(decide_reducibility(rep), {"1bi": "J_nu_1"})
        member = constituent_member(rep, tag, "T")
        return CaseResult("4c", "GL2×GSp0", "1", 0, False, (member,), rendered(p, p, q, q))
    rep = _torus(psi, nu(1), p.inverse().twist(-HALF))
    tag = pick_tag(decide_reducibility(rep), {"1aii": "St_GSp2", "1bii": "St_GSp2", "1aiii": "J_nu2_St_GSp2"})
    member = constituent_member(rep, tag, "T")
    return CaseResult("4c", "GL2×GSp0", "1", 0, False, (member,), rendered(jordan(p, 2), jordan(q, 2)))


def _case_4d(r: Resolved, p: SmoothChar, c: SmoothChar, d: SmoothChar) -> CaseResult:
    if r.sl2 != TRIVIAL:
        raise Unsupported("case 4d is only worked out for trivial φ|SL2")
    rep = _torus(p.inverse() * c, p * c.inverse(), p.inverse())
    tag = pick_tag(decide_reducibility(rep), {"1ai": "one_GL2", "1biii": "one_GL2", "1bii": "one_GSp2"})
    member = constituent_member(rep, tag, "T")
    return CaseResult("4d", "GL1×GSp2", "1", 0, False, (member,), rendered(p, p, c, d))


def _case_4e(r: Resolved, c1: SmoothChar, c2: SmoothChar, c3: SmoothChar, c4: SmoothChar) -> CaseResult:
    _need_sl2(r, TRIVIAL)
    rep = _torus(c1 * c3.inverse(), c1 * c2.inverse(), c1.inverse())
    tag = pick_tag(decide_reducibility(rep), {"1aii": "one_GSp2", "1aiii": "one_GSp4"})
    member = constituent_member(rep, tag, "T")
    return CaseResult("4e", "(ℂ^×)^3", "1", 0, False, (member,), rendered(c1, c2, c3, c4))


_BY_SHAPE = {
    (4,): _case_1,
    (2, 2): _case_2,
    (2,): _case_3,
    (): _case_4,
}


def classify_gsp4(r: Resolved) -> CaseResult:
    handler = _BY_SHAPE.get(r.block_dims)
    if handler is None:
        raise MalformedDescriptor(f"no GSp4 parameter has irreducible summands of dimensions {list(r.block_dims)}")
    result = handler(r)
    logger.debug("GSp4 parameter matched case %s (S_phi rank %d)", result.case, result.s_rank)
    return result
