import random
from fractions import Fraction
from itertools import product

import pytest

from app.characters import SupercuspidalLabel
from app.errors import InvalidOperand, NotApplicable, Unsupported
from app.induction.bernstein import bernstein_block_J
from app.induction.gsp4 import weyl_orbit
from app.induction.reducibility import decide_reducibility, langlands_quotient_label, unipotent_of
from app.induction.sp4 import AMBIGUOUS_1A, EQUAL_1A, sp4_orbit
from app.induction.types import InducedRep


def torus(group, chi1, chi2, theta=None):
    return InducedRep(group=group, levi="T", chi1=chi1, chi2=chi2, theta=theta)


# ------- GSp4, L = T -------
def test_gsp4_nu2_nu_has_length_four(labels):
    """Testar att ν² × ν ⋊ θ har längd 4 med Steinberg som enda generiska konstituent."""
    report = decide_reducibility(torus("GSp4", labels.nu(2), labels.nu(1)))
    assert report.case == "1aiii"
    assert report.length == 4
    st = report.constituent("St_GSp4")
    assert st.square_integrable and st.generic
    assert report.generic_count == 1


def test_gsp4_nu_one_has_two_tempered(labels):
    """Testar att ν × 1 ⋊ θ har längd 4 med τ(S, θ) och τ(T, θ) tempererade."""
    report = decide_reducibility(torus("GSp4", labels.nu(1), labels.one()))
    assert report.case == "1bi"
    assert report.length == 4
    assert {c.tag for c in report.constituents if c.tempered} == {"tau_S", "tau_T"}
    assert report.constituent("tau_S").generic


def test_gsp4_unrelated_characters_irreducible(labels):
    """Testar att karaktärer utan ν-relation ger irreducibel induktion."""
    report = decide_reducibility(torus("GSp4", labels.parse("xi"), labels.parse("zeta")))
    assert report.irreducible
    assert report.length == 1


def test_gsp4_weyl_conjugate_same_case(labels):
    """Testar att Weylkonjugerade data ger samma fall och längd."""
    a = decide_reducibility(torus("GSp4", labels.nu(2), labels.nu(1)))
    b = decide_reducibility(torus("GSp4", labels.nu(1), labels.nu(2)))
    c = decide_reducibility(torus("GSp4", labels.nu(-2), labels.nu(1)))
    assert a.case == b.case == c.case == "1aiii"
    assert a.length == b.length == c.length


def test_gsp4_order_two_shift_is_1aiv(labels):
    """Testar att νη × η ⋊ 1 har längd 4 med δ([η, νη], 1)."""
    report = decide_reducibility(torus("GSp4", labels.parse("nu*eta"), labels.parse("eta")))
    assert report.case == "1aiv"
    assert report.length == 4
    assert report.constituent("delta").square_integrable


# ------- Langlandsklassifikation -------
def test_langlands_one_gl2_positive_exponent(labels):
    """Testar grenen e(χ2) > 0 för ν^{1/2}χ2 1_GL2 ⋊ θ."""
    rep = torus("GSp4", labels.parse("nu^{2}*zeta"), labels.parse("nu*zeta"))
    report = decide_reducibility(rep)
    assert report.case == "1ai"
    assert langlands_quotient_label(rep, "one_GL2") == "J((nu^{2}*zeta), (nu*zeta); 1)"
    assert report.constituent("one_GL2").langlands_branch == "e(chi2) > 0"


def test_langlands_st_gl2_below_minus_half(labels):
    """Testar grenen e(χ2) < -1/2 för Steinberg-delen."""
    rep = torus("GSp4", labels.parse("zeta"), labels.parse("nu^{-1}*zeta"))
    label = langlands_quotient_label(rep, "St_GL2")
    assert label == "J((nu^{1/2}*zeta^{5})·St_GL2; (nu^{-1}*zeta^{2}))"


def test_langlands_tempered_st_not_applicable(labels):
    """Testar att tempererad Steinberg-del inte har någon Langlandskvot."""
    rep = torus("GSp4", labels.parse("nu^{1/2}*zeta"), labels.parse("nu^{-1/2}*zeta"))
    assert decide_reducibility(rep).constituent("St_GL2").tempered
    with pytest.raises(NotApplicable):
        langlands_quotient_label(rep, "St_GL2")


def test_langlands_one_gsp2_unitary(labels):
    """Testar att χ1 ⋊ ν^{1/2}θ 1_GSp2 med e(χ1) = 0 ger J(ν; χ1 ⋊ θ)."""
    rep = torus("GSp4", labels.parse("zeta"), labels.nu(1))
    assert decide_reducibility(rep).case == "1aii"
    assert langlands_quotient_label(rep, "one_GSp2") == "J(nu; zeta ⋊ 1)"


# ------- Siegel och Klingen -------
def test_gsp4_siegel_reducible_at_half(labels, gl2_self_dual):
    """Testar att ν^{1/2}ρ ⋊ χ har längd 2 med generisk speciell delrepresentation."""
    rep = InducedRep(group="GSp4", levi="siegel", sigma=gl2_self_dual, beta=Fraction(1, 2), chi=labels.one())
    report = decide_reducibility(rep)
    assert report.length == 2
    delta = report.constituent("delta")
    assert delta.generic and delta.square_integrable
    assert not report.constituent("L").tempered


def test_gsp4_siegel_irreducible_off_half(labels, gl2_self_dual):
    """Testar att β = 1/4 ger irreducibel Siegelinduktion."""
    rep = InducedRep(group="GSp4", levi="siegel", sigma=gl2_self_dual, beta=Fraction(1, 4), chi=labels.one())
    assert decide_reducibility(rep).irreducible


def test_gsp4_klingen_order_two_self_twist(labels):
    """Testar fall 3b: ν^{±1}ξ ⋊ ρ med ξρ ≅ ρ."""
    rho = SupercuspidalLabel(group="GSp2", ref="rho", central_char=labels.one(),
                             self_twists=(labels.label("eta"),))
    for chi in ("nu*eta", "nu^{-1}*eta"):
        report = decide_reducibility(InducedRep(group="GSp4", levi="klingen", chi=labels.parse(chi), rho=rho))
        assert report.case == "3b"
        assert report.constituent("delta").square_integrable


def test_sp4_klingen_nontrivial_on_fsigma(labels, sp2_sigma):
    """Testar att χ ⋊ σ är reducibel vid β = 0 när χ är icke-trivial på F_σ^×."""
    report = decide_reducibility(InducedRep(group="Sp4", levi="klingen", chi=labels.parse("eta2"), rho=sp2_sigma))
    assert report.case == "3b"
    assert report.length == 2


def test_sp4_klingen_trivial_on_fsigma(labels, sp2_sigma):
    """Testar att νη ⋊ σ ger fall 3c och att η ⋊ σ är irreducibel."""
    report = decide_reducibility(InducedRep(group="Sp4", levi="klingen", chi=labels.parse("nu*eta"), rho=sp2_sigma))
    assert report.case == "3c"
    assert decide_reducibility(
        InducedRep(group="Sp4", levi="klingen", chi=labels.parse("eta"), rho=sp2_sigma)
    ).irreducible


def test_sp4_siegel_ramified_central_character(labels):
    """Testar att ρ ⋊ 1 med ω_ρ ≠ 1 är reducibel vid β = 0."""
    sigma = SupercuspidalLabel(group="GL2", ref="rho", central_char=labels.label("eta"), self_dual=True)
    report = decide_reducibility(InducedRep(group="Sp4", levi="GL2", sigma=sigma))
    assert report.case == "2b"
    assert report.length == 2


# ------- Sp4, L = T -------
def test_sp4_halves_of_length_three(labels):
    """Testar att νχ2 × χ2 ⋊ 1 med χ2 av ordning 2 ger två halvor av längd tre."""
    report = decide_reducibility(torus("Sp4", labels.parse("nu*eta"), labels.parse("eta")))
    assert report.case == "1biv"
    assert [c.length for c in report.constituents] == [3, 3]
    assert report.length == 6


def test_sp4_equal_order_two(labels):
    """Testar att η2 × η2 ⋊ 1 ger två bitar av längd två."""
    report = decide_reducibility(torus("Sp4", labels.parse("eta2"), labels.parse("eta2")))
    assert report.case == "1aii"
    assert report.length == 4
    assert EQUAL_1A in report.flags
    assert AMBIGUOUS_1A not in report.flags


def test_sp4_order_two_and_other(labels):
    """Testar att ζ × η ⋊ 1 delar sig i två irreducibla bitar."""
    report = decide_reducibility(torus("Sp4", labels.parse("zeta"), labels.parse("eta")))
    assert report.case == "1ai"
    assert report.length == 2


def test_sp4_two_distinct_order_two_flagged(labels):
    """Testar att två olika karaktärer av ordning 2 flaggas som tvetydigt fall."""
    report = decide_reducibility(torus("Sp4", labels.parse("eta"), labels.parse("eta2")))
    assert AMBIGUOUS_1A in report.flags


def test_sp4_rejects_theta(labels):
    """Testar att Sp4 inte tar någon likhetskaraktär."""
    with pytest.raises(InvalidOperand):
        torus("Sp4", labels.nu(1), labels.one(), labels.parse("eta"))


@pytest.mark.parametrize("group", ["GSp4", "Sp4"])
def test_exhaustive_sample(labels, group):
    """Testar att varje datum i ett rutnät ger ett fall med exakt en generisk konstituent."""
    tames = [labels.one(), labels.parse("eta"), labels.parse("eta2"), labels.parse("zeta"), labels.parse("zeta^{3}")]
    exps = [Fraction(k, 2) for k in range(-4, 5)]
    chars = [t.twist(e) for t, e in product(tames, exps)]
    for chi1, chi2 in product(chars, chars):
        report = decide_reducibility(torus(group, chi1, chi2))
        assert report.length in (1, 2, 4, 6)
        assert report.generic_count == 1


def shape(report):
    """Det som inte beror på vilken punkt i Weylbanan man räknar från."""
    pieces = sorted((c.tag, c.length, c.tempered, c.generic, c.square_integrable) for c in report.constituents)
    return report.case, report.length, pieces, sorted(report.flags)


@pytest.mark.parametrize("group", ["GSp4", "Sp4"])
def test_weyl_orbit_random_sample(labels, group):
    """Testar på 10 000 slumpade data att alla punkter i Weylbanan ger samma fall och konstituenter."""
    rng = random.Random(4711)
    tames = [labels.one(), *labels.order_two_characters(), labels.parse("zeta"), labels.parse("zeta^{2}"),
             labels.parse("xi")]

    def pick():
        return rng.choice(tames).twist(Fraction(rng.randint(-5, 5), 2))

    seen = {}

    def decided(a, b, t):
        if (a, b, t) not in seen:
            seen[a, b, t] = shape(decide_reducibility(torus(group, a, b, t)))
        return seen[a, b, t]

    for _ in range(10_000):
        chi1, chi2 = pick(), pick()
        if group == "GSp4":
            orbit = weyl_orbit(chi1, chi2, pick())
        else:
            orbit = sp4_orbit(chi1, chi2)
        first = decided(*orbit[0])
        assert first[0] == "irreducible" or first[1] > 1
        for point in orbit[1:]:
            assert decided(*point) == first


GOLDEN = [
    # grupp, χ1, χ2, θ, fall, längd, tempererade, generisk
    ("GSp4", "nu^{2}", "nu", "1", "1aiii", 4, {"St_GSp4"}, "St_GSp4"),
    ("GSp4", "nu^{2}", "nu", "zeta", "1aiii", 4, {"St_GSp4"}, "St_GSp4"),
    ("GSp4", "nu*eta", "eta", "1", "1aiv", 4, {"delta"}, "delta"),
    ("GSp4", "nu^{1/2}*zeta", "nu^{-1/2}*zeta", "1", "1ai", 2, {"St_GL2"}, "St_GL2"),
    ("GSp4", "nu^{3/2}*zeta", "nu^{1/2}*zeta", "xi", "1ai", 2, set(), "St_GL2"),
    ("GSp4", "eta", "nu", "1", "1aii", 2, {"St_GSp2"}, "St_GSp2"),
    ("GSp4", "nu^{1/2}*xi", "nu", "1", "1aii", 2, set(), "St_GSp2"),
    ("GSp4", "nu", "1", "eta", "1bi", 4, {"tau_S", "tau_T"}, "tau_S"),
    ("GSp4", "nu", "nu", "1", "1bii", 2, set(), "St_GSp2"),
    ("GSp4", "nu^{1/2}", "nu^{-1/2}", "1", "1biii", 2, {"St_GL2"}, "St_GL2"),
    ("GSp4", "nu^{1/2}*eta", "nu^{-1/2}*eta", "1", "1biii", 2, {"St_GL2"}, "St_GL2"),
    ("GSp4", "nu^{1/2}*zeta", "xi", "1", "irreducible", 1, set(), "full"),
    ("Sp4", "nu^{2}", "nu", None, "1biii", 4, {"St_Sp4"}, "St_Sp4"),
    ("Sp4", "nu*eta", "eta", None, "1biv", 6, set(), "St_GL2"),
    ("Sp4", "nu^{1/2}*zeta", "nu^{-1/2}*zeta", None, "1bi", 2, {"St_GL2"}, "St_GL2"),
    ("Sp4", "xi", "nu", None, "1bii", 2, {"St_Sp2"}, "St_Sp2"),
    ("Sp4", "nu", "1", None, "1ci", 4, {"tau_prime", "tau"}, "tau_prime"),
    ("Sp4", "nu", "nu", None, "1cii", 2, set(), "St_Sp2"),
    ("Sp4", "nu^{1/2}", "nu^{1/2}", None, "1ciii", 2, {"St_GL2"}, "St_GL2"),
    ("Sp4", "zeta", "eta", None, "1ai", 2, {"T1", "T2"}, "T1"),
    ("Sp4", "nu*zeta", "eta", None, "1ai", 2, set(), "T1"),
    ("Sp4", "eta2", "eta2", None, "1aii", 4, {"T1", "T2"}, "T1"),
]


@pytest.mark.parametrize("group, chi1, chi2, theta, case, length, tempered, generic", GOLDEN)
def test_torus_golden(labels, group, chi1, chi2, theta, case, length, tempered, generic):
    """Testar fall, längd, tempererade och generisk konstituent för ett datum per torusfall."""
    theta = labels.parse(theta) if theta else None
    report = decide_reducibility(torus(group, labels.parse(chi1), labels.parse(chi2), theta))
    assert report.case == case
    assert report.length == length
    assert {c.tag for c in report.constituents if c.tempered} == tempered
    assert [c.tag for c in report.constituents if c.generic] == [generic]


def test_gsp4_length_two_pieces_are_the_displayed_summands(labels):
    """Testar att de två bitarna i fall 1ai och 1aii är exakt de två inducerade delarna."""
    ai = decide_reducibility(torus("GSp4", labels.parse("nu^{3/2}*zeta"), labels.parse("nu^{1/2}*zeta")))
    assert {c.label for c in ai.constituents} == {"(nu*zeta)·1_GL2 ⋊ 1", "(nu*zeta)·St_GL2 ⋊ 1"}
    aii = decide_reducibility(torus("GSp4", labels.parse("nu^{1/2}*xi"), labels.nu(1)))
    assert {c.label for c in aii.constituents} == {
        "(nu^{1/2}*xi) ⋊ nu^{1/2}·St_GSp2",
        "(nu^{1/2}*xi) ⋊ nu^{1/2}·1_GSp2",
    }
    for report in (ai, aii):
        assert [c.length for c in report.constituents] == [1, 1]


# ------- Bernsteinblock -------
def test_bernstein_unramified_is_j1(labels):
    """Testar att oramifierade karaktärer ger J1 med J^s = GSp4."""
    block = bernstein_block_J(labels.one(), labels.parse("nu*eta"))
    assert block.tag == "J1"
    assert block.group == "GSp4"


def test_bernstein_ramified_quadratic_is_j3(labels):
    """Testar att χ1 = χ2 = η2 ger J3."""
    block = bernstein_block_J(labels.parse("eta2"), labels.parse("eta2"))
    assert block.tag == "J3"
    assert block.group == "GL2×GL2/GL1"


def test_bernstein_order_six_is_j4(labels):
    """Testar att χ2 = χ1^{-1} av enhetsordning 6 ger J4 oberoende av ν-twist."""
    zeta = labels.parse("zeta")
    assert bernstein_block_J(zeta, zeta.inverse()).tag == "J4"
    assert bernstein_block_J(zeta.twist(Fraction(3, 2)), zeta.inverse().twist(-1)).tag == "J4"
    assert bernstein_block_J(zeta, labels.one()).tag == "J2"


def test_unipotent_steinberg_is_regular(labels):
    """Testar att Steinberg i fall 1aiii får den reguljära unipotenta klassen."""
    rep = torus("GSp4", labels.nu(2), labels.nu(1))
    assert unipotent_of(rep, "St_GSp4").partition == "[4]"
    with pytest.raises(Unsupported):
        unipotent_of(rep, "one_GSp4")


def test_unipotent_tau_enhancements(labels):
    """Testar tabellen t_b i fall 1bi."""
    rep = torus("GSp4", labels.nu(1), labels.one())
    tau = unipotent_of(rep, "tau_T")
    assert (tau.partition, tau.enhancement, tau.hecke) == ("[2,1^2]", -1, "t_b")
    assert unipotent_of(rep, "J_nu_1").partition == "[1^4]"
