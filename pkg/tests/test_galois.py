import pytest

from app.errors import IncompleteData, InvalidEnhancement, InvalidOperand, MalformedDescriptor, Unsupported
from app.galois.descriptor import ParamDescriptor, enhancements
from app.galois.packets import (
    assemble_packet,
    centralizer,
    cuspidal_support,
    infinitesimal,
    infinitesimal_matches,
    sp4_from_gsp4,
    support_commutes,
)
from app.galois.presets import load_preset, preset_labels, preset_names
from app.galois.springer import CUSP, resolve_pair, springer_table, springer_tables
from app.induction.sp4 import AMBIGUOUS_1A, EQUAL_1A


@pytest.fixture
def plabels():
    return preset_labels()


def packet(name, labels):
    return assemble_packet(load_preset(name), labels)


# ------- Springertabeller -------
@pytest.mark.parametrize("name, rows, cusps", [
    ("SL2", 3, 1),
    ("SO3", 2, 0),
    ("SO5", 5, 0),
    ("O4", 7, 2),
    ("GSp4", 5, 0),
    ("GSp22", 5, 1),
])
def test_springer_tables_are_bijections(name, rows, cusps):
    """Testar radantal, antal kuspidala par och bijektivitet för varje tabell."""
    table = springer_table(name)
    assert len(table.rows) == rows
    assert table.cuspidal_count == cusps
    assert table.is_bijection()


def test_springer_gsp22_cuspidal_row():
    """Testar att GSp_{2,2}-tabellens enda kuspidala rad är (ee,-1)."""
    cusp = [r for r in springer_table("GSp22").rows if r.cuspidal]
    assert [r.pair for r in cusp] == ["(ee,-1)"]


def test_springer_pair_text_roundtrip():
    """Testar att kvalificerade par med nästlade parenteser hittar sin rad."""
    assert resolve_pair("O4:(ee,(-1,1))").weyl_rep == CUSP
    assert resolve_pair("SO5:([3,1^2],-1)").weyl_rep == "(∅,[2])"
    with pytest.raises(InvalidOperand):
        springer_table("E8")
    assert set(springer_tables()) == {"SL2", "SO3", "SO5", "O4", "GSp4", "GSp22"}


def test_enhancement_order():
    """Testar att förstärkningarna räknas upp med den triviala först."""
    assert enhancements(0) == ("1",)
    assert enhancements(1) == ("+", "-")
    assert enhancements(2)[0] == "(+,+)"
    assert len(enhancements(3)) == 8


# ------- Paketstorlekar över alla förinställningar -------
@pytest.mark.parametrize("name", preset_names())
def test_packet_size_census(name, plabels):
    """Testar att paketstorleken är 2^rank S_φ och att stöd och infinitesimal parameter stämmer."""
    p = packet(name, plabels)
    assert p.size == 2 ** p.s_rank == len(p.members)
    assert support_commutes(p)
    assert infinitesimal_matches(p)
    if p.discrete:
        assert p.tempered


def test_preset_census_covers_both_groups():
    """Testar att förinställningarna täcker båda grupperna."""
    assert len(preset_names("Sp4")) >= 30
    assert len(preset_names("GSp4")) >= 20
    with pytest.raises(InvalidOperand):
        load_preset("sp4-case-99")


# ------- Centralisatorer -------
def test_sp4_irreducible_u(plabels):
    """Testar att irreducibel U ger trivial centralisator och ett superkuspidalt singelpaket."""
    report = centralizer(load_preset("sp4-case-1"), plabels)
    assert (report.centralizer, report.s_rank, report.discrete) == ("1", 0, True)
    p = packet("sp4-case-1", plabels)
    assert p.members[0].kind == "supercuspidal"


def test_sp4_three_distinct_quadratics(plabels):
    """Testar fall 6c: tre olika kvadratiska karaktärer ger S_φ = μ2^3 och åtta medlemmar."""
    report = centralizer(load_preset("sp4-case-6c"), plabels)
    assert report.centralizer == "μ2×S(μ2^3)"
    assert report.s_rank == 3
    assert report.irr_count == 8
    assert packet("sp4-case-6c", plabels).size == 8


def test_gsp4_regular_in_gsp22(plabels):
    """Testar att reguljär sl2 i GSp_{2,2} ger S_φ = μ2."""
    report = centralizer(load_preset("gsp4-case-4biv-eta2"), plabels)
    assert report.s_rank == 1
    assert report.springer_table == "GSp22"
    assert report.discrete


# ------- Paket -------
def test_sp4_mixed_o4_packet_eta(plabels):
    """Testar att det blandade O4-paketet för η har två principalserier och två superkuspidaler."""
    p = packet("sp4-case-7biii-eta", plabels)
    assert p.size == 4
    assert [m.label for m in p.members] == ["π1(eta)", "π2(eta)", "π_β(θ10)", "π_γ(θ10)"]
    assert [m.kind for m in p.members].count("supercuspidal") == 2
    assert p.mixed
    assert p.members[0].generic
    assert all(m.square_integrable for m in p.members)


def test_gsp4_mixed_depth_zero(plabels):
    """Testar fall 3aii med V av djup noll."""
    p = packet("gsp4-case-3aii", plabels)
    assert p.size == 2
    delta, sc = p.members
    assert delta.label == "δ(nu^{1/2}·π_u(V) ⋊ nu^{-1/2})"
    assert delta.square_integrable and delta.generic
    assert sc.kind == "supercuspidal"
    assert sc.sc_key == "pi_S_theta_theta"


def test_gsp4_mixed_positive_depth(plabels):
    """Testar att positivt djup ger den superkuspidala partnern π(π_u) utan djup-noll-nyckel."""
    sc = packet("gsp4-case-3aii-positive-depth", plabels).members[1]
    assert sc.label == "π(π_u(V))⊗1"
    assert sc.sc_key is None


def test_sp4_v3_two_quadratics_purely_supercuspidal(plabels):
    """Testar fall 4b: fyra superkuspidala medlemmar."""
    p = packet("sp4-case-4b", plabels)
    assert p.size == 4
    assert {m.kind for m in p.members} == {"supercuspidal"}
    assert not p.mixed


def test_gsp4_4e_trivial_representation(plabels):
    """Testar att ν^{3/2} ⊕ ν^{1/2} ⊕ ν^{-1/2} ⊕ ν^{-3/2} ger den triviala representationen."""
    p = packet("gsp4-case-4e", plabels)
    assert p.size == 1
    m = p.members[0]
    assert m.constituent_tag == "one_GSp4"
    assert m.label == "1_GSp4"
    assert not p.tempered


def test_sp4_steinberg_parameter(plabels):
    """Testar att den reguljära unipotenta klassen i SO5 ger Steinberg."""
    p = packet("sp4-case-7a-steinberg", plabels)
    assert p.members[0].constituent_tag == "St_Sp4"
    assert p.discrete


def test_sp4_subregular_two_tempered(plabels):
    """Testar att [3,1^2] ger τ' och τ med förstärkningarna + och -."""
    p = packet("sp4-case-7a-subregular", plabels)
    assert [m.constituent_tag for m in p.members] == ["tau_prime", "tau"]
    assert p.member("-").springer == "SO5:([3,1^2],-1)"


def test_sp4_two_quadratics_flagged(plabels):
    """Testar att fall 7e bär flaggan för det tvetydiga fallet 1a."""
    p = packet("sp4-case-7e", plabels)
    assert AMBIGUOUS_1A in p.flags
    assert p.size == 4


def test_sp4_equal_quadratics_flagged(plabels):
    """Testar att fall 7b med trivial sl2 bär flaggan för η × η ⋊ 1."""
    p = packet("sp4-case-7bi", plabels)
    assert EQUAL_1A in p.flags
    assert [m.constituent_tag for m in p.members] == ["T1", "T2"]


def sp4_chars(*tags):
    return ParamDescriptor.from_data({"group": "Sp4", "summands": [{"dim": 1, "tag": t, "mult": 1} for t in tags],
                                      "sl2": "trivial"})


@pytest.mark.parametrize("tags, case, induction_case, tag", [
    (("1", "1", "1", "nu", "nu^{-1}"), "7d", "1ci", "J_nu_1"),
    (("1", "nu^{1/2}", "nu^{1/2}", "nu^{-1/2}", "nu^{-1/2}"), "7f", "1ciii", "one_GL2"),
    (("1", "nu", "nu", "nu^{-1}", "nu^{-1}"), "7f", "1cii", "one_Sp2"),
    (("1", "nu^{2}", "nu^{-2}", "nu", "nu^{-1}"), "7g", "1biii", "one_Sp4"),
    (("1", "nu*zeta", "nu^{-1}*zeta^{5}", "zeta", "zeta^{5}"), "7g", "1bi", "one_GL2"),
    (("1", "nu", "nu^{-1}", "xi", "xi^{-1}"), "7g", "1bii", "one_Sp2"),
])
def test_sp4_reducible_trivial_sl2_takes_langlands_quotient(plabels, tags, case, induction_case, tag):
    """Testar att trivial sl2 över en reducibel principalserie ger dess Langlandskvot."""
    p = assemble_packet(sp4_chars(*tags), plabels)
    assert p.case == case
    assert p.size == 1
    (m,) = p.members
    assert m.induction_case == induction_case
    assert m.constituent_tag == tag
    assert not m.tempered
    assert not m.generic


def test_sp4_trivial_packet_is_trivial_representation(plabels):
    """Testar att φ = 1 ⊕ ν^{±1} ⊕ ν^{±2} ger den triviala representationen."""
    p = assemble_packet(sp4_chars("1", "nu^{2}", "nu^{-2}", "nu", "nu^{-1}"), plabels)
    assert p.members[0].label == "1_Sp4"


def test_sp4_reducible_without_pinned_quotient(plabels):
    """Testar att νη × η ⋊ 1 med trivial sl2 fortfarande ger Unsupported."""
    with pytest.raises(Unsupported):
        assemble_packet(sp4_chars("1", "nu*eta", "nu^{-1}*eta", "eta", "eta"), plabels)


def test_sp4_case_7g_centralizer(plabels):
    """Testar att fall 7g har centralisatorn ℂ^× × ℂ^×."""
    report = centralizer(load_preset("sp4-case-7g"), plabels)
    assert report.centralizer == "ℂ^××ℂ^×"
    assert report.s_rank == 0


def test_gsp4_twist_recovered_from_central_character(labels):
    """Testar att två paket som bara skiljer sig i twisten får etiketter som bara skiljer sig i twisten."""
    base = {"group": "GSp4", "summands": [{"dim": 1, "tag": "1", "mult": 4}], "xi": "1"}
    twisted = {"group": "GSp4", "summands": [{"dim": 1, "tag": "xi", "mult": 4}], "xi": "xi^{2}"}
    a = assemble_packet(ParamDescriptor.from_data(base), labels).members[0].label
    b = assemble_packet(ParamDescriptor.from_data(twisted), labels).members[0].label
    assert a == "1 × 1 ⋊ 1"
    assert b == "1 × 1 ⋊ xi^{-1}"


# ------- Kuspidalt stöd -------
def test_cuspidal_support_mixed_sl2(plabels):
    """Testar fall 5b: kuspidala raden ger G^∨, sgn-raden ger GL2 × SO1."""
    desc = load_preset("sp4-case-5bii")
    cusp = cuspidal_support(desc, "-", plabels)
    assert cusp.levi_dual == "SO5"
    assert cusp.springer_image == CUSP
    sgn = cuspidal_support(desc, "+", plabels)
    assert sgn.levi_dual == "GL2×SO1"
    assert sgn.springer_image == "sgn"
    assert not sgn.no_levi_shortcut


def test_cuspidal_support_abelian_shortcut(plabels):
    """Testar att fall utan Springertabell använder genvägen för abelsk 𝒢_φ°."""
    report = cuspidal_support(load_preset("sp4-case-7g"), "1", plabels)
    assert report.no_levi_shortcut
    assert report.levi_dual == "T"


def test_cuspidal_support_rejects_unknown_enhancement(plabels):
    """Testar att en förstärkning utanför Irr(S_φ) avvisas."""
    with pytest.raises(InvalidEnhancement):
        cuspidal_support(load_preset("sp4-case-5bii"), "(+,+)", plabels)


# ------- Infinitesimal parameter -------
def test_infinitesimal_gsp4_steinberg(plabels):
    """Testar att [4] ger halvstegsförskjutningarna av χ1."""
    assert infinitesimal(load_preset("gsp4-case-4a-steinberg"), plabels) == [
        "nu^{3/2}", "nu^{1/2}", "nu^{-1/2}", "nu^{-3/2}",
    ]


def test_infinitesimal_trivial_sl2_is_unshifted(plabels):
    """Testar att trivial sl2 ger φ|_{W_F} utan förskjutning."""
    inf = infinitesimal(load_preset("sp4-case-7d"), plabels)
    assert sorted(inf) == sorted(["zeta", "zeta^{5}", "1", "1", "1"])


def test_infinitesimal_mixed_o4(plabels):
    """Testar förskjutningarna (±1, 0, 0) i det blandade O4-fallet."""
    inf = infinitesimal(load_preset("sp4-case-7biii-eta"), plabels)
    assert sorted(inf) == sorted(["nu*eta", "eta", "nu^{-1}*eta", "eta", "1"])


# ------- Restriktion till Sp4 -------
def test_sp4_from_gsp4_eta2(plabels):
    """Testar att GSp4-paketet för η2 ger Sp4-paketet av storlek fyra."""
    p = packet("gsp4-case-4biv-eta2", plabels)
    assert sp4_from_gsp4(p) == ["π1(eta2)", "π2(eta2)", "π_α^+(eta2)", "π_α^-(eta2)"]


def test_sp4_from_gsp4_singleton(plabels):
    """Testar att ett singelpaket utan deklarerad delning ger ett singelpaket."""
    p = packet("gsp4-case-1", plabels)
    assert sp4_from_gsp4(p) == ["π(V4)|_Sp4"]


def test_sp4_from_gsp4_missing_restriction(plabels):
    """Testar att saknade restriktionsdata ger IncompleteData."""
    with pytest.raises(IncompleteData):
        sp4_from_gsp4(packet("gsp4-case-2a", plabels))
    with pytest.raises(InvalidOperand):
        sp4_from_gsp4(packet("sp4-case-1", plabels))


# ------- Felaktiga deskriptorer -------
@pytest.mark.parametrize("data", [
    {"group": "GSp4", "summands": [{"dim": 3, "kind": "orthogonal", "tag": "V"}, {"dim": 1, "tag": "1"}], "xi": "1"},
    {"group": "Sp4", "summands": [{"dim": 1, "tag": "1", "mult": 4}]},
    {"group": "Sp4", "summands": [{"dim": 1, "tag": "1", "mult": 5}], "sl2": "[7]"},
    {"group": "Sp4", "summands": [{"dim": 1, "tag": "eta", "kind": "symplectic", "mult": 5}]},
    {"group": "GSp4", "summands": [{"dim": 1, "tag": "1", "mult": 4}]},
    {"group": "Sp4", "summands": [{"dim": "five", "tag": "V"}]},
])
def test_malformed_descriptors(data):
    """Testar att deskriptorer som bryter formkraven avvisas."""
    with pytest.raises(MalformedDescriptor):
        ParamDescriptor.from_data(data)


def test_malformed_pairing(labels):
    """Testar att karaktärer utan inverspartner avvisas vid klassificering."""
    desc = ParamDescriptor.from_data({
        "group": "Sp4", "summands": [{"dim": 1, "tag": "1", "mult": 3}, {"dim": 1, "tag": "zeta", "mult": 2}],
    })
    with pytest.raises(MalformedDescriptor):
        assemble_packet(desc, labels)


def test_gsp4_4d_nontrivial_sl2_unsupported(plabels):
    """Testar att fall 4d med icke-trivial sl2 inte stöds."""
    desc = ParamDescriptor.from_data({**load_preset("gsp4-case-4d").model_dump(), "sl2": "nontrivial"})
    with pytest.raises(Unsupported):
        assemble_packet(desc, plabels)
