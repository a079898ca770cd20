import itertools

import pytest
import sympy

from app.errors import InvalidOperand, Unsupported
from app.stability import (
    BASIS,
    C1,
    SGN,
    UNST,
    DistVector,
    character_vector,
    gsp4_candidates,
    is_stable,
    minimal_stable_subsets,
    parahoric_profile,
    render_label,
    sp4_candidates,
    stability_report,
    total,
)


def vectors(cands, **kw):
    return [(c.label, character_vector(c.label, **kw)) for c in cands]


def brute_force(cands, near):
    """Alla delmängder, filtrerade på stabilitet och minimalitet."""
    stable = []
    for size in range(1, len(cands) + 1):
        for combo in itertools.combinations(range(len(cands)), size):
            if is_stable(total(cands[i][1] for i in combo), near):
                stable.append(frozenset(combo))
    minimal = [s for s in stable if not any(t < s for t in stable)]
    return sorted(tuple(cands[i][0] for i in sorted(s)) for s in minimal)


def test_basis_has_seven_elements():
    """Testar att basen har sex stabila element och ett instabilt."""
    assert len(BASIS.elements) == 7
    assert len(set(BASIS.elements)) == 7
    assert BASIS.unstable not in BASIS.stable
    assert BASIS.change_of_basis().det() != 0


def test_delta_vector_shape():
    """Testar koefficientmönstret för δ([η2,νη2],1) nära 1."""
    v = character_vector(render_label("delta", "eta2"), near="1")
    d = v.as_dict()
    assert d["D_A1×A1^st"] == C1 / 2
    assert d[UNST] == -C1 / 2
    assert d["D_e^st"] == sympy.Symbol("c", positive=True)
    assert d[SGN] == sympy.Symbol("c2", positive=True)


def test_pi_alpha_vector_shape():
    """Testar att π_α(η2;1) har motsatt D^{unst}-koefficient och ingen D_e-term."""
    v = character_vector("pi_alpha", "eta2", near="1")
    assert v.coeff(UNST) == C1 / 2
    assert v.coeff("D_e^st") == 0


def test_pi_alpha_vanishes_at_delta_vertex():
    """Testar att π_α(η2;1)^{G_{δ+}} = 0."""
    assert character_vector("pi_alpha", "eta2", facet="F_C2").is_zero
    assert not character_vector("delta", "eta2", facet="F_C2").is_zero


def test_profiles_match_signs():
    """Testar att δ och π_α med samma η2 har samma tecken på 𝒢_sgn i profilen."""
    for eta in ("eta2", "eta2'"):
        d = parahoric_profile("delta", eta)
        p = parahoric_profile("pi_alpha", eta)
        assert d.sign == p.sign
        assert d.facets["F_A1xA1"]["q*G_sgn"] == p.facets["F_A1xA1"]["q*G_sgn"]
    assert parahoric_profile("delta", "eta2").sign == -parahoric_profile("delta", "eta2'").sign


def test_zero_vector_is_stable():
    """Testar att nollvektorn är stabil i båda omgivningarna."""
    assert is_stable(DistVector(), "1")
    assert is_stable(DistVector(), "s")


@pytest.mark.parametrize("q_mod_4", [1, 3])
@pytest.mark.parametrize("convention", ["plus_for_eta2", "minus_for_eta2"])
def test_matched_pair_is_stable(q_mod_4, convention):
    """Testar att δ + π_α med samma η2 är stabil både nära 1 och nära s."""
    for eta in ("eta2", "eta2'"):
        for near in ("1", "s"):
            s = character_vector("delta", eta, near=near, convention=convention, q_mod_4=q_mod_4) + \
                character_vector("pi_alpha", eta, near=near, convention=convention, q_mod_4=q_mod_4)
            assert is_stable(s, near)


@pytest.mark.parametrize("q_mod_4", [1, 3])
def test_mismatched_pair_unstable_near_s(q_mod_4):
    """Testar att δ(η2) + π_α(η2') är stabil nära 1 men inte nära s."""
    mixed = {
        near: character_vector("delta", "eta2", near=near, q_mod_4=q_mod_4)
        + character_vector("pi_alpha", "eta2'", near=near, q_mod_4=q_mod_4)
        for near in ("1", "s")
    }
    assert is_stable(mixed["1"], "1")
    assert not is_stable(mixed["s"], "s")
    assert mixed["s"].coeff(SGN) != 0


def test_sgn_coefficients_cancel_in_matched_pair():
    """Testar att 𝒢_sgn-koefficienterna tar ut varandra för fast η2 nära s."""
    d = character_vector("delta", "eta2'")
    p = character_vector("pi_alpha", "eta2'")
    assert d.coeff(SGN) + p.coeff(SGN) == 0


def test_gsp4_minimal_subsets_near_s():
    """Testar att de fyra GSp4-kandidaterna ger exakt de två η2-matchade paren."""
    cands = vectors(gsp4_candidates())
    subsets = minimal_stable_subsets(cands, "s")
    assert sorted(subsets) == [
        ("δ([eta2',nu*eta2'],1)", "π_α(eta2';1)"),
        ("δ([eta2,nu*eta2],1)", "π_α(eta2;1)"),
    ]


def test_gsp4_near_one_does_not_separate():
    """Testar att stabilitet nära 1 inte skiljer η2 från η2'."""
    subsets = minimal_stable_subsets(vectors(gsp4_candidates(), near="1"), "1")
    assert len(subsets) == 4
    assert all(len(s) == 2 for s in subsets)


def test_sp4_minimal_subsets_are_quadruples():
    """Testar att de åtta Sp4-restriktionerna ger exakt de två paketen av storlek fyra."""
    subsets = minimal_stable_subsets(vectors(sp4_candidates()), "s")
    assert sorted(subsets) == [
        ("π1(eta2')", "π2(eta2')", "π_α^+(eta2')", "π_α^-(eta2')"),
        ("π1(eta2)", "π2(eta2)", "π_α^+(eta2)", "π_α^-(eta2)"),
    ]


@pytest.mark.parametrize("near", ["1", "s"])
@pytest.mark.parametrize("which", ["gsp4", "sp4"])
def test_minimal_subsets_agree_with_brute_force(near, which):
    """Testar att sökningen efter minimala delmängder stämmer med uttömmande uppräkning."""
    cands = vectors(gsp4_candidates() if which == "gsp4" else sp4_candidates(), near=near)
    assert sorted(minimal_stable_subsets(cands, near)) == brute_force(cands, near)


def test_restriction_sums_back():
    """Testar att Sp4-restriktionerna summerar till GSp4-vektorerna."""
    for eta in ("eta2", "eta2'"):
        assert character_vector("pi1", eta) + character_vector("pi2", eta) == character_vector("delta", eta)
        pair = character_vector("pi_alpha+", eta) + character_vector("pi_alpha-", eta)
        assert pair == character_vector("pi_alpha", eta)
        assert is_stable(pair + character_vector("pi1", eta) + character_vector("pi2", eta))


def test_single_stable_vector_is_singleton():
    """Testar att en ensam stabil vektor ger en singelmängd."""
    v = DistVector.of({"D_e^st": 2})
    assert minimal_stable_subsets([("x", v)]) == [("x",)]


def test_unknown_label():
    """Testar att okända etiketter och felaktiga val avvisas."""
    with pytest.raises(Unsupported):
        character_vector("π(V4)")
    with pytest.raises(InvalidOperand):
        character_vector("delta", "eta")
    with pytest.raises(InvalidOperand):
        character_vector("delta", "eta2", q_mod_4=2)


def test_report_traces():
    """Testar att rapporten bär koefficientspår för varje stabil delmängd."""
    report = stability_report(gsp4_candidates())
    assert len(report.subsets) == 2
    for s in report.subsets:
        assert SGN not in s.trace
        assert UNST not in s.trace
    dumped = report.model_dump(mode="json", by_alias=True)
    assert dumped["schema"] == "v1"
