import pytest

from app.errors import InvalidOperand, Unsupported
from app.rootdata import (
    GROUPS,
    LeviLabel,
    apartment,
    build_root_datum,
    check_group,
    dual_levi,
    levi_labels,
    nilpotent_orbits,
    parahoric_quotients,
    quotient_at,
    self_duality_inverse,
    self_duality_map,
    weyl_classes,
    weyl_closure_ok,
    weyl_group,
)

BAR = "\u0304"  # kombinerande streck
WEYL_TABLE = [
    ("e", "(1)(1)", 1),
    ("A1", f"(1)(1{BAR})", 2),
    ("Ã1", "(2)", 2),
    ("A1×A1", f"(1{BAR})(1{BAR})", 1),
    ("C2", f"(2{BAR})", 2),
]


@pytest.mark.parametrize("group", GROUPS)
def test_root_system_shape(group):
    """Testar att rotsystemet har 8 rötter, 4 positiva och heltalsparning 2 mot egen korot."""
    rd = build_root_datum(group)
    assert len(rd.roots) == 8
    assert len(rd.positive_roots()) == 4
    for r in rd.roots:
        assert rd.pairing(r, rd.coroot_of(r)) == 2
    assert rd.rank == (2 if group == "Sp4" else 3)
    assert weyl_closure_ok(group)


@pytest.mark.parametrize("group", GROUPS)
def test_weyl_group_classes_match_table(group):
    """Testar |W| = 8 och de fem konjugatklasserna med cykeltyper och storlekar."""
    assert len(weyl_group(group)) == 8
    classes = weyl_classes(group)
    assert [(c.name, c.cycle_type, c.size) for c in classes] == WEYL_TABLE
    assert sum(c.size for c in classes) == 8


def test_gsp4_torsion_ranks():
    """Testar att bara A1×A1 ger torsion Z/2 i X_*/(1-w)X_* för GSp4."""
    ranks = {c.key: c.torsion_rank for c in weyl_classes("GSp4")}
    assert ranks == {"e": 0, "A1": 0, "A1t": 0, "A1xA1": 1, "C2": 0}


def test_self_duality():
    """Testar att självdualiteten byter α mot β^∨ och β mot α^∨ och har en invers."""
    rd = build_root_datum("GSp4")
    assert self_duality_map(rd.simple["alpha"]) == rd.simple_coroots["beta"]
    assert self_duality_map(rd.simple["beta"]) == rd.simple_coroots["alpha"]
    for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -1, 3)]:
        assert self_duality_inverse(self_duality_map(v)) == v
    with pytest.raises(InvalidOperand):
        self_duality_map((1, 0))


def test_nilpotent_orbits():
    """Testar de fyra banorna och B2/C2-partitionernas parning."""
    orbits = nilpotent_orbits()
    pairs = [(o.name, o.b2_partition, o.c2_partition) for o in orbits]
    assert pairs == [
        ("regular", "[5]", "[4]"),
        ("subregular", "[3,1^2]", "[2^2]"),
        ("minimal", "[2^2,1]", "[2,1^2]"),
        ("zero", "[1^5]", "[1^4]"),
    ]
    assert orbits[0].levi == "G"
    assert orbits[-1].levi == "T"


def test_parahoric_quotients():
    """Testar de reduktiva kvoterna i hörnen."""
    assert [p.quotient for p in parahoric_quotients("GSp4")] == ["GSp4(F_q)", "GSp_{2,2}(F_q)"]
    assert [p.quotient for p in parahoric_quotients("Sp4")] == ["Sp4(F_q)", "Sp4(F_q)", "Sp2×Sp2(F_q)"]
    assert quotient_at("GSp4", "beta") == "GSp4(F_q)"
    with pytest.raises(InvalidOperand):
        quotient_at("Sp4", "epsilon")


def test_apartment():
    """Testar att apartmentet har kammaren, tre kanter och tre hörn."""
    facets = apartment("GSp4")
    kinds = [f.kind for f in facets]
    assert kinds.count("vertex") == 3
    assert kinds.count("edge") == 3
    assert kinds.count("chamber") == 1
    assert {f.name for f in facets} >= {"F_C2", "F_A1xA1", "F_A1", "F_A1t", "F_e"}


@pytest.mark.parametrize("group", GROUPS)
def test_levi_duality_round_trip(group):
    """Testar att dualiteten mellan Levi-delgrupper är en involution."""
    for lv in levi_labels(group):
        dual = dual_levi(lv)
        assert dual.side == "dual"
        assert dual_levi(dual) == lv
    assert dual_levi(LeviLabel("GL2×GSp0", "GSp4")).name == "GL1×GSp2"
    with pytest.raises(InvalidOperand):
        dual_levi(LeviLabel("GL3", group))


def test_unknown_group():
    """Testar att andra grupper avvisas."""
    with pytest.raises(Unsupported):
        check_group("G2")
