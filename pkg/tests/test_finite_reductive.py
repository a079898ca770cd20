import pytest

from app.errors import InvalidOperand, Unsupported
from app.finite_reductive import (
    THETA10_DIM,
    cuspidal_class,
    cuspidal_classes,
    finite_group,
    finite_tables,
    group_dimension,
    group_order,
    has_unipotent_cuspidal,
    is_prime_power,
    torus_order,
)
from app.qfield import ONE, Q, prime_to_p_part


@pytest.mark.parametrize("name,order", [
    ("Sp4", Q ** 4 * (Q ** 2 - ONE) * (Q ** 4 - ONE)),
    ("GSp4", (Q - ONE) * Q ** 4 * (Q ** 2 - ONE) * (Q ** 4 - ONE)),
    ("GSp_{2,2}", (Q - ONE) * Q ** 2 * (Q ** 2 - ONE) ** 2),
    ("SL2×SL2", Q ** 2 * (Q ** 2 - ONE) ** 2),
    ("GL2", Q * (Q - ONE) * (Q ** 2 - ONE)),
    ("SO5", Q ** 4 * (Q ** 2 - ONE) * (Q ** 4 - ONE)),
    ("SO4+", Q ** 2 * (Q ** 2 - ONE) * (Q ** 2 - ONE)),
    ("SO4-", Q ** 2 * (Q ** 2 + ONE) * (Q ** 2 - ONE)),
    ("SO2-", Q + ONE),
])
def test_group_orders(name, order):
    """Testar gruppordningarna för kvoterna och de klassiska grupperna."""
    assert group_order(finite_group(name)) == order


def test_dimensions_and_aliases():
    """Testar dimensioner och namnalias."""
    assert group_dimension(finite_group("GSp4")) == 11
    assert group_dimension(finite_group("SO5")) == 10
    assert finite_group("GSp2,2").name == "GSp22"
    assert finite_group("SO{8}^-").name == "SO8-"
    assert finite_group("O2").kind == "O2"


def test_torus_orders():
    """Testar att de elliptiska torierna har ordning (q+1)² och q²+1 på Sp4."""
    assert torus_order("Sp4", "A1xA1") == (Q + ONE) ** 2
    assert torus_order("Sp4", "C2") == Q ** 2 + ONE
    assert torus_order("GSp4", "C2") == (Q ** 2 + ONE) * (Q - ONE)
    with pytest.raises(Unsupported):
        torus_order("G2", "e")


@pytest.mark.parametrize("name", ["E8", "Spin7", "SO0", "GL0"])
def test_unsupported_labels(name):
    """Testar att okända eller för små grupper avvisas."""
    with pytest.raises((Unsupported, InvalidOperand)):
        finite_group(name)


@pytest.mark.parametrize("name,exists", [
    ("SO5", True),
    ("SO7", False),
    ("SO13", True),
    ("SO25", True),
    ("SO8+", True),
    ("SO10+", False),
    ("SO18-", True),
    ("SO8-", False),
    ("GL3", False),
    ("Sp4", True),
    ("GSp22", False),
    ("U1", True),
])
def test_unipotent_cuspidal_predicate(name, exists):
    """Testar kriteriet n = s²+s, 4s², (2s+1)² för unipotenta kuspidala."""
    assert has_unipotent_cuspidal(finite_group(name)).exists is exists


def test_theta10_dimension():
    """Testar att θ10 har dimension q(q-1)²/2 för både Sp4 och SO5."""
    assert has_unipotent_cuspidal(finite_group("Sp4")).dimension == THETA10_DIM
    assert has_unipotent_cuspidal(finite_group("SO5")).dimension == Q * (Q - ONE) ** 2 / 2
    assert has_unipotent_cuspidal(finite_group("SO13")).dimension is None


def test_deligne_lusztig_dimensions():
    """Testar dim ±R_T^θ = |G|_{p'}/|T| för de elliptiska torierna."""
    order, _ = prime_to_p_part(group_order(finite_group("Sp4")))
    assert cuspidal_class("Sp4", "anisotropic_torus").dimension == order / (Q ** 2 + ONE)
    assert cuspidal_class("Sp4", "isotropic_torus").dimension == order / (Q + ONE) ** 2
    assert cuspidal_class("Sp2xSp2", "R_pm_theta0").dimension == (Q - ONE) ** 2 / 4
    assert cuspidal_class("GSp22", "rho_pm").dimension == (Q - ONE) ** 2 / 2


def test_cuspidal_series():
    """Testar seriernas nycklar och vilka som är unipotenta eller singulära."""
    sp4 = cuspidal_classes(finite_group("Sp4"))
    assert [c.series for c in sp4] == ["theta10", "O2xU1", "isotropic_torus", "anisotropic_torus"]
    assert [c.series for c in sp4 if c.unipotent] == ["theta10"]
    assert cuspidal_class("Sp4", "O2xU1").dimension is None
    assert cuspidal_class("GSp22", "rho_pm").count == Q - ONE
    with pytest.raises(InvalidOperand):
        cuspidal_class("Sp4", "theta11")
    with pytest.raises(Unsupported):
        cuspidal_classes(finite_group("GL2"))


def test_finite_tables_rows():
    """Testar att JSON-tabellen har en rad per serie."""
    rows = finite_tables()
    assert len(rows) == 11
    assert {r["group"] for r in rows} == {"GSp22", "GSp4", "Sp4", "Sp2xSp2"}
    assert all(isinstance(r["order"], str) for r in rows)


@pytest.mark.parametrize("q0,expected", [(2, True), (9, True), (27, True), (6, False), (1, False), (12, False)])
def test_prime_power(q0, expected):
    """Testar kontrollen att q0 är en primtalspotens."""
    assert is_prime_power(q0) is expected
