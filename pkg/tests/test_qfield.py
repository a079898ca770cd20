import random
from fractions import Fraction

import pytest

from app.errors import EvaluationPole, InvalidOperand
from app.qfield import (
    ONE,
    Q,
    SQRT_Q,
    ZERO,
    QHalf,
    factor,
    prime_to_p_part,
    product,
    qh_arith,
    qh_eval,
    qpow,
)


def random_value(rng: random.Random) -> QHalf:
    """Slumpmässigt Laurentpolynom i q^{1/2} delat med ett polynom utan nollställe i 0."""
    num = sum((Fraction(rng.randint(-5, 5), rng.randint(1, 3)) * SQRT_Q ** k for k in range(-2, 4)), ZERO)
    den = ONE + sum((rng.randint(0, 3) * SQRT_Q ** k for k in range(1, 3)), ZERO)
    return num / den


def test_basic_identities():
    """Testar att (q-1)(q+1) = q²-1 och (q^{1/2})² = q."""
    assert (Q - ONE) * (Q + ONE) == Q * Q - ONE
    assert SQRT_Q * SQRT_Q == Q
    assert qpow(Fraction(1, 2)) == SQRT_Q
    assert qpow(-1) * Q == ONE


def test_canonical_form():
    """Testar att förkortning ger samma representant och samma hash."""
    a = (Q * Q - ONE) / (Q - ONE)
    assert a == Q + ONE
    assert hash(a) == hash(Q + ONE)
    assert (Q / Q) == ONE
    assert ZERO.is_zero and (Q - Q).is_zero


def test_field_axioms_on_random_values():
    """Testar distributivitet och invers på slumpade värden (fast frö)."""
    rng = random.Random(20240601)
    for _ in range(25):
        a, b, c = (random_value(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a - a == ZERO
        if not b.is_zero:
            assert a / b * b == a


def test_parse_and_render():
    """Testar textformen åt båda hållen."""
    assert QHalf.parse("q^{1/2}") == SQRT_Q
    assert QHalf.parse("(q-1)/(q+1)") == (Q - ONE) / (Q + ONE)
    assert (Q - ONE).render() == "q^{1} - 1"
    assert QHalf.const(3).render() == "3"
    assert QHalf.parse((Q * Q + ONE).render()) == Q * Q + ONE


@pytest.mark.parametrize("text", ["", "import os", "q^^2", "1/0"])
def test_parse_rejects(text):
    """Testar att felaktiga uttryck avvisas."""
    with pytest.raises(InvalidOperand):
        QHalf.parse(text)


def test_invalid_operations():
    """Testar division med noll, icke-halvtaliga exponenter och okända operationer."""
    with pytest.raises(InvalidOperand):
        ONE / ZERO
    with pytest.raises(InvalidOperand):
        qpow(Fraction(1, 3))
    with pytest.raises(InvalidOperand):
        qh_arith(ONE, Q, "pow")
    assert qh_arith(Q, ONE, "sub") == Q - ONE


def test_evaluation_with_symbolic_sqrt():
    """Testar att q^{3/2}/(2(q+1)(q²-1)) vid q=3 blir (3/64)·√3."""
    x = qpow(Fraction(3, 2)) / (2 * (Q + ONE) * (Q * Q - ONE))
    v = qh_eval(x, 3)
    assert v.rational == 0
    assert v.sqrt_coeff == Fraction(3, 64)
    assert v.render() == "(3/64)*sqrt(3)"


def test_evaluation_at_square_folds_root():
    """Testar att √q blir rationellt när q0 är en kvadrat."""
    assert qh_eval(SQRT_Q, 4).as_rational() == 2
    assert qh_eval(Q / (Q + ONE), 3).as_rational() == Fraction(3, 4)
    with pytest.raises(InvalidOperand):
        qh_eval(SQRT_Q, 3).as_rational()


def test_evaluation_sign():
    """Testar tecknet för a + b√q0 när a och b har olika tecken."""
    assert qh_eval(SQRT_Q - 2, 3).sign() == -1
    assert qh_eval(SQRT_Q - 1, 3).sign() == 1
    assert qh_eval(ZERO, 3).sign() == 0


def test_evaluation_errors():
    """Testar poler och ogiltiga utvärderingspunkter."""
    with pytest.raises(EvaluationPole):
        qh_eval(ONE / (Q - ONE), 1)
    with pytest.raises(InvalidOperand):
        qh_eval(Q, 0)


def test_prime_to_p_part():
    """Testar uppdelningen q^N·m(q) med m(0) ≠ 0."""
    part, n = prime_to_p_part(Q ** 4 * (Q - ONE))
    assert n == 4
    assert part == Q - ONE
    with pytest.raises(InvalidOperand):
        prime_to_p_part(SQRT_Q)


def test_factor_round_trip():
    """Testar att den faktoriserade formen expanderar tillbaka och visar q-faktorerna."""
    x = qpow(Fraction(3, 2)) / (2 * (Q + ONE) * (Q * Q - ONE))
    f = factor(x)
    assert f.expand() == x
    assert f.q_power == Fraction(3, 2)
    assert f.unit == Fraction(1, 2)
    g = factor(Q * Q - ONE)
    assert len(g.factors) == 2
    assert "(q^{1} - 1)" in g.pretty() and "(q^{1} + 1)" in g.pretty()
    with pytest.raises(InvalidOperand):
        factor(ZERO)


def test_product():
    """Testar produkten över en lista."""
    assert product([Q, Q, SQRT_Q]) == qpow(Fraction(5, 2))
    assert product([]) == ONE
