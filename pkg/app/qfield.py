# app/qfield.py
"""Exakt aritmetik i kroppen Q(q^{1/2}).

Generatorn s = q^{1/2} är en positiv sympy-symbol; heltalspotenser av q är
jämna potenser av s. Ett QHalf-värde lagras kanoniskt som

    s^shift * num(s) / den(s)

där num och den är polynom över QQ med nollskilda konstanttermer,
gcd(num, den) = 1 och den är moniskt.
"""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import sympy
from sympy import Poly
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from .errors import EvaluationPole, InvalidOperand

logger = logging.getLogger("llc.qfield")

_S = sympy.Symbol("s", positive=True)  # q^{1/2}
_Q = sympy.Symbol("q", positive=True)

_TEXT_RE = re.compile(r"^[0-9q+\-*/^{}() ]+$")

Scalar = Union[int, Fraction]


def _poly(expr) -> Poly:
    return Poly(expr, _S, domain=QQ)


def _frac(c) -> Fraction:
    r = sympy.Rational(c) if isinstance(c, sympy.Basic) else QQ.to_sympy(QQ.convert(c))
    return Fraction(int(r.p), int(r.q))


def _spow(k: int) -> Poly:
    return _poly(_S**k)


def _strip(p: Poly) -> tuple[Poly, int]:
    """Flyttar den lägsta s-potensen ut ur polynomet."""
    if p.is_zero:
        return p, 0
    k = min(m[0] for m in p.monoms())
    if k == 0:
        return p, 0
    return Poly.from_dict({(m[0] - k,): c for m, c in p.terms()}, _S, domain=QQ), k


class QHalf:
    """Rationell funktion i q^{1/2} med rationella koefficienter, alltid kanonisk."""

    __slots__ = ("num", "den", "shift")

    def __init__(self, num: Poly, den: Poly | None = None, shift: int = 0):
        if den is None:
            den = _poly(1)
        if den.is_zero:
            raise InvalidOperand("denominator is the zero polynomial")
        if num.is_zero:
            self.num, self.den, self.shift = _poly(0), _poly(1), 0
            return
        num, kn = _strip(num)
        den, kd = _strip(den)
        g = num.gcd(den)
        if not g.is_one:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC()
        if lc != QQ.one:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        self.num, self.den, self.shift = num, den, shift + kn - kd

    # --- konstruktion ---
    @classmethod
    def const(cls, c: Scalar) -> "QHalf":
        c = Fraction(c)
        return cls(_poly(sympy.Rational(c.numerator, c.denominator)))

    @classmethod
    def from_sympy(cls, expr) -> "QHalf":
        """Bygger ett värde ur ett sympy-uttryck i s (eller q, som ersätts med s²)."""
        expr = sympy.sympify(expr).subs(_Q, _S**2)
        num_e, den_e = sympy.fraction(sympy.together(expr))
        try:
            return cls(_poly(sympy.expand(num_e)), _poly(sympy.expand(den_e)))
        except (PolynomialError, CoercionFailed) as exc:
            raise InvalidOperand(f"not a rational function of q^(1/2): {expr}") from exc

    @classmethod
    def _coerce(cls, other) -> "QHalf":
        if isinstance(other, QHalf):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise InvalidOperand(f"cannot combine QHalf with {type(other).__name__}")

    # --- egenskaper ---
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_polynomial(self) -> bool:
        return self.den.is_one and self.shift >= 0

    def to_sympy(self):
        return self.num.as_expr() * _S**self.shift / self.den.as_expr()

    # --- aritmetik ---
    def __add__(self, other) -> "QHalf":
        b = self._coerce(other)
        if self.is_zero:
            return b
        if b.is_zero:
            return self
        m = min(self.shift, b.shift)
        num = self.num * b.den * _spow(self.shift - m) + b.num * self.den * _spow(b.shift - m)
        return QHalf(num, self.den * b.den, m)

    __radd__ = __add__

    def __neg__(self) -> "QHalf":
        return QHalf(-self.num, self.den, self.shift)

    def __sub__(self, other) -> "QHalf":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QHalf":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QHalf":
        b = self._coerce(other)
        return QHalf(self.num * b.num, self.den * b.den, self.shift + b.shift)

    __rmul__ = __mul__

    def inverse(self) -> "QHalf":
        if self.is_zero:
            raise InvalidOperand("division by zero")
        return QHalf(self.den, self.num, -self.shift)

    def __truediv__(self, other) -> "QHalf":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "QHalf":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "QHalf":
        if not isinstance(n, int):
            raise InvalidOperand("only integer exponents are supported")
        base = self if n >= 0 else self.inverse()
        return QHalf(base.num**abs(n), base.den**abs(n), base.shift * abs(n))

    def __eq__(self, other) -> bool:
        try:
            b = self._coerce(other)
        except InvalidOperand:
            return NotImplemented
        return self.shift == b.shift and self.num == b.num and self.den == b.den

    def __hash__(self) -> int:
        return hash((
            self.shift,
            tuple(_frac(c) for c in self.num.all_coeffs()),
            tuple(_frac(c) for c in self.den.all_coeffs()),
        ))

    def __repr__(self) -> str:
        return f"QHalf({self.render()})"

    def __str__(self) -> str:
        return self.render()

    # --- text ---
    def render(self) -> str:
        """Textform: `(termer)/(termer)` med termer `c*q^{a/2}`."""
        num, den = self.num, self.den
        if self.shift >= 0:
            num = num * _spow(self.shift)
        else:
            den = den * _spow(-self.shift)
        num_s = _render_terms(num)
        if den.is_one:
            return num_s
        return f"({num_s})/({_render_terms(den)})"

    @classmethod
    def parse(cls, text: str) -> "QHalf":
        if not text or not _TEXT_RE.match(text):
            raise InvalidOperand(f"malformed q-expression: {text!r}")
        src = text.replace("{", "(").replace("}", ")").replace("^", "**")
        try:
            expr = sympy.sympify(src, locals={"q": _S**2})
        except (sympy.SympifyError, SyntaxError, TypeError, ValueError) as exc:
            raise InvalidOperand(f"malformed q-expression: {text!r}") from exc
        if expr.has(sympy.zoo, sympy.nan, sympy.oo):
            raise InvalidOperand(f"expression has no finite value: {text!r}")
        return cls.from_sympy(expr)

    # --- utvärdering ---
    def evaluate(self, q0: int, symbolic_sqrt: bool = True):
        return qh_eval(self, q0, symbolic_sqrt)


def _render_exp(k: int) -> str:
    e = Fraction(k, 2)
    return f"q^{{{e.numerator}}}" if e.denominator == 1 else f"q^{{{e.numerator}/{e.denominator}}}"


def _render_terms(p: Poly) -> str:
    terms = sorted(((m[0], _frac(c)) for m, c in p.terms()), reverse=True)
    if not terms:
        return "0"
    out = []
    for i, (k, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        coeff = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        if k == 0:
            body = coeff
        elif a == 1:
            body = _render_exp(k)
        else:
            body = f"{coeff}*{_render_exp(k)}"
        if i == 0:
            out.append(f"-{body}" if sign == "-" else body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ----------------------- Konstanter -----------------------
ZERO = QHalf.const(0)
ONE = QHalf.const(1)
SQRT_Q = QHalf(_poly(_S))
Q = QHalf(_poly(_S**2))


def qpow(e: Scalar) -> QHalf:
    """q^e för halvtal e."""
    k = Fraction(e) * 2
    if k.denominator != 1:
        raise InvalidOperand(f"q-exponent must be a half-integer, got {e}")
    return SQRT_Q ** int(k)


def qh_arith(a: QHalf, b: QHalf, op: str) -> QHalf:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InvalidOperand(f"unknown operation: {op}")


# ----------------------- Utvärdering -----------------------
@dataclass(frozen=True)
class QValue:
    """Värdet rational + sqrt_coeff·√q0."""
    rational: Fraction
    sqrt_coeff: Fraction
    q0: int

    @property
    def is_rational(self) -> bool:
        return self.sqrt_coeff == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise InvalidOperand(f"value at q={self.q0} is irrational")
        return self.rational

    def sign(self) -> int:
        a, b, n = self.rational, self.sqrt_coeff, self.q0
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # a och b har olika tecken: jämför a² mot b²·n
        if a > 0:
            return 1 if a * a > b * b * n else -1
        return 1 if b * b * n > a * a else -1

    def __mul__(self, other: "QValue") -> "QValue":
        if self.q0 != other.q0:
            raise InvalidOperand("values evaluated at different points")
        a, b, c, d = self.rational, self.sqrt_coeff, other.rational, other.sqrt_coeff
        return _fold(a * c + b * d * self.q0, a * d + b * c, self.q0)

    def to_sympy(self):
        return sympy.Rational(self.rational.numerator, self.rational.denominator) + sympy.Rational(
            self.sqrt_coeff.numerator, self.sqrt_coeff.denominator
        ) * sympy.sqrt(self.q0)

    def render(self) -> str:
        parts = []
        if self.rational != 0 or self.sqrt_coeff == 0:
            parts.append(str(self.rational))
        if self.sqrt_coeff != 0:
            parts.append(f"({self.sqrt_coeff})*sqrt({self.q0})")
        return " + ".join(parts)


def _fold(a: Fraction, b: Fraction, q0: int) -> QValue:
    r = math.isqrt(q0)
    if r * r == q0:
        return QValue(a + b * r, Fraction(0), q0)
    return QValue(a, b, q0)


def _eval_poly(p: Poly, q0: int) -> tuple[Fraction, Fraction]:
    even, odd = Fraction(0), Fraction(0)
    for m, c in p.terms():
        k = m[0]
        if k % 2 == 0:
            even += _frac(c) * Fraction(q0) ** (k // 2)
        else:
            odd += _frac(c) * Fraction(q0) ** ((k - 1) // 2)
    return even, odd


def qh_eval(a: QHalf, q0: int, symbolic_sqrt: bool = True):
    """Utvärderar a vid q = q0; polar ger EvaluationPole."""
    if not isinstance(q0, int) or q0 <= 0:
        raise InvalidOperand(f"evaluation point must be a positive integer, got {q0!r}")
    n = _fold(*_eval_poly(a.num, q0), q0)
    d = _fold(*_eval_poly(a.den, q0), q0)
    if d.rational == 0 and d.sqrt_coeff == 0:
        raise EvaluationPole(f"{a.render()} has a pole at q={q0}")
    # multiplicera med konjugatet
    norm = d.rational * d.rational - d.sqrt_coeff * d.sqrt_coeff * q0
    conj = QValue(d.rational / norm, -d.sqrt_coeff / norm, q0)
    value = n * conj
    if a.shift % 2 == 0:
        value = value * QValue(Fraction(q0) ** (a.shift // 2), Fraction(0), q0)
    else:
        value = value * _fold(Fraction(0), Fraction(q0) ** ((a.shift - 1) // 2), q0)
    logger.debug("eval %s at q=%d -> %s", a.render(), q0, value.render())
    if symbolic_sqrt:
        return value
    return value.to_sympy()


# ----------------------- q-potenser -----------------------
def prime_to_p_part(order: QHalf) -> tuple[QHalf, int]:
    """Delar upp q^N·m(q) i (m, N) med m(0) ≠ 0."""
    if not order.den.is_one or order.shift < 0 or order.is_zero:
        raise InvalidOperand(f"not a polynomial in q: {order.render()}")
    if order.shift % 2 or any(m[0] % 2 for m in order.num.monoms()):
        raise InvalidOperand(f"not a polynomial in q: {order.render()}")
    return QHalf(order.num), order.shift // 2


# ----------------------- Faktoriserad form -----------------------
@dataclass(frozen=True)
class QFactored:
    """unit · q^{q_power} · Π f_i^{m_i}, f_i irreducibla heltalspolynom."""
    unit: Fraction
    q_power: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> QHalf:
        out = QHalf.const(self.unit) * qpow(self.q_power)
        for f, m in self.factors:
            expr = f.as_expr().subs(_Q, _S**2)
            out = out * QHalf(_poly(expr)) ** m
        return out

    def pretty(self) -> str:
        num, den = [], []
        for f, m in self.factors:
            body = f"({_pretty_factor(f)})"
            target = num if m > 0 else den
            target.append(body if abs(m) == 1 else f"{body}^{abs(m)}")
        if self.q_power > 0:
            num.insert(0, _render_exp(int(self.q_power * 2)))
        elif self.q_power < 0:
            den.insert(0, _render_exp(int(-self.q_power * 2)))
        u = self.unit
        top = "*".join(num)
        if u.numerator != 1 or not top:
            top = f"{u.numerator}*{top}" if top else str(u.numerator)
        if u.denominator != 1:
            den.insert(0, str(u.denominator))
        return top if not den else f"{top}/({'*'.join(den)})"


def _pretty_factor(f: Poly) -> str:
    gen = f.gens[0]
    terms = []
    for m, c in sorted(f.terms(), reverse=True):
        k = m[0] * (2 if gen == _Q else 1)
        c = _frac(c)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        elif a == 1:
            body = _render_exp(k)
        else:
            body = f"{a}*{_render_exp(k)}"
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _factor_side(p: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    if all(m[0] % 2 == 0 for m in p.monoms()):
        p = Poly(p.as_expr().subs(_S, sympy.sqrt(_Q)), _Q, domain=QQ)
    c, pz = p.clear_denoms(convert=True)
    content, fl = pz.factor_list()
    unit = Fraction(int(content)) / _frac(c)
    return unit, [(f, e) for f, e in fl]


def factor(x: QHalf) -> QFactored:
    if x.is_zero:
        raise InvalidOperand("cannot factor zero")
    un, fn = _factor_side(x.num)
    ud, fd = _factor_side(x.den)
    factors = fn + [(f, -e) for f, e in fd]
    factors.sort(key=lambda fe: (fe[0].degree(), str(fe[0].as_expr())))
    return QFactored(un / ud, Fraction(x.shift, 2), tuple(factors))


def product(values: Iterable[QHalf]) -> QHalf:
    out = ONE
    for v in values:
        out = out * v
    return out
