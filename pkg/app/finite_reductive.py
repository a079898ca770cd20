# app/finite_reductive.py
"""Ändliga reduktiva grupper över F_q: ordningar, kuspidala serier och
existens av unipotenta kuspidala representationer.

Allt är tabelldrivet. Räkneformler och dimensioner lagras tillsammans med
serierna; ingen Deligne–Lusztig-teori räknas om här.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import InvalidOperand, Unsupported
from .qfield import ONE, Q, QHalf, product

logger = logging.getLogger("llc.finite_reductive")


@dataclass(frozen=True)
class FiniteGroupLabel:
    name: str                 # kanoniskt namn, t.ex. "GSp4", "SO5", "SO8-", "T[C2]@Sp4"
    kind: str                 # GSp4 | Sp4 | GSp22 | Sp2xSp2 | SO_odd | SO_even | GL | U1 | O2 | torus
    n: int = 0                # rangparameter (SO_{2n+1}, SO_{2n}, GL_n)
    sign: int = 1             # +1 delad, -1 icke-delad (SO_{2n}, O2)
    torus: str = ""           # Weylklassnyckel för torusetiketter
    ambient: str = ""         # Sp4 | GSp4 för torusetiketter

    @property
    def order(self) -> QHalf:
        return group_order(self)

    @property
    def dimension(self) -> int:
        return group_dimension(self)

    def render(self) -> str:
        return self.name


_NAME_ALIASES = {
    "GSp_{2,2}": "GSp22",
    "GSp2,2": "GSp22",
    "Sp2×Sp2": "Sp2xSp2",
    "SL2xSL2": "Sp2xSp2",
    "SL2×SL2": "Sp2xSp2",
    "O2": "O2-",
    "SO2-": "U1",
}

_SO_RE = re.compile(r"^SO_?\{?(\d+)\}?(\^?[+-])?$")
_GL_RE = re.compile(r"^GL_?\{?(\d+)\}?$")
_TORUS_RE = re.compile(r"^T\[(e|A1|A1t|A1xA1|C2)\]@(Sp4|GSp4)$")


def finite_group(name: str) -> FiniteGroupLabel:
    """Tolkar en gruppetikett, t.ex. "SO5", "SO8+", "GL3", "GSp22", "T[C2]@Sp4"."""
    raw = (name or "").strip()
    key = _NAME_ALIASES.get(raw, raw)
    if key in ("GSp4", "Sp4", "GSp22", "Sp2xSp2", "U1"):
        return FiniteGroupLabel(key, key)
    if key in ("O2+", "O2-"):
        return FiniteGroupLabel(key, "O2", sign=1 if key.endswith("+") else -1)
    m = _SO_RE.match(key)
    if m:
        dim = int(m.group(1))
        suffix = (m.group(2) or "").lstrip("^")
        if dim % 2:
            if suffix:
                raise InvalidOperand(f"odd orthogonal group takes no sign: {raw!r}")
            return FiniteGroupLabel(f"SO{dim}", "SO_odd", n=(dim - 1) // 2)
        if dim < 2:
            raise InvalidOperand(f"unsupported orthogonal group {raw!r}")
        sign = -1 if suffix == "-" else 1
        return FiniteGroupLabel(f"SO{dim}{'-' if sign < 0 else '+'}", "SO_even", n=dim // 2, sign=sign)
    m = _GL_RE.match(key)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise InvalidOperand(f"GL_n needs n >= 1: {raw!r}")
        return FiniteGroupLabel(f"GL{n}", "GL", n=n)
    m = _TORUS_RE.match(key)
    if m:
        return FiniteGroupLabel(key, "torus", torus=m.group(1), ambient=m.group(2))
    raise Unsupported(f"unsupported finite group label: {raw!r}")


# ----------------------- Ordningar -----------------------
def _qm(k: int, c: int = -1) -> QHalf:
    """q^k + c."""
    return Q**k + c


# Torusordningar för Sp4; GSp4 får en extra faktor (q-1) från centrum
_SP4_TORI = {
    "e": lambda: _qm(1) ** 2,
    "A1": lambda: _qm(2),
    "A1t": lambda: _qm(2),
    "A1xA1": lambda: _qm(1, 1) ** 2,
    "C2": lambda: _qm(2, 1),
}

ELLIPTIC_TORI = ("A1xA1", "C2")


def torus_order(group: str, weyl_key: str) -> QHalf:
    """|T_w(F_q)| för den maximala torus som svarar mot Weylklassen w."""
    if group not in ("Sp4", "GSp4"):
        raise Unsupported(f"tori are tabulated for Sp4 and GSp4 only, not {group!r}")
    if weyl_key not in _SP4_TORI:
        raise InvalidOperand(f"unknown Weyl class {weyl_key!r}")
    order = _SP4_TORI[weyl_key]()
    return order * _qm(1) if group == "GSp4" else order


def group_order(label: FiniteGroupLabel) -> QHalf:
    kind, n = label.kind, label.n
    if kind == "GSp4":
        return _qm(1) * Q**4 * _qm(2) * _qm(4)
    if kind == "Sp4":
        return Q**4 * _qm(2) * _qm(4)
    if kind == "GSp22":
        return _qm(1) * Q**2 * _qm(2) ** 2
    if kind == "Sp2xSp2":
        return Q**2 * _qm(2) ** 2
    if kind == "GL":
        return Q ** (n * (n - 1) // 2) * product(_qm(i) for i in range(1, n + 1))
    if kind == "SO_odd":
        return Q ** (n * n) * product(_qm(2 * i) for i in range(1, n + 1))
    if kind == "SO_even":
        return Q ** (n * (n - 1)) * _qm(n, -label.sign) * product(_qm(2 * i) for i in range(1, n))
    if kind == "U1":
        return _qm(1, 1)
    if kind == "O2":
        return 2 * _qm(1, -label.sign)
    if kind == "torus":
        return torus_order(label.ambient, label.torus)
    raise Unsupported(f"no order formula for {label.name}")


def group_dimension(label: FiniteGroupLabel) -> int:
    kind, n = label.kind, label.n
    fixed = {"GSp4": 11, "Sp4": 10, "GSp22": 7, "Sp2xSp2": 6, "U1": 1, "O2": 1}
    if kind in fixed:
        return fixed[kind]
    if kind == "GL":
        return n * n
    if kind == "SO_odd":
        return n * (2 * n + 1)
    if kind == "SO_even":
        return n * (2 * n - 1)
    if kind == "torus":
        return 3 if label.ambient == "GSp4" else 2
    raise Unsupported(f"no dimension for {label.name}")


def positive_root_count(label: FiniteGroupLabel) -> int:
    """Antalet positiva rötter, dvs q-potensen i gruppordningen."""
    kind, n = label.kind, label.n
    if kind in ("GSp4", "Sp4"):
        return 4
    if kind in ("GSp22", "Sp2xSp2"):
        return 2
    if kind == "GL":
        return n * (n - 1) // 2
    if kind == "SO_odd":
        return n * n
    if kind == "SO_even":
        return n * (n - 1)
    return 0


# ----------------------- Unipotenta kuspidala -----------------------
# dim θ10 = q(q-1)^2/2
THETA10_DIM = Q * _qm(1) ** 2 / 2


@dataclass(frozen=True)
class UnipotentCuspidal:
    exists: bool
    dimension: Optional[QHalf] = None   # None när dimensionen inte är tabulerad
    parameter: Optional[int] = None     # s i n = s^2+s, 4s^2 eller (2s+1)^2


def _solve(n: int, f) -> Optional[int]:
    s = 1
    while f(s) <= n:
        if f(s) == n:
            return s
        s += 1
    return None


def has_unipotent_cuspidal(label: FiniteGroupLabel) -> UnipotentCuspidal:
    """Avgör om gruppen har en (unik) unipotent kuspidal representation."""
    kind, n = label.kind, label.n
    if kind in ("Sp4", "GSp4"):
        return UnipotentCuspidal(True, THETA10_DIM, 1)
    if kind in ("GSp22", "Sp2xSp2", "GL"):
        return UnipotentCuspidal(False)
    if kind == "SO_odd":
        s = _solve(n, lambda t: t * t + t)
        if s is None:
            return UnipotentCuspidal(False)
        # SO5 är isogen med PSp4: samma θ10
        return UnipotentCuspidal(True, THETA10_DIM if n == 2 else None, s)
    if kind == "SO_even":
        f = (lambda t: 4 * t * t) if label.sign > 0 else (lambda t: (2 * t + 1) ** 2)
        s = _solve(n, f)
        return UnipotentCuspidal(s is not None, None, s)
    # anisotropa tori: trivialkaraktären är kuspidal
    if kind == "U1" or (kind == "O2" and label.sign < 0):
        return UnipotentCuspidal(True, ONE)
    if kind == "torus":
        return UnipotentCuspidal(label.torus in ELLIPTIC_TORI, ONE if label.torus in ELLIPTIC_TORI else None)
    return UnipotentCuspidal(False)


# ----------------------- Kuspidala serier -----------------------
@dataclass(frozen=True)
class CuspidalClass:
    ambient: str                    # kanoniskt gruppnamn
    series: str                     # stabil nyckel, t.ex. "theta10", "O2xU1"
    semisimple: str                 # egenvärdesmönster för s
    condition: str                  # medlemsvillkor, symboliskt
    centralizer: str                # Z_{G^∨}(s)
    class_count: Optional[QHalf]    # antal halvenkla klasser (None = ej tabulerat)
    enhancements: int               # |E(Z(s), 1)| per klass
    dimension: Optional[QHalf]      # dimension per medlem
    unipotent: bool
    singular: bool                  # ger k_F-singulära superkuspidaler

    @property
    def count(self) -> Optional[QHalf]:
        if self.class_count is None:
            return None
        return self.class_count * self.enhancements


def _dl_dim(group: FiniteGroupLabel, torus: QHalf) -> QHalf:
    """dim ±R_T^θ = |G|_{p'} / |T|."""
    order = group_order(group)
    return order / Q ** positive_root_count(group) / torus


@lru_cache(maxsize=None)
def _tables() -> dict[str, tuple[CuspidalClass, ...]]:
    gsp22, gsp4, sp4, sp2sq = (finite_group(n) for n in ("GSp22", "GSp4", "Sp4", "Sp2xSp2"))
    half_q_minus_1 = _qm(1) / 2
    gsp22_torus = _qm(2) * _qm(1, 1)
    sl2_torus = _qm(1, 1)
    return {
        "GSp22": (
            CuspidalClass(
                "GSp22", "rho", "(λ1,λ1^q),(λ2,λ2^q)",
                "λ1,λ2 ∈ F_{q^2} \\ F_q, not both λi^{q-1} = -1",
                "(Res T × Res T)/F_q^×",
                _qm(1) * _qm(2) / 4, 1, _dl_dim(gsp22, gsp22_torus), False, False,
            ),
            CuspidalClass(
                "GSp22", "rho_pm", "(λ1,λ1^q),(λ2,λ2^q)",
                "λ1^{q-1} = λ2^{q-1} = -1",
                "(Res T × Res T)/F_q^× ⋊ μ2",
                half_q_minus_1, 2, _dl_dim(gsp22, gsp22_torus) / 2, False, True,
            ),
        ),
        "GSp4": (
            CuspidalClass(
                "GSp4", "theta10_twist", "s ∈ Z(GSpin5)", "any central s",
                "GSpin5", _qm(1), 1, THETA10_DIM, True, True,
            ),
            CuspidalClass(
                "GSp4", "RT_C2", "regular in T[C2]", "θ regular",
                "T[C2]", None, 1, _dl_dim(gsp4, torus_order("GSp4", "C2")), False, False,
            ),
            CuspidalClass(
                "GSp4", "RT_A1xA1", "regular in T[A1xA1]", "θ regular",
                "T[A1xA1]", None, 1, _dl_dim(gsp4, torus_order("GSp4", "A1xA1")), False, False,
            ),
        ),
        "Sp4": (
            CuspidalClass(
                "Sp4", "theta10", "1,1,1,1,1", "s = 1",
                "SO5", ONE, 1, THETA10_DIM, True, True,
            ),
            CuspidalClass(
                "Sp4", "O2xU1", "1,-1,-1,α^{±1}", "α ∈ μ_{q+1} \\ {±1}",
                "O2 × U1", half_q_minus_1, 2, None, False, False,
            ),
            CuspidalClass(
                "Sp4", "isotropic_torus", "1,α^{±1},β^{±1}", "α ≠ β^{±1} ∈ μ_{q+1} \\ {±1}",
                "T[A1xA1]", _qm(1) * _qm(1, -3) / 8, 1,
                _dl_dim(sp4, torus_order("Sp4", "A1xA1")), False, False,
            ),
            CuspidalClass(
                "Sp4", "anisotropic_torus", "1,α,α^q,α^{q^2},α^{q^3}", "α ∈ μ_{q^2+1} \\ {±1}",
                "T[C2]", _qm(2) / 4, 1, _dl_dim(sp4, torus_order("Sp4", "C2")), False, False,
            ),
        ),
        "Sp2xSp2": (
            CuspidalClass(
                "Sp2xSp2", "RT_RT", "(θ1,θ2) regular", "θ1, θ2 ∈ μ_{q+1} \\ {±1}",
                "U1 × U1", None, 1, _dl_dim(sp2sq, sl2_torus**2), False, False,
            ),
            CuspidalClass(
                "Sp2xSp2", "R_pm_theta0", "(θ0, θ0)", "θ0 of order 2 on U1",
                "(U1 × U1) ⋊ μ2²", ONE, 2, _dl_dim(sp2sq, sl2_torus**2) / 4, False, True,
            ),
        ),
    }


def cuspidal_classes(label: FiniteGroupLabel) -> tuple[CuspidalClass, ...]:
    tables = _tables()
    if label.kind not in tables:
        raise Unsupported(f"cuspidal classification is tabulated for GSp22, GSp4, Sp4 only, not {label.name}")
    return tables[label.kind]


def cuspidal_class(group: str, series: str) -> CuspidalClass:
    for c in cuspidal_classes(finite_group(group)):
        if c.series == series:
            return c
    raise InvalidOperand(f"no cuspidal series {series!r} for {group}")


def finite_tables() -> list[dict]:
    """Alla kuspidala serier som JSON-vänliga poster (`tables --finite`)."""
    out = []
    for name in ("GSp22", "GSp4", "Sp4", "Sp2xSp2"):
        label = finite_group(name)
        for c in cuspidal_classes(label):
            out.append({
                "group": name,
                "order": group_order(label).render(),
                "series": c.series,
                "semisimple": c.semisimple,
                "condition": c.condition,
                "centralizer": c.centralizer,
                "class_count": c.class_count.render() if c.class_count is not None else None,
                "enhancements": c.enhancements,
                "dimension": c.dimension.render() if c.dimension is not None else None,
                "unipotent": c.unipotent,
                "singular": c.singular,
            })
    logger.debug("Built %d finite cuspidal rows", len(out))
    return out


def is_prime_power(q0: int) -> bool:
    if q0 < 2:
        return False
    p = next(d for d in range(2, q0 + 1) if q0 % d == 0)
    while q0 % p == 0:
        q0 //= p
    return q0 == 1


__all__ = [
    "FiniteGroupLabel",
    "CuspidalClass",
    "UnipotentCuspidal",
    "THETA10_DIM",
    "ELLIPTIC_TORI",
    "finite_group",
    "group_order",
    "group_dimension",
    "positive_root_count",
    "torus_order",
    "has_unipotent_cuspidal",
    "cuspidal_classes",
    "cuspidal_class",
    "finite_tables",
    "is_prime_power",
]
