# app/rootdata.py
"""Rotdata, Weylgrupp, nilpotenta banor, Levi-delgrupper och parahoriska
kvoter för Sp4 och GSp4."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from .errors import InvalidOperand, Unsupported

logger = logging.getLogger("llc.rootdata")

GROUPS = ("Sp4", "GSp4")


def check_group(group: str) -> str:
    if group not in GROUPS:
        raise Unsupported(f"unsupported group: {group!r} (expected Sp4 or GSp4)")
    return group


# ----------------------- Rotdatum -----------------------
@dataclass(frozen=True)
class RootDatum:
    group: str
    basis: tuple[str, ...]            # etiketter för X^*(T)
    roots: tuple[tuple[int, ...], ...]
    coroots: tuple[tuple[int, ...], ...]
    simple: dict[str, tuple[int, ...]]      # alpha, beta
    simple_coroots: dict[str, tuple[int, ...]]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def pairing(self, x, y) -> int:
        """⟨x, y⟩ mellan karaktär x och kokaraktär y (standardbaser är duala)."""
        return int(np.dot(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)))

    def coroot_of(self, root) -> tuple[int, ...]:
        return self.coroots[self.roots.index(tuple(root))]

    def reflection_matrix(self, root) -> np.ndarray:
        """s_a(x) = x − ⟨x, a^∨⟩a som heltalsmatris på X^*."""
        a = np.asarray(root, dtype=np.int64)
        c = np.asarray(self.coroot_of(root), dtype=np.int64)
        return np.eye(self.rank, dtype=np.int64) - np.outer(a, c)

    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        a, b = (np.asarray(self.simple[k]) for k in ("alpha", "beta"))
        out = []
        for r in self.roots:
            # lös r = m·α + n·β på de koordinater där α, β är oberoende
            m, n = _coefficients(np.asarray(r), a, b)
            if m >= 0 and n >= 0:
                out.append(r)
        return tuple(out)


def _coefficients(r: np.ndarray, a: np.ndarray, b: np.ndarray) -> tuple[int, int]:
    mat = sympy.Matrix(np.column_stack([a, b]).tolist())
    sol, params = mat.gauss_jordan_solve(sympy.Matrix(r.tolist()))
    return int(sol[0]), int(sol[1])


def _coroot(group: str, root: tuple[int, ...]) -> tuple[int, ...]:
    # koroten ser bara (ε1, ε2)-delen; för GSp4 är ε0^∨-koordinaten 0
    p = np.asarray(root[-2:], dtype=np.int64)
    norm = int(np.dot(p, p))
    c = tuple(int(2 * x // norm) for x in p)
    return c if group == "Sp4" else (0,) + c


@lru_cache(maxsize=None)
def build_root_datum(group: str) -> RootDatum:
    check_group(group)
    if group == "Sp4":
        basis = ("e1", "e2")
        roots = []
        for s1 in (1, -1):
            for s2 in (1, -1):
                roots.append((s1, s2))
            roots.append((2 * s1, 0))
            roots.append((0, 2 * s1))
        simple = {"alpha": (1, -1), "beta": (0, 2)}
    else:
        basis = ("e0", "e1", "e2")
        roots = []
        for s in (1, -1):
            roots += [
                (0, s, -s),
                (-s, s, s),
                (-s, 2 * s, 0),
                (-s, 0, 2 * s),
            ]
        simple = {"alpha": (0, 1, -1), "beta": (-1, 0, 2)}
    roots_t = tuple(sorted(roots))
    coroots = tuple(_coroot(group, r) for r in roots_t)
    datum = RootDatum(
        group=group,
        basis=basis,
        roots=roots_t,
        coroots=coroots,
        simple=simple,
        simple_coroots={k: _coroot(group, v) for k, v in simple.items()},
    )
    logger.debug("Built root datum for %s with %d roots", group, len(roots_t))
    return datum


# Bilden av δ = −2ε1 (den affina noden) används av apartmentet
AFFINE_ROOT = {"Sp4": (-2, 0), "GSp4": (1, -2, 0)}


# ----------------------- Självdualitet -----------------------
# Kolumner: bilden av ε0, ε1, ε2 i X_* (basen ε0^∨, ε1^∨, ε2^∨)
SELF_DUALITY = np.array([
    [-2, -1, -1],
    [-1, 0, 0],
    [-1, 0, -1],
], dtype=np.int64)

# Kolumner: bilden av ε0^∨, ε1^∨, ε2^∨ i X^*
SELF_DUALITY_INVERSE = np.array([
    [0, -1, 0],
    [-1, 1, 1],
    [0, 1, -1],
], dtype=np.int64)


def _as_gsp4_vector(v) -> np.ndarray:
    arr = np.asarray(v, dtype=np.int64)
    if arr.shape != (3,):
        raise InvalidOperand(f"self-duality is defined on the rank-3 GSp4 lattice, got {list(arr)}")
    return arr


def self_duality_map(v) -> tuple[int, ...]:
    """X^*(T) → X_*(T) för GSp4; α ↦ β^∨ och β ↦ α^∨."""
    return tuple(int(x) for x in SELF_DUALITY @ _as_gsp4_vector(v))


def self_duality_inverse(v) -> tuple[int, ...]:
    return tuple(int(x) for x in SELF_DUALITY_INVERSE @ _as_gsp4_vector(v))


# ----------------------- Weylgrupp -----------------------
@dataclass(frozen=True)
class WeylElement:
    word: str                    # ord i enkla speglingar, t.ex. "ab"
    on_characters: tuple         # matris på X^* (radvis)
    on_cocharacters: tuple       # matris på X_*
    signed_perm: tuple[int, ...]  # bild av (1, 2) som ±index

    def cycle_type(self) -> str:
        return _cycle_type(self.signed_perm)


@dataclass(frozen=True)
class WeylClass:
    name: str
    key: str
    cycle_type: str
    representative: str
    size: int
    torsion_rank: int
    elements: tuple[str, ...] = field(default_factory=tuple)


_BAR = "\u0304"  # kombinerande streck: negativ cykel

_CLASS_NAMES = {
    "(1)(1)": ("e", "e"),
    f"(1)(1{_BAR})": ("A1", "A1"),
    "(2)": ("Ã1", "A1t"),
    f"(1{_BAR})(1{_BAR})": ("A1×A1", "A1xA1"),
    f"(2{_BAR})": ("C2", "C2"),
}

_LETTERS = {"alpha": "a", "beta": "b"}


def _to_tuple(m: np.ndarray) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in m)


def _signed_perm(coch: np.ndarray) -> tuple[int, ...]:
    block = coch[-2:, -2:]
    out = []
    for i in range(2):
        col = block[:, i]
        j = int(np.flatnonzero(col)[0])
        out.append((j + 1) * int(col[j]))
    return tuple(out)


def _cycle_type(perm: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in (1, 2):
        if start in seen:
            continue
        i, length, sign = start, 0, 1
        while i not in seen:
            seen.add(i)
            img = perm[i - 1]
            sign *= 1 if img > 0 else -1
            length += 1
            i = abs(img)
        parts.append((length, sign))
    parts.sort(key=lambda p: (p[0], -p[1]))
    return "".join(f"({n}{'' if s > 0 else _BAR})" for n, s in parts)


@lru_cache(maxsize=None)
def weyl_group(group: str) -> tuple[WeylElement, ...]:
    """Alla 8 element, via BFS över enkla speglingar (kortaste ord först)."""
    rd = build_root_datum(group)
    gens = []
    for name in ("alpha", "beta"):
        m = rd.reflection_matrix(rd.simple[name])
        gens.append((_LETTERS[name], m, m.T.copy()))
    n = rd.rank
    ident = np.eye(n, dtype=np.int64)
    frontier = [("", ident, ident)]
    seen = {_to_tuple(ident): ("", ident, ident)}
    while frontier:
        nxt = []
        for word, mc, mk in frontier:
            for letter, gc, gk in gens:
                c, k = mc @ gc, mk @ gk
                key = _to_tuple(c)
                if key not in seen:
                    seen[key] = (word + letter, c, k)
                    nxt.append(seen[key])
        frontier = nxt
    elems = [
        WeylElement(word, _to_tuple(c), _to_tuple(k), _signed_perm(k))
        for word, c, k in seen.values()
    ]
    elems.sort(key=lambda e: (len(e.word), e.word))
    return tuple(elems)


def torsion_rank(coch: tuple) -> int:
    """Rang av tor[X_*/(1−w)X_*] som elementärabelsk 2-grupp."""
    m = np.eye(len(coch), dtype=np.int64) - np.asarray(coch, dtype=np.int64)
    snf = smith_normal_form(sympy.Matrix(m.tolist()), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    torsion = [d for d in diag if d > 1]
    if any(d != 2 for d in torsion):
        raise InvalidOperand(f"unexpected torsion {torsion}")
    return len(torsion)


@lru_cache(maxsize=None)
def weyl_classes(group: str) -> tuple[WeylClass, ...]:
    elems = weyl_group(group)
    index = {e.on_characters: e for e in elems}
    mats = {e.on_characters: np.asarray(e.on_characters) for e in elems}
    classes: list[list[WeylElement]] = []
    assigned: set = set()
    for e in elems:
        if e.on_characters in assigned:
            continue
        w = mats[e.on_characters]
        orbit = set()
        for g in elems:
            gm = np.asarray(g.on_characters)
            conj = gm @ w @ np.round(np.linalg.inv(gm)).astype(np.int64)
            orbit.add(_to_tuple(conj))
        assigned |= orbit
        classes.append(sorted((index[o] for o in orbit), key=lambda x: (len(x.word), x.word)))
    out = []
    for members in classes:
        rep = members[0]
        ct = rep.cycle_type()
        name, key = _CLASS_NAMES[ct]
        out.append(WeylClass(
            name=name,
            key=key,
            cycle_type=ct,
            representative=rep.word or "1",
            size=len(members),
            torsion_rank=torsion_rank(rep.on_cocharacters),
            elements=tuple(m.word or "1" for m in members),
        ))
    order = [v[0] for v in _CLASS_NAMES.values()]
    out.sort(key=lambda c: order.index(c.name))
    return tuple(out)


def weyl_closure_ok(group: str) -> bool:
    """Varje enkel spegling permuterar rotmängden."""
    rd = build_root_datum(group)
    roots = set(rd.roots)
    for name in ("alpha", "beta"):
        m = rd.reflection_matrix(rd.simple[name])
        image = {tuple(int(x) for x in m @ np.asarray(r)) for r in rd.roots}
        if image != roots:
            return False
    return True


# ----------------------- Levi-delgrupper -----------------------
@dataclass(frozen=True)
class LeviLabel:
    name: str
    group: str
    side: str = "group"  # group | dual


_LEVI_DUALS = {
    "GSp4": {"G": "G", "GL2×GSp0": "GL1×GSp2", "GL1×GSp2": "GL2×GSp0", "T": "T"},
    "Sp4": {"G": "SO5", "GL2×Sp0": "GL2×SO1", "GL1×Sp2": "GL1×SO3", "T": "T"},
}


def levi_labels(group: str) -> tuple[LeviLabel, ...]:
    check_group(group)
    return tuple(LeviLabel(n, group) for n in _LEVI_DUALS[group])


def dual_levi(levi: LeviLabel) -> LeviLabel:
    table = _LEVI_DUALS[check_group(levi.group)]
    if levi.side == "group":
        if levi.name not in table:
            raise InvalidOperand(f"unknown Levi {levi.name!r} for {levi.group}")
        return LeviLabel(table[levi.name], levi.group, "dual")
    inverse = {v: k for k, v in table.items()}
    if levi.name not in inverse:
        raise InvalidOperand(f"unknown dual Levi {levi.name!r} for {levi.group}")
    return LeviLabel(inverse[levi.name], levi.group, "group")


def standard_levi(group: str, simple_roots: frozenset[str]) -> str:
    """Standard-Levi som genereras av de givna enkla rötterna."""
    names = list(_LEVI_DUALS[check_group(group)])  # G, Siegel, Klingen, T
    if simple_roots == frozenset({"alpha", "beta"}):
        return names[0]
    if simple_roots == frozenset({"alpha"}):
        return names[1]
    if simple_roots == frozenset({"beta"}):
        return names[2]
    return names[3]


# ----------------------- Nilpotenta banor -----------------------
@dataclass(frozen=True)
class NilpotentOrbit:
    name: str
    b2_partition: str
    c2_partition: str
    representative: tuple[str, ...]  # e_α, e_β, ...
    levi: str


_ORBITS = (
    ("regular", "[5]", "[4]", ("alpha", "beta")),
    ("subregular", "[3,1^2]", "[2^2]", ("beta",)),
    ("minimal", "[2^2,1]", "[2,1^2]", ("alpha",)),
    ("zero", "[1^5]", "[1^4]", ()),
)

# självdualiteten byter α och β
_DUAL_SIMPLE = {"alpha": "beta", "beta": "alpha"}


def inducing_levi(representative: tuple[str, ...]) -> str:
    dual_roots = frozenset(_DUAL_SIMPLE[r] for r in representative)
    return standard_levi("GSp4", dual_roots)


@lru_cache(maxsize=None)
def nilpotent_orbits() -> tuple[NilpotentOrbit, ...]:
    return tuple(
        NilpotentOrbit(name, b2, c2, rep, inducing_levi(rep)) for name, b2, c2, rep in _ORBITS
    )


# ----------------------- Parahoriska kvoter -----------------------
@dataclass(frozen=True)
class ParahoricQuotient:
    vertex: str
    quotient: str
    deleted_node: str
    hyperspecial: bool
    identified_with: str | None = None


# Djup-noll-tabellerna kallar de två C2-hörnen β och γ, kvotbeskrivningen δ och β
SP4_VERTEX_ALIASES = {"beta": "delta", "gamma": "beta"}


def resolve_vertex(group: str, label: str) -> str:
    """Översätter en hörnetikett till raderad nod i den utvidgade Dynkin-grafen."""
    check_group(group)
    if group == "GSp4":
        return "delta" if label in ("beta", "delta") else label
    return label


def parahoric_quotients(group: str) -> tuple[ParahoricQuotient, ...]:
    check_group(group)
    if group == "GSp4":
        return (
            ParahoricQuotient("delta", "GSp4(F_q)", "delta", True, identified_with="beta"),
            ParahoricQuotient("alpha", "GSp_{2,2}(F_q)", "alpha", False),
        )
    return (
        ParahoricQuotient("delta", "Sp4(F_q)", "delta", True),
        ParahoricQuotient("beta", "Sp4(F_q)", "beta", True),
        ParahoricQuotient("alpha", "Sp2×Sp2(F_q)", "alpha", False),
    )


def quotient_at(group: str, vertex: str) -> str:
    node = resolve_vertex(group, vertex)
    for pq in parahoric_quotients(group):
        if pq.deleted_node == node:
            return pq.quotient
    raise InvalidOperand(f"no vertex {vertex!r} for {group}")


# ----------------------- Apartment -----------------------
@dataclass(frozen=True)
class Facet:
    name: str       # F_C2, F_A1, ...
    kind: str       # vertex | edge | chamber
    weyl_type: str  # typ av reduktiv kvot
    nodes: tuple[str, ...]  # kvarvarande noder i den utvidgade Dynkin-grafen


def apartment(group: str = "Sp4") -> tuple[Facet, ...]:
    """Det statiska komplexet: tre hörn, tre kanter och kammaren, med F_C2 i två kopior."""
    check_group(group)
    return (
        Facet("F_C2", "vertex", "C2", ("alpha", "beta")),
        Facet("F_C2'", "vertex", "C2", ("delta", "alpha")),
        Facet("F_A1xA1", "vertex", "A1×A1", ("delta", "beta")),
        Facet("F_A1", "edge", "A1", ("beta",)),
        Facet("F_A1'", "edge", "A1", ("delta",)),
        Facet("F_A1t", "edge", "Ã1", ("alpha",)),
        Facet("F_e", "chamber", "e", ()),
    )
