# app/galois/springer.py
"""Generaliserade Springertabeller för de centralisatorer som förekommer.

Normaliseringen skickar den reguljära unipotenta banan till sgn.
Rader med "cusp" är kuspidala par: medlemmen är då superkuspidal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import InvalidEnhancement, InvalidOperand

CUSP = "cusp"


@dataclass(frozen=True)
class SpringerRow:
    orbit: str
    local_system: str
    weyl_rep: str

    @property
    def cuspidal(self) -> bool:
        return self.weyl_rep == CUSP

    @property
    def pair(self) -> str:
        return f"({self.orbit},{self.local_system})"


@dataclass(frozen=True)
class SpringerTable:
    name: str
    weyl: str
    weyl_irreps: tuple[str, ...]
    rows: tuple[SpringerRow, ...]

    @property
    def cuspidal_count(self) -> int:
        return sum(1 for r in self.rows if r.cuspidal)

    def is_bijection(self) -> bool:
        """Icke-kuspidala rader träffar Irr(W) exakt en gång och paren är distinkta."""
        images = [r.weyl_rep for r in self.rows if not r.cuspidal]
        pairs = [r.pair for r in self.rows]
        return sorted(images) == sorted(self.weyl_irreps) and len(set(pairs)) == len(pairs)

    def row(self, orbit: str, local_system: str = "1") -> SpringerRow:
        for r in self.rows:
            if r.orbit == orbit and r.local_system == local_system:
                return r
        raise InvalidEnhancement(f"({orbit},{local_system}) is not a unipotent pair of {self.name}")


def _table(name: str, weyl: str, irreps: tuple[str, ...], rows: list[tuple[str, str, str]]) -> SpringerTable:
    return SpringerTable(name, weyl, irreps, tuple(SpringerRow(*r) for r in rows))


_B2_IRREPS = ("(∅,[1^2])", "([1],[1])", "(∅,[2])", "([1^2],∅)", "([2],∅)")


@lru_cache(maxsize=None)
def springer_tables() -> dict[str, SpringerTable]:
    return {
        "SL2": _table("SL2", "μ2", ("1", "sgn"), [
            ("[1^2]", "1", "1"),
            ("[2]", "1", "sgn"),
            ("[2]", "-1", CUSP),
        ]),
        "SO3": _table("SO3", "μ2", ("1", "sgn"), [
            ("[1^2]", "1", "1"),
            ("[2]", "1", "sgn"),
        ]),
        "SO5": _table("SO5", "μ2^2⋊S2", _B2_IRREPS, [
            ("[5]", "1", "(∅,[1^2])"),
            ("[3,1^2]", "1", "([1],[1])"),
            ("[3,1^2]", "-1", "(∅,[2])"),
            ("[2^2,1]", "1", "([1^2],∅)"),
            ("[1^5]", "1", "([2],∅)"),
        ]),
        "O4": _table("O4", "μ2^2⋊μ2", (
            "(1⊗1,1)", "(1⊗1,sgn)", "(1⊗sgn,1)", "(sgn⊗sgn,1)", "(sgn⊗sgn,sgn)",
        ), [
            ("00", "1", "(1⊗1,1)"),
            ("00", "-1", "(1⊗1,sgn)"),
            ("0e", "1", "(1⊗sgn,1)"),
            ("ee", "(1,1)", "(sgn⊗sgn,1)"),
            ("ee", "(1,-1)", "(sgn⊗sgn,sgn)"),
            ("ee", "(-1,1)", CUSP),
            ("ee", "(-1,-1)", CUSP),
        ]),
        "GSp4": _table("GSp4", "μ2^2⋊S2", _B2_IRREPS, [
            ("[4]", "1", "(∅,[1^2])"),
            ("[2^2]", "1", "([1],[1])"),
            ("[2^2]", "-1", "(∅,[2])"),
            ("[2,1^2]", "1", "([1^2],∅)"),
            ("[1^4]", "1", "([2],∅)"),
        ]),
        "GSp22": _table("GSp_{2,2}", "μ2^2", ("1⊗1", "1⊗sgn", "sgn⊗1", "sgn⊗sgn"), [
            ("00", "1", "1⊗1"),
            ("0e", "1", "1⊗sgn"),
            ("e0", "1", "sgn⊗1"),
            ("ee", "1", "sgn⊗sgn"),
            ("ee", "-1", CUSP),
        ]),
    }


def springer_table(name: str) -> SpringerTable:
    tables = springer_tables()
    if name not in tables:
        raise InvalidOperand(f"no Springer table for {name!r} (known: {', '.join(tables)})")
    return tables[name]


def lookup(table: str, orbit: str, local_system: str = "1") -> SpringerRow:
    return springer_table(table).row(orbit, local_system)


def pair_text(table: str, orbit: str, local_system: str = "1") -> str:
    """Kvalificerad paretikett, t.ex. "SL2:([2],-1)"; kontrollerar att paret finns."""
    return f"{table}:{lookup(table, orbit, local_system).pair}"


def resolve_pair(text: str) -> SpringerRow:
    """Inversen till pair_text."""
    table, _, pair = text.partition(":")
    inner = pair[1:-1]
    depth = 0
    for i, ch in enumerate(inner):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif ch == "," and depth == 0:
            return lookup(table, inner[:i], inner[i + 1:])
    raise InvalidOperand(f"malformed unipotent pair {text!r}")
