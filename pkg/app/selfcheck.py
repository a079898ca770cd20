# app/selfcheck.py
"""Kör invarianterna för alla moduler på de inbyggda tabellerna och räknar utfallet."""
from __future__ import annotations

import logging
import time
from fractions import Fraction
from typing import Callable, Optional

from pydantic import BaseModel, Field

from .characters import LabelGroup, e_of, order_of
from .errors import LLCError
from .finite_reductive import finite_group, group_order, has_unipotent_cuspidal
from .galois.packets import assemble_packet, infinitesimal_matches, support_commutes
from .galois.presets import load_preset, preset_labels, preset_names
from .galois.springer import springer_tables
from .induction.reducibility import decide_reducibility
from .induction.types import InducedRep
from .qfield import ONE, Q, SQRT_Q, prime_to_p_part, qh_eval, qpow
from .rootdata import (
    GROUPS,
    build_root_datum,
    nilpotent_orbits,
    self_duality_inverse,
    self_duality_map,
    weyl_classes,
    weyl_closure_ok,
    weyl_group,
)
from .stability import (
    character_vector,
    gsp4_candidates,
    minimal_stable_subsets,
    sp4_candidates,
)
from .supercuspidal import enumerate_type_templates, formal_degree, template_ok

logger = logging.getLogger("llc.selfcheck")

Check = Callable[[], bool]


# ----------------------- Kontroller per modul -----------------------
def _qfield_identities() -> bool:
    return (Q - ONE) * (Q + ONE) == Q * Q - ONE and SQRT_Q * SQRT_Q == Q


def _qfield_eval() -> bool:
    return qh_eval(SQRT_Q, 4).as_rational() == 2 and qh_eval(Q / (Q + ONE), 3).as_rational() == Fraction(3, 4)


def _qfield_prime_to_p() -> bool:
    part, exponent = prime_to_p_part(group_order(finite_group("Sp4")))
    return exponent == 4 and part * Q**4 == group_order(finite_group("Sp4"))


def _weyl_sizes() -> bool:
    return all(len(weyl_group(g)) == 8 and len(weyl_classes(g)) == 5 for g in GROUPS)


def _weyl_closure() -> bool:
    return all(weyl_closure_ok(g) for g in GROUPS)


def _self_duality() -> bool:
    rd = build_root_datum("GSp4")
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    roundtrip = all(self_duality_inverse(self_duality_map(v)) == v for v in basis)
    return (
        roundtrip
        and self_duality_map(rd.simple["alpha"]) == rd.simple_coroots["beta"]
        and self_duality_map(rd.simple["beta"]) == rd.simple_coroots["alpha"]
    )


def _nilpotent_orbits() -> bool:
    orbits = nilpotent_orbits()
    return len(orbits) == 4 and len({o.b2_partition for o in orbits}) == 4


def _characters() -> bool:
    g = LabelGroup.from_declarations("zeta:6,xi:generic")
    eta, eta2, eta2p = g.order_two_characters()
    return (
        (eta * eta).is_trivial
        and eta * eta2 == eta2p
        and order_of(g.parse("zeta")) == 6
        and e_of(g.parse("nu^{1/2}*zeta")) == Fraction(1, 2)
    )


def _unipotent_cuspidal() -> bool:
    odd = [n for n in range(1, 51) if has_unipotent_cuspidal(finite_group(f"SO{2 * n + 1}")).exists]
    split = [n for n in range(1, 51) if has_unipotent_cuspidal(finite_group(f"SO{2 * n}+")).exists]
    # SO2^- är torusen U1
    nonsplit = [n for n in range(2, 51) if has_unipotent_cuspidal(finite_group(f"SO{2 * n}-")).exists]
    gl = any(has_unipotent_cuspidal(finite_group(f"GL{n}")).exists for n in range(1, 11))
    return (
        odd == [s * s + s for s in range(1, 7)]
        and split == [4, 16, 36]
        and nonsplit == [9, 25, 49]
        and not gl
    )


def _mixed_fdeg() -> bool:
    target = qpow(Fraction(3, 2)) / (2 * (Q + ONE) * (Q * Q - ONE))
    return formal_degree("GSp4", "delta_eta2") == formal_degree("GSp4", "pi_alpha_eta2") == target


def _templates() -> bool:
    return all(template_ok(t) for g in GROUPS for t in enumerate_type_templates(g))


# (grupp, χ1, χ2, θ, fall, längd), ett datum per torusfall
REDUCIBILITY_GOLDEN: tuple[tuple[str, str, str, str, str, int], ...] = (
    ("GSp4", "nu^{2}", "nu", "1", "1aiii", 4),
    ("GSp4", "nu^{2}", "nu", "zeta", "1aiii", 4),
    ("GSp4", "nu*eta", "eta", "1", "1aiv", 4),
    ("GSp4", "nu^{1/2}*zeta", "nu^{-1/2}*zeta", "1", "1ai", 2),
    ("GSp4", "eta", "nu", "xi", "1aii", 2),
    ("GSp4", "nu", "1", "1", "1bi", 4),
    ("GSp4", "nu", "nu", "1", "1bii", 2),
    ("GSp4", "nu^{1/2}", "nu^{-1/2}", "1", "1biii", 2),
    ("GSp4", "zeta", "xi", "1", "irreducible", 1),
    ("Sp4", "nu^{2}", "nu", "1", "1biii", 4),
    ("Sp4", "nu*eta", "eta", "1", "1biv", 6),
    ("Sp4", "nu^{1/2}*zeta", "nu^{-1/2}*zeta", "1", "1bi", 2),
    ("Sp4", "xi", "nu", "1", "1bii", 2),
    ("Sp4", "nu", "1", "1", "1ci", 4),
    ("Sp4", "nu", "nu", "1", "1cii", 2),
    ("Sp4", "nu^{1/2}", "nu^{1/2}", "1", "1ciii", 2),
    ("Sp4", "zeta", "eta", "1", "1ai", 2),
    ("Sp4", "eta2", "eta2", "1", "1aii", 4),
)


def _reducibility_golden() -> bool:
    g = preset_labels()
    for group, chi1, chi2, theta, case, length in REDUCIBILITY_GOLDEN:
        rep = InducedRep(group=group, levi="T", chi1=g.parse(chi1), chi2=g.parse(chi2), theta=g.parse(theta))
        report = decide_reducibility(rep)
        if (report.case, report.length, report.generic_count) != (case, length, 1):
            logger.error("Golden datum %s gave case %s of length %d", rep.render(), report.case, report.length)
            return False
    return True


def _springer() -> bool:
    counts = {"SL2": 1, "SO3": 0, "SO5": 0, "O4": 2, "GSp4": 0, "GSp22": 1}
    tables = springer_tables()
    return all(tables[k].is_bijection() and tables[k].cuspidal_count == n for k, n in counts.items())


def _packet_census() -> bool:
    labels = preset_labels()
    for name in preset_names():
        p = assemble_packet(load_preset(name), labels)
        if p.size != 2 ** p.s_rank or not support_commutes(p) or not infinitesimal_matches(p):
            logger.error("Packet invariant failed for preset %s", name)
            return False
    return True


def _stability() -> bool:
    gsp4 = [(c.label, character_vector(c.label)) for c in gsp4_candidates()]
    sp4 = [(c.label, character_vector(c.label)) for c in sp4_candidates()]
    pairs = minimal_stable_subsets(gsp4)
    quads = minimal_stable_subsets(sp4)
    return len(pairs) == 2 and all(len(s) == 2 for s in pairs) and len(quads) == 2 and all(len(s) == 4 for s in quads)


CHECKS: dict[str, tuple[str, Check]] = {
    "qfield.identities": ("qfield", _qfield_identities),
    "qfield.eval": ("qfield", _qfield_eval),
    "qfield.prime_to_p": ("qfield", _qfield_prime_to_p),
    "rootdata.weyl_sizes": ("rootdata", _weyl_sizes),
    "rootdata.weyl_closure": ("rootdata", _weyl_closure),
    "rootdata.self_duality": ("rootdata", _self_duality),
    "rootdata.nilpotent_orbits": ("rootdata", _nilpotent_orbits),
    "characters.relations": ("characters", _characters),
    "finite_reductive.unipotent_cuspidal": ("finite_reductive", _unipotent_cuspidal),
    "supercuspidal.mixed_fdeg": ("supercuspidal", _mixed_fdeg),
    "supercuspidal.templates": ("supercuspidal", _templates),
    "induction.golden": ("induction", _reducibility_golden),
    "galois.springer": ("galois", _springer),
    "galois.packet_census": ("galois", _packet_census),
    "stability.minimal_subsets": ("stability", _stability),
}


# ----------------------- Körning -----------------------
class CheckResult(BaseModel):
    name: str
    module: str
    passed: bool
    error: Optional[str] = None
    ms: int = 0


class SelfCheckReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    passed: int
    failed: int
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return self.failed == 0


class SelfCheckRunner:
    """Kör kontrollerna och samlar resultat."""

    def __init__(self, checks: Optional[dict[str, tuple[str, Check]]] = None):
        self.checks = CHECKS if checks is None else checks

    def run_one(self, name: str) -> CheckResult:
        module, check = self.checks[name]
        t0 = time.perf_counter()
        try:
            passed, error = bool(check()), None
        except LLCError as e:
            passed, error = False, f"{e.code}: {e.message}"
        ms = int((time.perf_counter() - t0) * 1000)
        if not passed:
            logger.error("Self-check %s failed%s", name, f" ({error})" if error else "")
        return CheckResult(name=name, module=module, passed=passed, error=error, ms=ms)

    def run(self, module: Optional[str] = None) -> SelfCheckReport:
        names = [n for n, (m, _) in self.checks.items() if module is None or m == module]
        results = [self.run_one(n) for n in names]
        passed = sum(r.passed for r in results)
        logger.info("Self-check: %d passed, %d failed", passed, len(results) - passed)
        return SelfCheckReport(passed=passed, failed=len(results) - passed, results=results)


def run_selfcheck(module: Optional[str] = None) -> SelfCheckReport:
    return SelfCheckRunner().run(module)
