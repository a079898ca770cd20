# app/induction/reducibility.py
from __future__ import annotations

import logging
from typing import Union

from .bernstein import BernsteinBlockJ, UnipotentAssignment, bernstein_block_J, unipotent_class_of_constituent
from .gsp4 import decide_gsp4
from .langlands import quotient_label
from .sp4 import decide_sp4
from .types import Constituent, InducedRep, ReducibilityReport

logger = logging.getLogger("llc.induction")


def decide_reducibility(rep: InducedRep) -> ReducibilityReport:
    report = decide_gsp4(rep) if rep.group == "GSp4" else decide_sp4(rep)
    logger.info("%s: case %s, length %d", report.inducing, report.case, report.length)
    return report


def _resolve(rep: InducedRep, constituent: Union[Constituent, str]) -> Constituent:
    if isinstance(constituent, Constituent):
        return constituent
    return decide_reducibility(rep).constituent(constituent)


def langlands_quotient_label(rep: InducedRep, constituent: Union[Constituent, str]) -> str:
    """J(P, π, ν)-etiketten för en icke-tempererad konstituent."""
    return quotient_label(_resolve(rep, constituent))


def block_of(rep: InducedRep) -> BernsteinBlockJ:
    return bernstein_block_J(rep.chi1, rep.chi2, rep.group)


def unipotent_of(rep: InducedRep, constituent: Union[Constituent, str]) -> UnipotentAssignment:
    return unipotent_class_of_constituent(block_of(rep), _resolve(rep, constituent))
