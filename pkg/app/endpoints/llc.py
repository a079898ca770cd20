# app/endpoints/llc.py
from __future__ import annotations

import logging
from typing import Optional

from fastapi import APIRouter, Query
from pydantic import BaseModel

from ..cli import (
    TABLE_SECTIONS,
    ClassifyReport,
    FdegReport,
    ReduceRequest,
    TablesReport,
    build_tables,
    classify_report,
    fdeg_report,
    load_descriptor,
    named_candidates,
    reduce_report,
)
from ..characters import LabelGroup
from ..config import settings
from ..galois.presets import PRESET_LABELS
from ..induction.types import ReducibilityReport
from ..selfcheck import SelfCheckReport, run_selfcheck
from ..stability import StabilityCandidate, StabilityReport, stability_report

router = APIRouter()
log = logging.getLogger("llc.api")


def session_labels(declarations: Optional[str] = None) -> LabelGroup:
    return LabelGroup.from_declarations(declarations or settings.label_declarations or PRESET_LABELS)


# --------------------- Modeller -----------------------
class ClassifyRequest(BaseModel):
    preset: Optional[str] = None
    descriptor: Optional[dict] = None
    labels: Optional[str] = None


class StabilityRequest(BaseModel):
    candidates: Optional[list[StabilityCandidate]] = None
    set: str = "gsp4"
    near: str = "s"
    convention: Optional[str] = None
    q_mod_4: int = 1


# --------------------- Endpoints --------------------
@router.get("/tables", response_model=None)
def tables(
    group: str = Query("Sp4"),
    section: list[str] = Query(default=[], description=f"Någon av: {', '.join(TABLE_SECTIONS)}"),
    q0: Optional[int] = Query(None, ge=1),
) -> dict:
    report: TablesReport = build_tables(group, section, q0 or settings.default_q0)
    return report.model_dump(mode="json", by_alias=True, exclude_none=True)


@router.get("/fdeg", response_model=None)
def fdeg(group: str = Query("GSp4"), rep: str = Query(...), q0: Optional[int] = Query(None, ge=1)) -> dict:
    report: FdegReport = fdeg_report(group, rep, q0 or settings.default_q0)
    return report.model_dump(mode="json", by_alias=True, exclude_none=True)


@router.post("/reduce", response_model=None)
def reduce(req: ReduceRequest, labels: Optional[str] = Query(None)) -> dict:
    report: ReducibilityReport = reduce_report(req, session_labels(labels))
    log.info("reduce %s/%s → case %s", req.group, req.levi, report.case)
    return report.model_dump(mode="json", by_alias=True)


@router.post("/classify", response_model=None)
def classify(req: ClassifyRequest) -> dict:
    desc = load_descriptor(req.preset, req.descriptor)
    report: ClassifyReport = classify_report(desc, session_labels(req.labels))
    return report.model_dump(mode="json", by_alias=True, exclude_none=True)


@router.post("/stability", response_model=None)
def stability(req: StabilityRequest) -> dict:
    candidates = req.candidates if req.candidates is not None else named_candidates(req.set)
    convention = req.convention or settings.stability_sign_convention
    report: StabilityReport = stability_report(candidates, req.near, convention, req.q_mod_4)
    return report.model_dump(mode="json", by_alias=True)


@router.get("/selfcheck", response_model=None)
def selfcheck(module: Optional[str] = Query(None)) -> dict:
    report: SelfCheckReport = run_selfcheck(module)
    return {**report.model_dump(mode="json", by_alias=True), "ok": report.ok}
