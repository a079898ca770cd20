# app/errors.py
from __future__ import annotations


class LLCError(Exception):
    """Basklass för alla fel som motorn signalerar."""

    code = "llc_error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code

    def to_dict(self) -> dict:
        return {"error": self.code, "detail": self.message}


class InvalidOperand(LLCError):
    code = "invalid_operand"


class EvaluationPole(LLCError):
    code = "evaluation_pole"


class LabelGroupMismatch(LLCError):
    code = "label_group_mismatch"


class Unsupported(LLCError):
    code = "unsupported"


class IncompleteData(LLCError):
    code = "incomplete_data"


class InvalidDatum(LLCError):
    code = "invalid_datum"


class NeedsDeclaration(LLCError):
    code = "needs_declaration"


class NotApplicable(LLCError):
    code = "not_applicable"


class MalformedDescriptor(LLCError):
    code = "malformed_descriptor"


class InvalidEnhancement(LLCError):
    code = "invalid_enhancement"
