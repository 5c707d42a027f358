import time
from enum import Enum
from typing import Any, Dict, List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.bwb.spaces import CONVENTIONS
from src.core.config import settings


class ClaimId(str, Enum):
    GR24_VANISHING = "3.1"
    LGR_VANISHING = "3.2"
    XPLUS_BUNDLES = "3.3"
    PV_VANISHING = "3.4"
    XMINUS_VANISHING = "3.5"
    XMINUS_L3 = "3.6"
    TILTING_PLUS = "tilting-plus"
    TILTING_MINUS = "tilting-minus"
    END_COMPARE = "end-compare"


LEMMA_IDS = tuple(c for c in ClaimId if c.value[0].isdigit())


class Verdict(str, Enum):
    VERIFIED = "verified"
    FAILED = "failed"
    INDETERMINATE = "indeterminate"


def decide(counterexamples: List[Any], indeterminate: List[Any]) -> Verdict:
    if counterexamples:
        return Verdict.FAILED
    if indeterminate:
        return Verdict.INDETERMINATE
    return Verdict.VERIFIED


def to_plain(value: Any) -> Any:
    """JSON-shaped copy: tuples become lists, keys become strings, numpy scalars become ints"""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, Enum):
        return value.value
    return value


def report_conventions() -> Dict[str, Any]:
    conventions = dict(CONVENTIONS)
    conventions["sigma"] = "L<0> -> Sigma -> L^-2<1>; a piece P<s> adds H(P)_(n-s) to fiber degree n"
    conventions["xminus_twists"] = {"O": 0, "Sigma^dual": "natural", "L": -1, "L^2": -2}
    return to_plain(conventions)


class VerificationReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=settings.SCHEMA_VERSION, alias="schema")
    claim: ClaimId
    title: str
    verdict: Verdict
    parameters: Dict[str, Any] = Field(default_factory=dict)
    counterexamples: List[Dict[str, Any]] = Field(default_factory=list)
    indeterminate: List[str] = Field(default_factory=list)
    tables: Dict[str, Any] = Field(default_factory=dict)
    conventions: Dict[str, Any] = Field(default_factory=report_conventions)
    notes: List[str] = Field(default_factory=list)
    version: str = settings.VERSION
    wall_clock_seconds: float = 0.0

    @field_validator("parameters", "counterexamples", "tables", "conventions", mode="before")
    @classmethod
    def _plain(cls, value):
        return to_plain(value)

    @property
    def verified(self) -> bool:
        return self.verdict is Verdict.VERIFIED


class CheckOutcome(BaseModel):
    """What a check found, before it is stamped into a report"""
    parameters: Dict[str, Any] = Field(default_factory=dict)
    counterexamples: List[Dict[str, Any]] = Field(default_factory=list)
    indeterminate: List[str] = Field(default_factory=list)
    tables: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    def to_report(self, claim: ClaimId, title: str, started: float) -> VerificationReport:
        return VerificationReport(
            claim=claim,
            title=title,
            verdict=decide(self.counterexamples, self.indeterminate),
            parameters=self.parameters,
            counterexamples=self.counterexamples,
            indeterminate=self.indeterminate,
            tables=self.tables,
            notes=self.notes,
            wall_clock_seconds=round(time.perf_counter() - started, 6),
        )
