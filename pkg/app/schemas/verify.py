# app/schemas/verify.py
from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel

Status = Literal["EQUAL", "DIFF"]


class TermDiffOut(BaseModel):
    term: str
    expected: str
    actual: str


class VerifyCaseOut(BaseModel):
    instance: str
    status: Status
    terms: int
    first_difference: Optional[TermDiffOut] = None


class VerifyReportOut(BaseModel):
    target: str
    status: Status
    checked: int
    cases: List[VerifyCaseOut]
