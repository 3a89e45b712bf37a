# app/schemas/complex.py
from __future__ import annotations

from typing import List

from pydantic import BaseModel, ConfigDict

from app.schemas.common import LabelIO


class ComplexIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ground: List[LabelIO]
    facets: List[List[LabelIO]]


class ComplexOut(BaseModel):
    ground: List[LabelIO]
    facets: List[List[LabelIO]]


# ein Summand der gruppierten Antipode
class GroupedTermOut(BaseModel):
    inflator: str
    coeff: int
    complex: ComplexOut


class GroupedAntipodeOut(BaseModel):
    source: ComplexOut
    terms: List[GroupedTermOut]
