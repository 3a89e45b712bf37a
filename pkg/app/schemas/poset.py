# app/schemas/poset.py
from __future__ import annotations

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from app.schemas.common import LabelIO


class PosetIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    elements: List[LabelIO]
    covers: List[Tuple[LabelIO, LabelIO]] = []  # Paare x < y, der transitive Abschluss wird gebildet


class PosetOut(BaseModel):
    elements: List[LabelIO]
    covers: List[Tuple[LabelIO, LabelIO]]


class FracturingOut(BaseModel):
    blocks: List[List[LabelIO]]
    omitted: List[LabelIO]
    sign: int
    acyclic: bool
    good: bool


class FracturingListOut(BaseModel):
    poset: PosetOut
    items: List[FracturingOut]
    total: int


class BetrayalSupportOut(BaseModel):
    beta: List[Tuple[LabelIO, LabelIO]]  # (b, β(b))
    compositions: List[str]


class SupportOut(BaseModel):
    fracturing: str
    compositions: List[str]
    total: int
    by_betrayal: List[BetrayalSupportOut] = []
    note: Optional[str] = None
