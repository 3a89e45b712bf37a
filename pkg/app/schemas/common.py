# app/schemas/common.py
from __future__ import annotations

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, RootModel

LabelIO = Union[int, str]


class ErrorOut(BaseModel):
    code: str
    message: str
    location: Optional[str] = None  # nur bei Parserfehlern


# Formalsumme: Liste von Termen, ein Term je Basisfamilie
class FormalSumTermIO(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coeff: str = Field(..., pattern=r"^[+-]?\d+$")  # Dezimalstring, exakt
    ground: List[LabelIO]
    members: List[List[LabelIO]]


class FormalSumIO(RootModel[List[FormalSumTermIO]]):
    pass
