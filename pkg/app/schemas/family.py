# app/schemas/family.py
from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from app.schemas.common import LabelIO


class SetFamilyIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ground: List[LabelIO]
    members: List[List[LabelIO]]
    implicit_empty: bool = False
    phantoms: Optional[List[LabelIO]] = None  # falls angegeben, muss es zu members passen


class SetFamilyOut(BaseModel):
    ground: List[LabelIO]
    members: List[List[LabelIO]]
    phantoms: List[LabelIO] = []


# Δ_{S,T}(F) = (F|_S, F/_S)
class CoproductOut(BaseModel):
    subset: List[LabelIO]
    restriction: SetFamilyOut
    contraction: SetFamilyOut


class ClassifyOut(BaseModel):
    flags: List[str]
    greedoid: bool
