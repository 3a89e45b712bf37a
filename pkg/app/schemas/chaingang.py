# app/schemas/chaingang.py
from __future__ import annotations

from typing import List

from pydantic import BaseModel, Field, RootModel


class CGTermIO(BaseModel):
    coeff: str  # exakter Bruch, z. B. "-3/2"
    lam: List[int] = []
    p: int = Field(0, ge=0)


class CGSumIO(BaseModel):
    terms: List[CGTermIO]


class CGTensorTermOut(BaseModel):
    coeff: str
    left: CGTermIO
    right: CGTermIO


class CGTensorOut(BaseModel):
    terms: List[CGTensorTermOut]


class CharacterIO(BaseModel):
    a: str
    t: List[str]
    N: int = Field(..., ge=0)


class PowerSeriesIO(RootModel[List[str]]):
    pass
