# app/utils/render.py
"""Domänenwerte -> pydantic-Ausgabemodelle (JSON) bzw. ausgerichteter Text."""
from __future__ import annotations

from fractions import Fraction
from typing import List

from pydantic import BaseModel

from app.models.chain_gang import CGBasis, CGSum, CGTensor
from app.models.character import Character, PowerSeries
from app.models.formal_sum import FormalSum
from app.models.fracturing import Fracturing
from app.models.ground_set import GroundSet, SubsetMask
from app.models.poset import Poset
from app.models.set_family import GroundedSetFamily
from app.models.simplicial_complex import SimplicialComplex
from app.schemas.chaingang import CGSumIO, CGTensorOut, CGTensorTermOut, CGTermIO, CharacterIO, PowerSeriesIO
from app.schemas.common import FormalSumIO, FormalSumTermIO
from app.schemas.complex import ComplexOut
from app.schemas.family import SetFamilyOut
from app.schemas.poset import FracturingOut, PosetOut


def dump(model: BaseModel) -> str:
    return model.model_dump_json(indent=2)


def labels(ground: GroundSet, mask: SubsetMask) -> list:
    return list(ground.labels_of(mask))


# ------------------------------------------------------------
# Familien / Formalsummen
# ------------------------------------------------------------
def family_out(family: GroundedSetFamily) -> SetFamilyOut:
    return SetFamilyOut(
        ground=list(family.ground.labels),
        members=[list(m) for m in family.member_labels()],
        phantoms=labels(family.ground, family.phantoms),
    )


def formal_sum_out(element: FormalSum) -> FormalSumIO:
    """Terme in kanonischer Reihenfolge; Phantome ergeben sich aus ground und members."""
    ground = list(element.ground.labels)
    return FormalSumIO(
        [
            FormalSumTermIO(coeff=str(coeff), ground=ground, members=[list(m) for m in family.member_labels()])
            for family, coeff in element.terms()
        ]
    )


def family_text(family: GroundedSetFamily) -> str:
    body = ", ".join("{" + ",".join(str(x) for x in m) + "}" for m in family.member_labels())
    return "{" + body + "}"


def formal_sum_text(element: FormalSum) -> str:
    """±k · {members} [phantoms: ...], Koeffizienten rechtsbündig."""
    rows = element.terms()
    if not rows:
        return "0"
    width = max(len(str(abs(c))) for _, c in rows)
    out = []
    for family, coeff in rows:
        sign = "-" if coeff < 0 else "+"
        line = f"{sign}{abs(coeff):>{width}} · {family_text(family)}"
        if family.phantoms:
            line += " [phantoms: " + ",".join(str(x) for x in family.ground.labels_of(family.phantoms)) + "]"
        out.append(line)
    return "\n".join(out)


# ------------------------------------------------------------
# Posets / Komplexe
# ------------------------------------------------------------
def poset_out(poset: Poset) -> PosetOut:
    return PosetOut(elements=list(poset.ground.labels), covers=poset.label_pairs(poset.covers))


def fracturing_out(q: Fracturing, acyclic: bool, good: bool) -> FracturingOut:
    ground = q.parent.ground
    return FracturingOut(
        blocks=[labels(ground, b) for b in q.blocks],
        omitted=labels(ground, q.omitted),
        sign=q.sign(),
        acyclic=acyclic,
        good=good,
    )


def complex_out(x: SimplicialComplex) -> ComplexOut:
    return ComplexOut(ground=list(x.ground.labels), facets=[list(f) for f in x.facet_labels()])


# ------------------------------------------------------------
# Kettenbanden
# ------------------------------------------------------------
def _cg_term(b: CGBasis, coeff: Fraction) -> CGTermIO:
    return CGTermIO(coeff=str(coeff), lam=list(b.lam), p=b.p)


def cg_sum_out(x: CGSum) -> CGSumIO:
    return CGSumIO(terms=[_cg_term(b, c) for b, c in x])


def cg_tensor_out(t: CGTensor) -> CGTensorOut:
    return CGTensorOut(
        terms=[
            CGTensorTermOut(coeff=str(c), left=_cg_term(a, Fraction(1)), right=_cg_term(b, Fraction(1)))
            for (a, b), c in t
        ]
    )


def character_out(zeta: Character) -> CharacterIO:
    return CharacterIO(a=str(zeta.a), t=[str(v) for v in zeta.t], N=zeta.truncation)


def series_out(series: PowerSeries) -> PowerSeriesIO:
    return PowerSeriesIO([str(c) for c in series.coefficients])


def character_text(zeta: Character) -> str:
    rows = [f"F   {zeta.a}"] + [f"C{n:<2} {v}" for n, v in enumerate(zeta.t, start=1)]
    return "\n".join(rows)


def series_text(series: PowerSeries) -> str:
    parts: List[str] = []
    for n, c in enumerate(series.coefficients):
        if not c:
            continue
        parts.append(str(c) if n == 0 else f"{c}*x^{n}")
    return " + ".join(parts)

