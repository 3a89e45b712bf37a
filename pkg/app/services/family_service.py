# app/services/family_service.py
"""
Hopf-Operationen auf gegründeten Mengenfamilien:
Konstruktion, Join (Produkt), Restriktion/Kontraktion (Koprodukt), iteriertes Koprodukt,
μ_Φ∘Δ_Φ sowie Phantome und Umbenennung.
"""
from __future__ import annotations

import logging
from typing import Iterable, List, Mapping, Sequence

from app.core.errors import (
    CompositionMismatch,
    LabelAlreadyPresent,
    MemberOutsideGround,
    NotGrounded,
    SubsetOutsideGround,
)
from app.models.compositions import SetComposition
from app.models.ground_set import GroundSet, Label, SubsetMask, normalize_label, to_sub, translate
from app.models.set_family import GroundedSetFamily

logger = logging.getLogger(__name__)


# ------------------------------------------------------------
# Konstruktion
# ------------------------------------------------------------
def make_family(
    ground: GroundSet,
    members: Iterable[Iterable[Label]],
    implicit_empty: bool = False,
) -> GroundedSetFamily:
    masks = {ground.mask((normalize_label(x) for x in m), error=MemberOutsideGround) for m in members}
    if 0 not in masks:
        if not implicit_empty:
            raise NotGrounded("Die leere Menge fehlt in der Familie (implicit_empty nicht gesetzt).")
        masks.add(0)
    return GroundedSetFamily.build(ground, masks)


def family_from_masks(ground: GroundSet, masks: Iterable[SubsetMask]) -> GroundedSetFamily:
    """Interne Variante für bereits kodierte Teilmengen."""
    out = set()
    full = ground.full
    for m in masks:
        if m & ~full:
            raise MemberOutsideGround(f"Bitmaske {m:#b} liegt außerhalb der Grundmenge.")
        out.add(m)
    if 0 not in out:
        raise NotGrounded("Die leere Menge fehlt in der Familie.")
    return GroundedSetFamily.build(ground, out)


def power_set(ground: GroundSet) -> GroundedSetFamily:
    return GroundedSetFamily(ground, tuple(range(1 << len(ground))))


def phantoms(family: GroundedSetFamily) -> SubsetMask:
    return family.phantoms


def _check_subset(family: GroundedSetFamily, subset: SubsetMask) -> None:
    if subset & ~family.full:
        raise SubsetOutsideGround(f"Teilmenge {subset:#b} liegt nicht in der Grundmenge.")


# ------------------------------------------------------------
# Produkt
# ------------------------------------------------------------
def join(f1: GroundedSetFamily, f2: GroundedSetFamily) -> GroundedSetFamily:
    """F1 * F2 = {X ∪ Y} auf der disjunkten Vereinigung der Grundmengen."""
    ground = f1.ground.disjoint_union(f2.ground)
    left = [translate(m, f1.ground, ground) for m in f1.members]
    right = [translate(m, f2.ground, ground) for m in f2.members]
    return GroundedSetFamily.build(ground, (a | b for a in left for b in right))


def join_all(families: Sequence[GroundedSetFamily]) -> GroundedSetFamily:
    out = GroundedSetFamily.trivial(GroundSet(()))
    for f in families:
        out = join(out, f)
    return out


# ------------------------------------------------------------
# Koprodukt
# ------------------------------------------------------------
def restrict_masks(members: Iterable[SubsetMask], subset: SubsetMask) -> set:
    return {m & subset for m in members}


def contract_masks(members: Iterable[SubsetMask], subset: SubsetMask) -> set:
    return {m for m in members if not m & subset}


def restrict(family: GroundedSetFamily, subset: SubsetMask) -> GroundedSetFamily:
    """F|_S auf Grundmenge S."""
    _check_subset(family, subset)
    ground = family.ground.sub(subset)
    return GroundedSetFamily.build(ground, (to_sub(m, subset) for m in restrict_masks(family.members, subset)))


def contract(family: GroundedSetFamily, subset: SubsetMask) -> GroundedSetFamily:
    """F/_S auf Grundmenge I∖S."""
    _check_subset(family, subset)
    rest = family.full & ~subset
    ground = family.ground.sub(rest)
    return GroundedSetFamily.build(ground, (to_sub(m, rest) for m in contract_masks(family.members, subset)))


def coproduct(family: GroundedSetFamily, subset: SubsetMask) -> tuple:
    """Δ_{S,T}(F) = (F|_S, F/_S)."""
    return restrict(family, subset), contract(family, subset)


def _check_composition(family: GroundedSetFamily, phi: SetComposition) -> None:
    if not phi.is_valid_for(family.full):
        raise CompositionMismatch("Die Mengenkomposition zerlegt die Grundmenge der Familie nicht.")


def coproduct_factors_masks(members: Sequence[SubsetMask], phi: SetComposition) -> List[set]:
    """Faktoren des iterierten Koprodukts, jeweils in den Bits der ursprünglichen Grundmenge."""
    out = []
    prefix = 0
    for block in phi.blocks:
        out.append({m & block for m in members if not m & prefix})
        prefix |= block
    return out


def iterated_coproduct(family: GroundedSetFamily, phi: SetComposition) -> List[GroundedSetFamily]:
    _check_composition(family, phi)
    factors = coproduct_factors_masks(family.members, phi)
    return [
        GroundedSetFamily.build(family.ground.sub(block), (to_sub(m, block) for m in factor))
        for block, factor in zip(phi.blocks, factors)
    ]


def mu_delta_masks(members: Sequence[SubsetMask], phi: SetComposition) -> set:
    current = {0}
    for factor in coproduct_factors_masks(members, phi):
        current = {a | b for a in current for b in factor}
    return current


def mu_delta(family: GroundedSetFamily, phi: SetComposition) -> GroundedSetFamily:
    """μ_Φ(Δ_Φ(F)), direkt auf der ursprünglichen Grundmenge."""
    _check_composition(family, phi)
    return GroundedSetFamily.build(family.ground, mu_delta_masks(family.members, phi))


# ------------------------------------------------------------
# Phantome / Umbenennung
# ------------------------------------------------------------
def add_phantom(family: GroundedSetFamily, label: Label) -> GroundedSetFamily:
    label = normalize_label(label)
    if label in family.ground:
        raise LabelAlreadyPresent(f"Label {label!r} ist bereits in der Grundmenge.")
    ground = family.ground.with_label(label)
    return GroundedSetFamily.build(ground, (translate(m, family.ground, ground) for m in family.members))


def relabel(family: GroundedSetFamily, bijection: Mapping[Label, Label]) -> GroundedSetFamily:
    """Artfunktorialität: überträgt F entlang einer Bijektion der Grundmenge."""
    if set(bijection) != set(family.ground.labels):
        raise SubsetOutsideGround("Die Umbenennung muss genau auf der Grundmenge definiert sein.")
    images = [normalize_label(bijection[x]) for x in family.ground.labels]
    if len(set(images)) != len(images):
        raise LabelAlreadyPresent("Die Umbenennung ist nicht injektiv.")
    ground = GroundSet(tuple(images))
    return GroundedSetFamily.build(
        ground,
        (ground.mask(normalize_label(bijection[x]) for x in family.ground.labels_of(m)) for m in family.members),
    )
