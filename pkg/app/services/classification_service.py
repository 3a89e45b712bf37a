# app/services/classification_service.py
"""
Klassenprädikate für Mengenfamilien (Hierarchie der Untermonoide):
zugänglich, ∪-/∩-abgeschlossen, simplizial, Matroid, Antimatroid, Topologie, Boolesch,
Verband von Ordnungsidealen und Kettenbande.
"""
from __future__ import annotations

import logging
from typing import FrozenSet, List, Literal

from app.core.errors import NotLatticeOfIdeals
from app.models.poset import Poset
from app.models.set_family import GroundedSetFamily
from app.services.poset_service import recover_poset
from app.utils.bitmask import iter_bits, popcount

logger = logging.getLogger(__name__)

ClassFlag = Literal[
    "accessible",
    "union-closed",
    "intersection-closed",
    "simplicial",
    "matroid",
    "antimatroid",
    "topology",
    "boolean",
    "loi",
    "chain-gang",
]

FLAG_ORDER: List[str] = [
    "accessible",
    "union-closed",
    "intersection-closed",
    "simplicial",
    "matroid",
    "antimatroid",
    "topology",
    "boolean",
    "loi",
    "chain-gang",
]


def is_accessible(family: GroundedSetFamily) -> bool:
    members = family.member_set
    return all(
        any(m & ~(1 << i) in members for i in iter_bits(m))
        for m in family.members
        if m
    )


def is_union_closed(family: GroundedSetFamily) -> bool:
    members = family.member_set
    return all(a | b in members for a in family.members for b in family.members if a < b)


def is_intersection_closed(family: GroundedSetFamily) -> bool:
    members = family.member_set
    return all(a & b in members for a in family.members for b in family.members if a < b)


def is_simplicial(family: GroundedSetFamily) -> bool:
    members = family.member_set
    return all(m & ~(1 << i) in members for m in family.members for i in iter_bits(m))


def satisfies_donation(family: GroundedSetFamily) -> bool:
    """Für |A| < |B| gibt es x ∈ B∖A mit A ∪ x ∈ F."""
    members = family.member_set
    for a in family.members:
        size_a = popcount(a)
        for b in family.members:
            if popcount(b) <= size_a:
                continue
            if not any(a | (1 << x) in members for x in iter_bits(b & ~a)):
                return False
    return True


def is_matroid(family: GroundedSetFamily) -> bool:
    return is_simplicial(family) and satisfies_donation(family)


def is_greedoid(family: GroundedSetFamily) -> bool:
    return is_accessible(family) and satisfies_donation(family)


def is_antimatroid(family: GroundedSetFamily) -> bool:
    return is_accessible(family) and is_union_closed(family)


def is_topology(family: GroundedSetFamily) -> bool:
    return (
        family.full in family.member_set
        and is_union_closed(family)
        and is_intersection_closed(family)
    )


def is_boolean(family: GroundedSetFamily) -> bool:
    # Potenzmenge des Trägers; Phantome sind erlaubt
    return len(family) == 1 << popcount(family.support)


def is_chain_gang_poset(poset: Poset) -> bool:
    """Disjunkte Vereinigung von Ketten: jedes Element hat höchstens einen unteren und oberen Nachbarn."""
    lower = [0] * len(poset)
    upper = [0] * len(poset)
    for x, y in poset.covers:
        lower[y] += 1
        upper[x] += 1
    return all(c <= 1 for c in lower) and all(c <= 1 for c in upper)


def classify_family(family: GroundedSetFamily) -> FrozenSet[str]:
    flags = set()
    if is_accessible(family):
        flags.add("accessible")
    if is_union_closed(family):
        flags.add("union-closed")
    if is_intersection_closed(family):
        flags.add("intersection-closed")
    if is_simplicial(family):
        flags.add("simplicial")
        if satisfies_donation(family):
            flags.add("matroid")
    if "accessible" in flags and "union-closed" in flags:
        flags.add("antimatroid")
    if family.full in family.member_set and "union-closed" in flags and "intersection-closed" in flags:
        flags.add("topology")
    if is_boolean(family):
        flags.add("boolean")
    try:
        poset = recover_poset(family)
    except NotLatticeOfIdeals:
        poset = None
    if poset is not None:
        flags.add("loi")
        if is_chain_gang_poset(poset):
            flags.add("chain-gang")
    logger.debug("classify_family: %s -> %s", family, sorted(flags))
    return frozenset(flags)


def sorted_flags(flags: FrozenSet[str]) -> List[str]:
    return [f for f in FLAG_ORDER if f in flags]
