# app/services/poset_service.py
from __future__ import annotations

import logging
import random
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from app.core.errors import CycleDetected, NotLatticeOfIdeals, UnknownLabel
from app.models.ground_set import GroundSet, Label, SubsetMask, normalize_label, to_sub, translate
from app.models.poset import Poset
from app.models.set_family import GroundedSetFamily
from app.utils.bitmask import iter_bits, popcount

logger = logging.getLogger(__name__)


# ------------------------------------------------------------
# Konstruktion
# ------------------------------------------------------------
def _close(below: List[SubsetMask]) -> List[SubsetMask]:
    """Transitiver Abschluss (Floyd–Warshall auf Bitzeilen)."""
    n = len(below)
    out = list(below)
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if out[i] & bit:
                out[i] |= out[k]
    return out


def poset_from_below(ground: GroundSet, below: Sequence[SubsetMask]) -> Poset:
    closed = _close(list(below))
    for i, mask in enumerate(closed):
        if mask >> i & 1:
            raise CycleDetected(f"Zyklus in den Relationen über Element {ground.labels[i]!r}.")
    return Poset.from_below(ground, tuple(closed))


def make_poset(ground: GroundSet, covers: Iterable[Tuple[object, object]]) -> Poset:
    below = [0] * len(ground)
    for a, b in covers:
        x = ground.position(normalize_label(a), error=UnknownLabel)
        y = ground.position(normalize_label(b), error=UnknownLabel)
        below[y] |= 1 << x
    return poset_from_below(ground, below)


def antichain(ground: GroundSet) -> Poset:
    return Poset.from_below(ground, tuple(0 for _ in ground.labels))


def chain(ground: GroundSet) -> Poset:
    """Kette in der kanonischen Reihenfolge der Labels."""
    return Poset.from_below(ground, tuple((1 << i) - 1 for i in range(len(ground))))


# ------------------------------------------------------------
# Ordnungsideale
# ------------------------------------------------------------
def linear_extension(poset: Poset, mask: Optional[SubsetMask] = None) -> List[int]:
    scope = poset.full if mask is None else mask
    return sorted(iter_bits(scope), key=lambda i: (popcount(poset.below[i] & scope), i))


def ideal_masks(poset: Poset, mask: Optional[SubsetMask] = None) -> List[SubsetMask]:
    """Alle Ordnungsideale von P[mask] (Bits von P), per Tiefensuche entlang einer linearen Erweiterung."""
    scope = poset.full if mask is None else mask
    order = linear_extension(poset, scope)
    below = [poset.below[i] & scope for i in range(len(poset.below))]
    out: List[SubsetMask] = []

    def rec(pos: int, current: SubsetMask) -> None:
        if pos == len(order):
            out.append(current)
            return
        x = order[pos]
        rec(pos + 1, current)
        if below[x] & ~current == 0:
            rec(pos + 1, current | (1 << x))

    rec(0, 0)
    return out


def order_ideals(poset: Poset, ground: Optional[GroundSet] = None) -> GroundedSetFamily:
    """J(P); mit ground ⊋ P.ground entstehen Phantome."""
    masks = ideal_masks(poset)
    if ground is None or ground == poset.ground:
        return GroundedSetFamily.build(poset.ground, masks)
    return GroundedSetFamily.build(ground, (translate(m, poset.ground, ground) for m in masks))


# ------------------------------------------------------------
# Poset-Algebra
# ------------------------------------------------------------
def restrict_poset(poset: Poset, mask: SubsetMask) -> Poset:
    """P[A] auf der Teil-Grundmenge A."""
    mask &= poset.full
    ground = poset.ground.sub(mask)
    below = tuple(to_sub(poset.below[i] & mask, mask) for i in iter_bits(mask))
    return Poset.from_below(ground, below)


def disjoint_sum(p: Poset, q: Poset) -> Poset:
    ground = p.ground.disjoint_union(q.ground)
    rows = zip(embed(p, ground), embed(q, ground))
    return Poset.from_below(ground, tuple(a | b for a, b in rows))


def ordinal_sum(lo: Poset, hi: Poset) -> Poset:
    """P_lo ⊕ P_hi: zusätzlich x < y für alle x ∈ P_lo, y ∈ P_hi."""
    ground = lo.ground.disjoint_union(hi.ground)
    lo_mask = translate(lo.full, lo.ground, ground)
    rows = zip(embed(lo, ground), embed(hi, ground))
    below = tuple(a | b | (0 if lo_mask >> i & 1 else lo_mask) for i, (a, b) in enumerate(rows))
    return Poset.from_below(ground, below)


def dual(poset: Poset) -> Poset:
    return Poset(poset.ground, poset.above, poset.below)


def embed(poset: Poset, ground: GroundSet) -> Tuple[SubsetMask, ...]:
    """below-Zeilen von P in der Bitkodierung einer größeren Grundmenge."""
    below = [0] * len(ground)
    for i, mask in enumerate(poset.below):
        below[translate(1 << i, poset.ground, ground).bit_length() - 1] = translate(mask, poset.ground, ground)
    return tuple(below)


# ------------------------------------------------------------
# Birkhoff: Poset aus J(P) zurückgewinnen
# ------------------------------------------------------------
def recover_poset(family: GroundedSetFamily) -> Poset:
    """
    Liest P auf den Nicht-Phantomen ab: das Hauptideal von x ist der Schnitt aller Mitglieder,
    die x enthalten. Wirft NotLatticeOfIdeals, falls J(P) ≠ F.
    """
    support = family.support
    below_full = {}
    for x in iter_bits(support):
        principal = family.full
        for m in family.members:
            if m >> x & 1:
                principal &= m
        below_full[x] = principal & ~(1 << x)

    ground = family.ground.sub(support)
    below = tuple(to_sub(below_full[x], support) for x in iter_bits(support))
    for i, mask in enumerate(below):
        for j in iter_bits(mask):
            if below[j] >> i & 1:
                raise NotLatticeOfIdeals("Die Familie ist kein Verband von Ordnungsidealen (nicht antisymmetrisch).")
    poset = Poset.from_below(ground, below)
    if order_ideals(poset, family.ground) != family:
        raise NotLatticeOfIdeals("Die Familie ist kein Verband von Ordnungsidealen.")
    return poset


def is_lattice_of_ideals(family: GroundedSetFamily) -> bool:
    try:
        recover_poset(family)
    except NotLatticeOfIdeals:
        return False
    return True


def dualize_family(family: GroundedSetFamily) -> GroundedSetFamily:
    """φ(J(P)) = J(P*) auf derselben Grundmenge (Phantome bleiben)."""
    return order_ideals(dual(recover_poset(family)), family.ground)


# ------------------------------------------------------------
# Aufzählung / Zufall (Tests, verify)
# ------------------------------------------------------------
def all_posets(ground: GroundSet) -> Iterator[Poset]:
    """Alle beschrifteten Posets auf ground (über alle transitiven, antisymmetrischen Relationen)."""
    n = len(ground)
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    count = 0

    def rec(idx: int, below: List[SubsetMask]) -> Iterator[Poset]:
        nonlocal count
        if idx == len(pairs):
            if _close(below) == below:
                count += 1
                yield Poset.from_below(ground, tuple(below))
            return
        yield from rec(idx + 1, below)
        x, y = pairs[idx]
        if not (below[x] >> y & 1):
            below[y] |= 1 << x
            yield from rec(idx + 1, below)
            below[y] &= ~(1 << x)

    yield from rec(0, [0] * n)
    logger.debug("all_posets: %d Posets auf %d Elementen", count, n)


def random_poset(rng: random.Random, ground: GroundSet, density: float = 0.35) -> Poset:
    """Zufälliger DAG entlang einer zufälligen Permutation, transitiv abgeschlossen."""
    order = list(range(len(ground)))
    rng.shuffle(order)
    below = [0] * len(ground)
    for a, b in combinations(range(len(order)), 2):
        if rng.random() < density:
            below[order[b]] |= 1 << order[a]
    return poset_from_below(ground, below)


def label_covers(poset: Poset) -> List[Tuple[Label, Label]]:
    return poset.label_pairs(poset.covers)
