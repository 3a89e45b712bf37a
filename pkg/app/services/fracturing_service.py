# app/services/fracturing_service.py
"""
Fracturings von Posets: Verrat (betrayal) unter einer Mengenkomposition, μΔ auf J(P),
Aufzählung, Konfliktdigraph, gute/azyklische Fracturings und Supportsysteme.
"""
from __future__ import annotations

import logging
from itertools import product
from typing import Iterator, List, Optional, Tuple

from app.core.errors import CompositionMismatch, NotAFracturing
from app.models.compositions import SetComposition
from app.models.fracturing import BetrayalFunction, ConflictDigraph, Fracturing
from app.models.ground_set import SubsetMask
from app.models.poset import Poset
from app.models.set_family import GroundedSetFamily
from app.services.enumeration import enumerate_compositions
from app.services.poset_service import ideal_masks, restrict_poset
from app.utils.bitmask import iter_bits, iter_submasks, lowest_bit

logger = logging.getLogger(__name__)


# ------------------------------------------------------------
# Konstruktion
# ------------------------------------------------------------
def make_fracturing(poset: Poset, blocks) -> Fracturing:
    """
    Baut ein Fracturing aus Blöcken (Bitmasken). Nicht zusammenhängende Blöcke werden in ihre
    Hasse-Komponenten zerlegt (kanonische Form).
    """
    seen = 0
    canonical: List[SubsetMask] = []
    for block in blocks:
        if block == 0:
            continue
        if block & seen or block & ~poset.full:
            raise NotAFracturing("Blöcke überlappen oder liegen außerhalb des Posets.")
        seen |= block
        canonical.extend(poset.components(block))
    return Fracturing.of(poset, canonical)


def fractured_poset(q: Fracturing) -> Poset:
    """Q als Poset auf seinem Träger."""
    return restrict_poset(Poset.from_below(q.parent.ground, q.below_rows()), q.carrier)


def fractured_family(q: Fracturing) -> GroundedSetFamily:
    """J(Q) auf der Grundmenge von P (Phantome = P∖Q)."""
    return blocks_family(q.parent, q.blocks)


def blocks_family(poset: Poset, blocks) -> GroundedSetFamily:
    rows = [0] * len(poset.below)
    carrier = 0
    for b in blocks:
        carrier |= b
        for i in iter_bits(b):
            rows[i] = poset.below[i] & b
    helper = Poset.from_below(poset.ground, tuple(rows))
    return GroundedSetFamily.build(poset.ground, ideal_masks(helper, carrier))


# ------------------------------------------------------------
# Verrat / μΔ
# ------------------------------------------------------------
def _check(poset: Poset, phi: SetComposition) -> None:
    if not phi.is_valid_for(poset.full):
        raise CompositionMismatch("Die Mengenkomposition zerlegt die Grundmenge des Posets nicht.")


def betrayed(poset: Poset, phi: SetComposition) -> SubsetMask:
    """B(Φ) = {x : ∃y, y <_P x und y <_Φ x}"""
    _check(poset, phi)
    out = 0
    for block, prefix in zip(phi.blocks, phi.prefix_masks()):
        for x in iter_bits(block):
            if poset.below[x] & prefix:
                out |= 1 << x
    return out


def loi_mu_delta(poset: Poset, phi: SetComposition) -> Tuple[Fracturing, GroundedSetFamily]:
    """μ_Φ(Δ_Φ(J(P))) = J(P₁+⋯+P_m) mit P_i = P[Φ_i ∖ B(Φ_i)]."""
    lost = betrayed(poset, phi)
    blocks: List[SubsetMask] = []
    for block in phi.blocks:
        keep = block & ~lost
        if keep:
            blocks.extend(poset.components(keep))
    q = Fracturing.of(poset, blocks)
    return q, fractured_family(q)


# ------------------------------------------------------------
# Aufzählung
# ------------------------------------------------------------
def fracturing_blocks(
    poset: Poset,
    scope: Optional[SubsetMask] = None,
    require_min: bool = False,
) -> Iterator[Tuple[SubsetMask, ...]]:
    """
    Blocklisten aller kanonischen Fracturings von P[scope] (Bits von P).
    Das jeweils kleinste offene Element wird entweder weggelassen oder eröffnet einen
    zusammenhängenden Block aus noch offenen Elementen.
    """
    scope = poset.full if scope is None else scope
    minimal = sum(1 << i for i in iter_bits(scope) if not poset.below[i] & scope)
    blocks: List[SubsetMask] = []

    def rec(rest: SubsetMask) -> Iterator[Tuple[SubsetMask, ...]]:
        if not rest:
            yield tuple(blocks)
            return
        x = lowest_bit(rest)
        bit = 1 << x
        others = rest & ~bit
        if not (require_min and minimal & bit):
            yield from rec(others)
        for extra in iter_submasks(others):
            block = bit | extra
            if not poset.is_connected(block):
                continue
            blocks.append(block)
            yield from rec(others & ~extra)
            blocks.pop()

    yield from rec(scope)


def enumerate_fracturings(poset: Poset, require_min: bool = False) -> Iterator[Fracturing]:
    for blocks in fracturing_blocks(poset, require_min=require_min):
        yield Fracturing.of(poset, blocks)


def conflict_edges(poset: Poset, blocks) -> frozenset:
    edges = set()
    downs = []
    for b in blocks:
        down = 0
        for x in iter_bits(b):
            down |= poset.below[x]
        downs.append(down)
    for i, down in enumerate(downs):
        for j, other in enumerate(blocks):
            if i != j and down & other:
                edges.add((i, j))
    return frozenset(edges)


def conflict_digraph(q: Fracturing) -> ConflictDigraph:
    return ConflictDigraph(q.blocks, conflict_edges(q.parent, q.blocks))


def blocks_acyclic(poset: Poset, blocks) -> bool:
    return ConflictDigraph(tuple(blocks), conflict_edges(poset, blocks)).is_acyclic()


def is_acyclic(q: Fracturing) -> bool:
    return conflict_digraph(q).is_acyclic()


def is_good(poset: Poset, q: Fracturing) -> bool:
    """Gut ⟺ Min(P) ⊆ Q und Con(Q) azyklisch."""
    if poset.minimal & ~q.carrier:
        return False
    return is_acyclic(q)


def good_fracturings(poset: Poset) -> Iterator[Fracturing]:
    count = 0
    for blocks in fracturing_blocks(poset, require_min=True):
        if blocks_acyclic(poset, blocks):
            count += 1
            yield Fracturing.of(poset, blocks)
    logger.debug("good_fracturings: %d gute Fracturings für |P|=%d", count, len(poset))


def acyc_fracturings(poset: Poset) -> Iterator[Fracturing]:
    for blocks in fracturing_blocks(poset):
        if blocks_acyclic(poset, blocks):
            yield Fracturing.of(poset, blocks)


# ------------------------------------------------------------
# Supportsysteme
# ------------------------------------------------------------
def supp_membership(poset: Poset, q: Fracturing, phi: SetComposition) -> bool:
    """Φ ∈ Supp(Q) über die vier Bedingungen (zusammenhalten, zweimal nicht stechen, stechen)."""
    _check(poset, phi)
    carrier = q.carrier
    for i in iter_bits(carrier):
        for j in iter_bits(poset.below[i]):
            if not (carrier >> j & 1):
                # j ∈ P∖Q, j <_P i  ⟹  i <_Φ j
                if not phi.precedes(i, j):
                    return False
            elif q.lt(j, i):
                if not phi.same_block(i, j):
                    return False
            else:
                if not phi.precedes(i, j):
                    return False
    for b in iter_bits(q.omitted):
        if not any(phi.precedes(a, b) for a in iter_bits(poset.below[b])):
            return False
    return True


def support_system(poset: Poset, q: Fracturing) -> List[SetComposition]:
    return [phi for phi in enumerate_compositions(poset.full) if supp_membership(poset, q, phi)]


def betrayal_functions(poset: Poset, q: Fracturing) -> Iterator[BetrayalFunction]:
    omitted = list(iter_bits(q.omitted))
    choices = [list(iter_bits(poset.below[b])) for b in omitted]
    for picks in product(*choices):
        yield BetrayalFunction(tuple(zip(omitted, picks)))


def supp_beta(poset: Poset, q: Fracturing, beta: BetrayalFunction) -> List[SetComposition]:
    return [
        phi
        for phi in support_system(poset, q)
        if all(phi.precedes(a, b) for b, a in beta.assignment)
    ]
