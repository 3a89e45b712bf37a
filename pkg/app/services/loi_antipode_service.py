# app/services/loi_antipode_service.py
"""
Kürzungsfreie Antipoden-Formeln für Verbände von Ordnungsidealen:
Summe über gute Fracturings, duale Variante, Ordinalsummen und vollständig gerankte Posets.
"""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

from app.core.errors import ensure_ground_size
from app.models.formal_sum import FormalSum
from app.models.fracturing import Fracturing
from app.models.ground_set import GroundSet, translate
from app.models.poset import Poset
from app.models.set_family import GroundedSetFamily
from app.services.fracturing_service import (
    acyc_fracturings,
    blocks_acyclic,
    blocks_family,
    fractured_family,
    fracturing_blocks,
    good_fracturings,
)
from app.services.poset_service import antichain, dualize_family, ordinal_sum, order_ideals
from app.utils.bitmask import iter_bits, iter_submasks, popcount

logger = logging.getLogger(__name__)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def antipode_loi(poset: Poset, max_ground: Optional[int] = None) -> FormalSum:
    """S(J(P), I) = Σ_{Q gut} (−1)^{c(Q)+|P∖Q|} (J(Q), I)"""
    ensure_ground_size(len(poset), max_ground)
    pairs = ((fractured_family(q), q.sign()) for q in good_fracturings(poset))
    return FormalSum.accumulate(poset.ground, pairs)


def acyclic_sum(poset: Poset) -> FormalSum:
    """Σ_{Q ∈ Acyc(P)} (−1)^{c(Q)+|P∖Q|} J(Q)"""
    return FormalSum.accumulate(poset.ground, ((fractured_family(q), q.sign()) for q in acyc_fracturings(poset)))


def antipode_antichain(ground: GroundSet) -> FormalSum:
    """S(J(A_n)) = (−1)^n J(A_n)"""
    return FormalSum.single(order_ideals(antichain(ground)), _sign(len(ground)))


def antipode_chain_formula(ground: GroundSet) -> FormalSum:
    """
    Explizite Formel für die Kette C_n (natürliche Ordnung der Labels):
    Σ_{V ∋ min} (−1)^{n−|V|} Σ_{Ψ ⊨ V natürlich} (−1)^u J(C_{Ψ₁}) * ⋯ * J(C_{Ψ_u}).
    """
    n = len(ground)
    if n == 0:
        return FormalSum.single(GroundedSetFamily.trivial(ground))
    chain = Poset.from_below(ground, tuple((1 << i) - 1 for i in range(n)))
    pairs: List[Tuple[GroundedSetFamily, int]] = []
    for rest in iter_submasks(ground.full & ~1):
        v = rest | 1
        elements = list(iter_bits(v))
        # natürliche Kompositionen = Schnittstellen zwischen aufeinanderfolgenden Elementen
        for cuts in range(1 << (len(elements) - 1)):
            blocks = []
            current = 1 << elements[0]
            for k in range(1, len(elements)):
                if cuts >> (k - 1) & 1:
                    blocks.append(current)
                    current = 0
                current |= 1 << elements[k]
            blocks.append(current)
            sign = _sign(n - len(elements) + len(blocks))
            pairs.append((blocks_family(chain, blocks), sign))
    return FormalSum.accumulate(ground, pairs)


# ------------------------------------------------------------
# Duales Poset
# ------------------------------------------------------------
def dual_fracturing_terms(poset: Poset) -> List[Tuple[Fracturing, int]]:
    """Q ∈ Acyc(P) mit Max(P) ⊆ Q, jeweils mit Vorzeichen (−1)^{c(Q)+|P∖Q|}."""
    return [(q, q.sign()) for q in acyc_fracturings(poset) if not poset.maximal & ~q.carrier]


def antipode_dual(poset: Poset, max_ground: Optional[int] = None) -> FormalSum:
    """Σ_{Q ∈ Acyc(P), Max(P) ⊆ Q} (−1)^{c(Q)+|P∖Q|} J(Q), Terme als Fracturings von P."""
    ensure_ground_size(len(poset), max_ground)
    return FormalSum.accumulate(poset.ground, ((fractured_family(q), s) for q, s in dual_fracturing_terms(poset)))


def antipode_of_dual(poset: Poset, max_ground: Optional[int] = None) -> FormalSum:
    """S(J(P*)), berechnet über die Fracturings von P und komponentenweise Dualisierung."""
    return antipode_dual(poset, max_ground).map_terms(dualize_family)


# ------------------------------------------------------------
# Ordinalsummen
# ------------------------------------------------------------
def hybrid_components(lo: Poset, hi: Poset) -> List[int]:
    """Hyb(P_lo, P_hi): Teilmengen von P_lo ⊕ P_hi, die beide Teile treffen (Bits der Ordinalsumme)."""
    total = ordinal_sum(lo, hi)
    lo_mask = translate(lo.full, lo.ground, total.ground)
    hi_mask = translate(hi.full, hi.ground, total.ground)
    return [h for h in iter_submasks(total.full) if h & lo_mask and h & hi_mask and total.is_connected(h)]


def antipode_ordinal_sum(
    lo: Poset,
    hi: Poset,
    lo_antipode: Optional[FormalSum] = None,
    max_ground: Optional[int] = None,
) -> FormalSum:
    """
    S(J(P_lo ⊕ P_hi)) aus reinen und gemischten Fracturings:
    reiner Teil  S(J(P_lo)) * Σ_{Acyc(P_hi)} ±J(Q_hi),
    gemischter Teil über H ∈ Hyb, Q_lo ∈ Good(P_lo∖⌈H⌉), Q_hi ∈ Acyc(P_hi∖⌊H⌋).
    """
    total = ordinal_sum(lo, hi)
    ensure_ground_size(len(total), max_ground)
    if len(lo) == 0:
        return antipode_loi(hi, max_ground)

    s_lo = lo_antipode if lo_antipode is not None else antipode_loi(lo, max_ground)
    pure = s_lo.join(acyclic_sum(hi))

    lo_mask = translate(lo.full, lo.ground, total.ground)
    hi_mask = translate(hi.full, hi.ground, total.ground)
    size = len(total)
    pairs: List[Tuple[GroundedSetFamily, int]] = []
    for h in hybrid_components(lo, hi):
        lo_scope = lo_mask & ~total.filter(h)
        hi_scope = hi_mask & ~total.ideal(h)
        hi_options = [b for b in fracturing_blocks(total, hi_scope) if blocks_acyclic(total, b)]
        for q_lo in fracturing_blocks(total, lo_scope, require_min=True):
            if not blocks_acyclic(total, q_lo):
                continue
            lo_size = sum(popcount(b) for b in q_lo)
            for q_hi in hi_options:
                hi_size = sum(popcount(b) for b in q_hi)
                sign = _sign(len(q_lo) + len(q_hi) + 1 + size - lo_size - hi_size - popcount(h))
                pairs.append((blocks_family(total, q_lo + (h,) + q_hi), sign))
    mixed = FormalSum.accumulate(total.ground, pairs)
    logger.debug("Ordinalsumme: %d reine, %d gemischte Terme", len(pure), len(mixed))
    return pure + mixed


def antipode_complete_ranked(levels: Sequence[GroundSet], max_ground: Optional[int] = None) -> FormalSum:
    """Antipode von A_{k₁} ⊕ ⋯ ⊕ A_{k_r}, rekursiv über die Ordinalsummenformel."""
    if not levels:
        return FormalSum.single(GroundedSetFamily.trivial(GroundSet(())))
    current = antichain(levels[0])
    result = antipode_antichain(levels[0])
    for level in levels[1:]:
        top = antichain(level)
        result = antipode_ordinal_sum(current, top, lo_antipode=result, max_ground=max_ground)
        current = ordinal_sum(current, top)
    return result
