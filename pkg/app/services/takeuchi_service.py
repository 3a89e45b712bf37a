# app/services/takeuchi_service.py
"""
Antipode in SF nach Takeuchi: S(F) = Σ_{Φ⊨I} (−1)^{|Φ|} μ_Φ(Δ_Φ(F)).

Zwei Wege:
- takeuchi_antipode: direkte Summe über alle Kompositionen (optional parallel über Partitionen)
- recursive_antipode: dieselbe Summe, nach erstem Block gruppiert und memoisiert
  S(F) = −Σ_{∅≠B⊆I} F|_B * S(F/_B)
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.errors import ensure_ground_size
from app.models.compositions import SetComposition
from app.models.formal_sum import FormalSum
from app.models.set_family import GroundedSetFamily
from app.services.enumeration import iter_partition_blocks
from app.services.family_service import mu_delta_masks
from app.utils.bitmask import iter_submasks

logger = logging.getLogger(__name__)

Counts = Dict[FrozenSet[int], int]


def _accumulate_chunk(members: Sequence[int], chunk: List[List[int]]) -> Counts:
    acc: Counts = {}
    for blocks in chunk:
        sign = -1 if len(blocks) % 2 else 1
        for perm in permutations(blocks):
            key = frozenset(mu_delta_masks(members, SetComposition(perm)))
            acc[key] = acc.get(key, 0) + sign
    return acc


def _merge(target: Counts, part: Counts) -> None:
    for key, coeff in part.items():
        target[key] = target.get(key, 0) + coeff


def _to_sum(family: GroundedSetFamily, acc: Counts) -> FormalSum:
    ground = family.ground
    return FormalSum(
        ground,
        {GroundedSetFamily(ground, tuple(sorted(key))): c for key, c in acc.items() if c},
    )


def takeuchi_antipode(
    family: GroundedSetFamily,
    threads: Optional[int] = None,
    max_ground: Optional[int] = None,
    chunk_size: int = 64,
) -> FormalSum:
    ensure_ground_size(len(family.ground), max_ground)
    workers = threads or settings.THREADS
    members = family.members

    partitions = list(iter_partition_blocks(family.full))
    logger.debug("Takeuchi: |I|=%d, %d Partitionen, %d Worker", len(family.ground), len(partitions), workers)

    acc: Counts = {}
    if workers <= 1 or len(partitions) <= chunk_size:
        acc = _accumulate_chunk(members, partitions)
    else:
        chunks = [partitions[i:i + chunk_size] for i in range(0, len(partitions), chunk_size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            # Zusammenführung ist additiv, Reihenfolge egal
            for part in pool.map(lambda c: _accumulate_chunk(members, c), chunks):
                _merge(acc, part)

    result = _to_sum(family, acc)
    logger.debug("Takeuchi: %d verschiedene Terme", len(result))
    return result


def recursive_antipode(family: GroundedSetFamily, max_ground: Optional[int] = None) -> FormalSum:
    ensure_ground_size(len(family.ground), max_ground)
    memo: Dict[Tuple[int, FrozenSet[int]], Counts] = {}

    def solve(ground_mask: int, members: FrozenSet[int]) -> Counts:
        if ground_mask == 0:
            return {frozenset((0,)): 1}
        key = (ground_mask, members)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc: Counts = {}
        for block in iter_submasks(ground_mask):
            if block == 0:
                continue
            left = {m & block for m in members}
            right = frozenset(m for m in members if not m & block)
            for term, coeff in solve(ground_mask & ~block, right).items():
                joined = frozenset(a | b for a in left for b in term)
                acc[joined] = acc.get(joined, 0) - coeff
        acc = {k: v for k, v in acc.items() if v}
        memo[key] = acc
        return acc

    result = _to_sum(family, solve(family.full, frozenset(family.members)))
    logger.debug("Rekursive Antipode: %d Zwischenergebnisse, %d Terme", len(memo), len(result))
    return result


def antipode_linear(element: FormalSum, engine=recursive_antipode) -> FormalSum:
    """Lineare Fortsetzung der Antipode auf eine formale Summe."""
    out = FormalSum.zero(element.ground)
    for family, coeff in element.terms():
        out = out + engine(family) * coeff
    return out
