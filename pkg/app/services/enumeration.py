# app/services/enumeration.py
"""
Aufzählung von Mengenpartitionen (Restricted-Growth-Reihenfolge) und Mengenkompositionen
(Blockpermutationen jeder Partition in lexikographischer Reihenfolge).
"""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterator, List, Union

from app.models.compositions import SetComposition, SetPartition
from app.models.ground_set import GroundSet, SubsetMask
from app.utils.bitmask import bit_list

logger = logging.getLogger(__name__)


def _as_mask(ground: Union[GroundSet, SubsetMask]) -> SubsetMask:
    return ground.full if isinstance(ground, GroundSet) else int(ground)


def iter_partition_blocks(mask: SubsetMask) -> Iterator[List[SubsetMask]]:
    """Blocklisten aller Partitionen von mask; Block k enthält das k-te neue Minimum (RGS)."""
    elements = bit_list(mask)
    if not elements:
        yield []
        return
    blocks: List[SubsetMask] = []

    def rec(pos: int) -> Iterator[List[SubsetMask]]:
        if pos == len(elements):
            yield list(blocks)
            return
        bit = 1 << elements[pos]
        for k in range(len(blocks)):
            blocks[k] |= bit
            yield from rec(pos + 1)
            blocks[k] ^= bit
        blocks.append(bit)
        yield from rec(pos + 1)
        blocks.pop()

    yield from rec(0)


def enumerate_partitions(ground: Union[GroundSet, SubsetMask]) -> Iterator[SetPartition]:
    for blocks in iter_partition_blocks(_as_mask(ground)):
        yield SetPartition(tuple(blocks))


def enumerate_compositions(ground: Union[GroundSet, SubsetMask]) -> Iterator[SetComposition]:
    for blocks in iter_partition_blocks(_as_mask(ground)):
        for perm in permutations(blocks):
            yield SetComposition(perm)


def compositions_of_partition(partition: SetPartition) -> Iterator[SetComposition]:
    for perm in permutations(partition.blocks):
        yield SetComposition(perm)


# ------------------------------------------------------------
# Zählfunktionen (unabhängige Rekursionen, für Tests)
# ------------------------------------------------------------
@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell_number(k) for k in range(n))


@lru_cache(maxsize=None)
def ordered_bell_number(n: int) -> int:
    if n == 0:
        return 1
    return sum(comb(n, k) * ordered_bell_number(n - k) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
