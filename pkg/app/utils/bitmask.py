# app/utils/bitmask.py
"""Kleine Helfer für Teilmengen als Bitmasken (Bit i = i-tes Label der Grundmenge)."""
from __future__ import annotations

from typing import Iterable, Iterator, List


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest_bit(mask: int) -> int:
    """Index des niedrigsten gesetzten Bits (mask != 0)."""
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_submasks(mask: int) -> Iterator[int]:
    """Alle Teilmengen von mask, inklusive 0 und mask selbst (absteigend)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, selector: int) -> int:
    """Packt die Bits von mask, die in selector liegen, lückenlos nach unten (pext)."""
    out = 0
    pos = 0
    for i in iter_bits(selector):
        if mask >> i & 1:
            out |= 1 << pos
        pos += 1
    return out


def expand(mask: int, selector: int) -> int:
    """Umkehrung von compress (pdep)."""
    out = 0
    pos = 0
    for i in iter_bits(selector):
        if mask >> pos & 1:
            out |= 1 << i
        pos += 1
    return out
