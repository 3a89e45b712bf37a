# app/models/poset.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

from app.models.ground_set import GroundSet, Label, SubsetMask
from app.utils.bitmask import iter_bits, lowest_bit


@dataclass(frozen=True)
class Poset:
    """
    Endliche strikte Halbordnung auf ground.
    below[i] = {j : j <_P i}, above[i] = {j : i <_P j}, beide transitiv abgeschlossen.
    Konstruktion mit Prüfung über poset_service.make_poset.
    """

    ground: GroundSet
    below: Tuple[SubsetMask, ...]
    above: Tuple[SubsetMask, ...]

    @classmethod
    def from_below(cls, ground: GroundSet, below: Tuple[SubsetMask, ...]) -> "Poset":
        above = [0] * len(below)
        for i, mask in enumerate(below):
            for j in iter_bits(mask):
                above[j] |= 1 << i
        return cls(ground, tuple(below), tuple(above))

    def __len__(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> SubsetMask:
        return self.ground.full

    def lt(self, x: int, y: int) -> bool:
        """x <_P y (Bitindizes)"""
        return bool(self.below[y] >> x & 1)

    def comparable_mask(self, x: int) -> SubsetMask:
        return self.below[x] | self.above[x]

    # ------------------------------------------------------------
    # Abgeleitete Sichten
    # ------------------------------------------------------------
    @cached_property
    def minimal(self) -> SubsetMask:
        return sum(1 << i for i in range(len(self.below)) if not self.below[i])

    @cached_property
    def maximal(self) -> SubsetMask:
        return sum(1 << i for i in range(len(self.above)) if not self.above[i])

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        out: List[Tuple[int, int]] = []
        for y, down in enumerate(self.below):
            for x in iter_bits(down):
                # x ⋖ y, falls kein z mit x < z < y
                if not (self.above[x] & down):
                    out.append((x, y))
        return tuple(sorted(out))

    @cached_property
    def relations(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted((x, y) for y, down in enumerate(self.below) for x in iter_bits(down)))

    def ideal(self, mask: SubsetMask) -> SubsetMask:
        """⌊A⌋_P"""
        out = mask
        for i in iter_bits(mask):
            out |= self.below[i]
        return out

    def filter(self, mask: SubsetMask) -> SubsetMask:
        """⌈A⌉_P"""
        out = mask
        for i in iter_bits(mask):
            out |= self.above[i]
        return out

    def is_down_closed(self, mask: SubsetMask, within: SubsetMask | None = None) -> bool:
        scope = self.full if within is None else within
        return all(not (self.below[i] & scope & ~mask) for i in iter_bits(mask))

    def is_up_closed(self, mask: SubsetMask, within: SubsetMask | None = None) -> bool:
        scope = self.full if within is None else within
        return all(not (self.above[i] & scope & ~mask) for i in iter_bits(mask))

    def components(self, mask: SubsetMask | None = None) -> Tuple[SubsetMask, ...]:
        """Hasse-Zusammenhangskomponenten der induzierten Teilordnung P[mask], nach Minimum sortiert."""
        rest = self.full if mask is None else mask
        scope = rest
        out: List[SubsetMask] = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                i = lowest_bit(frontier)
                frontier &= frontier - 1
                new = self.comparable_mask(i) & scope & ~comp
                comp |= new
                frontier |= new
            out.append(comp)
            rest &= ~comp
        return tuple(out)

    def is_connected(self, mask: SubsetMask) -> bool:
        return mask != 0 and len(self.components(mask)) == 1

    def label_pairs(self, pairs) -> List[Tuple[Label, Label]]:
        return [(self.ground.labels[x], self.ground.labels[y]) for x, y in pairs]

    def __str__(self) -> str:
        rel = ", ".join(f"{a}<{b}" for a, b in self.label_pairs(self.covers))
        return f"Poset([{', '.join(str(x) for x in self.ground.labels)}]; {rel})"
