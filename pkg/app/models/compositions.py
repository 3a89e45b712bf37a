# app/models/compositions.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, Tuple

from app.models.ground_set import GroundSet, SubsetMask
from app.utils.bitmask import iter_bits, lowest_bit, popcount


@dataclass(frozen=True)
class SetComposition:
    """Geordnete Zerlegung Φ = Φ₁|…|Φ_m einer Grundmenge in nichtleere, disjunkte Blöcke."""

    blocks: Tuple[SubsetMask, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.blocks)

    @cached_property
    def full(self) -> SubsetMask:
        out = 0
        for b in self.blocks:
            out |= b
        return out

    @cached_property
    def block_index(self) -> Dict[int, int]:
        # Element (Bit) -> Position seines Blocks
        return {i: pos for pos, b in enumerate(self.blocks) for i in iter_bits(b)}

    def position(self, element: int) -> int:
        return self.block_index[element]

    def precedes(self, x: int, y: int) -> bool:
        """x <_Φ y"""
        return self.block_index[x] < self.block_index[y]

    def same_block(self, x: int, y: int) -> bool:
        return self.block_index[x] == self.block_index[y]

    def prefix_masks(self) -> Tuple[SubsetMask, ...]:
        """prefix[i] = Φ₁ ∪ … ∪ Φ_{i-1}"""
        out = []
        acc = 0
        for b in self.blocks:
            out.append(acc)
            acc |= b
        return tuple(out)

    def is_valid_for(self, full: SubsetMask) -> bool:
        seen = 0
        for b in self.blocks:
            if b == 0 or b & seen:
                return False
            seen |= b
        return seen == full

    def to_partition(self) -> "SetPartition":
        return SetPartition.of(self.blocks)

    def render(self, ground: GroundSet) -> str:
        return "|".join(_render_block(ground, b) for b in self.blocks)


@dataclass(frozen=True)
class SetPartition:
    """Ungeordnete Zerlegung; kanonisch nach kleinstem Element sortiert."""

    blocks: Tuple[SubsetMask, ...]

    @classmethod
    def of(cls, blocks: Iterable[SubsetMask]) -> "SetPartition":
        return cls(tuple(sorted(blocks, key=lowest_bit)))

    @classmethod
    def singletons(cls, full: SubsetMask) -> "SetPartition":
        return cls(tuple(1 << i for i in iter_bits(full)))

    @classmethod
    def one_block(cls, full: SubsetMask) -> "SetPartition":
        return cls((full,) if full else ())

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.blocks)

    @cached_property
    def full(self) -> SubsetMask:
        out = 0
        for b in self.blocks:
            out |= b
        return out

    @cached_property
    def block_index(self) -> Dict[int, int]:
        return {i: pos for pos, b in enumerate(self.blocks) for i in iter_bits(b)}

    def block_of(self, element: int) -> SubsetMask:
        return self.blocks[self.block_index[element]]

    def meet(self, other: "SetPartition") -> "SetPartition":
        """Gröbste gemeinsame Verfeinerung Φ ∧ Ψ."""
        return SetPartition.of(a & b for a in self.blocks for b in other.blocks if a & b)

    def refines(self, other: "SetPartition") -> bool:
        """True, wenn jeder Block von self in einem Block von other liegt (self ≤ other)."""
        return all(any(b & o == b for o in other.blocks) for b in self.blocks)

    def singleton_count(self) -> int:
        return sum(1 for b in self.blocks if popcount(b) == 1)

    def to_composition(self) -> SetComposition:
        return SetComposition(self.blocks)

    def render(self, ground: GroundSet) -> str:
        return "|".join(_render_block(ground, b) for b in self.blocks)


def _render_block(ground: GroundSet, block: SubsetMask) -> str:
    labels = [str(x) for x in ground.labels_of(block)]
    if all(len(x) == 1 for x in labels):
        return "".join(labels)
    return ",".join(labels)
