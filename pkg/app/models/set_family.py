# app/models/set_family.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Tuple

from app.models.ground_set import GroundSet, Label, SubsetMask, label_key
from app.utils.bitmask import popcount


@dataclass(frozen=True)
class GroundedSetFamily:
    """
    Gegründete Mengenfamilie (F, I): ∅ ∈ F, jedes Mitglied ⊆ I.
    members ist dedupliziert und aufsteigend sortiert, damit Gleichheit/Hash kanonisch sind.
    Validierung passiert in family_service.make_family; interne Konstruktion über build().
    """

    ground: GroundSet
    members: Tuple[SubsetMask, ...]

    @classmethod
    def build(cls, ground: GroundSet, members: Iterable[SubsetMask]) -> "GroundedSetFamily":
        return cls(ground, tuple(sorted(set(members))))

    @classmethod
    def trivial(cls, ground: GroundSet) -> "GroundedSetFamily":
        return cls(ground, (0,))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.member_set

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    @property
    def full(self) -> SubsetMask:
        return self.ground.full

    @cached_property
    def support(self) -> SubsetMask:
        out = 0
        for m in self.members:
            out |= m
        return out

    @property
    def phantoms(self) -> SubsetMask:
        return self.full & ~self.support

    def member_labels(self) -> List[Tuple[Label, ...]]:
        """Mitglieder als Label-Tupel, sortiert nach (Größe, Labels)."""
        out = [self.ground.labels_of(m) for m in self.members]
        out.sort(key=lambda labels: (len(labels), [label_key(x) for x in labels]))
        return out

    def sort_key(self) -> tuple:
        return (
            [label_key(x) for x in self.ground.labels],
            [(len(m), [label_key(x) for x in m]) for m in self.member_labels()],
        )

    def max_size(self) -> int:
        return max(popcount(m) for m in self.members)

    def __str__(self) -> str:
        body = ", ".join(self.ground.render(m) for m in sorted(self.members, key=lambda m: (popcount(m), m)))
        return f"{{{body}}} on [{', '.join(str(x) for x in self.ground.labels)}]"
