# app/models/simplicial_complex.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple

from app.models.compositions import SetPartition
from app.models.ground_set import GroundSet, Label, SubsetMask, label_key
from app.models.set_family import GroundedSetFamily
from app.utils.bitmask import iter_submasks, popcount


def maximal_masks(masks: Iterable[SubsetMask]) -> Tuple[SubsetMask, ...]:
    """Antichain der inklusionsmaximalen Masken, aufsteigend sortiert."""
    ordered = sorted(set(masks), key=lambda m: -popcount(m))
    out: List[SubsetMask] = []
    for m in ordered:
        if not any(m & f == m for f in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplizialkomplex über seinen Facetten (Antichain). ∅ ist immer Seite; Phantom-Ecken erlaubt."""

    ground: GroundSet
    facets: Tuple[SubsetMask, ...]

    @classmethod
    def from_masks(cls, ground: GroundSet, masks: Iterable[SubsetMask]) -> "SimplicialComplex":
        facets = maximal_masks(masks)
        return cls(ground, facets or (0,))

    def contains(self, face: SubsetMask) -> bool:
        return any(face & f == face for f in self.facets)

    @cached_property
    def faces(self) -> FrozenSet[SubsetMask]:
        out = set()
        for f in self.facets:
            out.update(iter_submasks(f))
        return frozenset(out)

    @property
    def vertices(self) -> SubsetMask:
        out = 0
        for f in self.facets:
            out |= f
        return out

    def to_family(self) -> GroundedSetFamily:
        return GroundedSetFamily.build(self.ground, self.faces)

    def facet_labels(self) -> List[Tuple[Label, ...]]:
        out = [self.ground.labels_of(f) for f in self.facets]
        out.sort(key=lambda labels: (-len(labels), [label_key(x) for x in labels]))
        return out

    def __str__(self) -> str:
        body = ",".join("".join(str(x) for x in f) for f in self.facet_labels())
        return f"<{body}>"


@dataclass(frozen=True)
class InflationRecord:
    """Supp_X(Y) samt fundamentalem Inflator FInf_X(Y)."""

    source: SimplicialComplex
    target: SimplicialComplex
    support: Tuple[SetPartition, ...]
    fundamental: SetPartition
