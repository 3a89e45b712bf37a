# app/models/ground_set.py
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, Sequence, Tuple, Type, Union

from app.core.errors import DomainError, OverlappingGrounds, UnknownLabel
from app.utils.bitmask import compress, expand, iter_bits

Label = Union[int, str]
SubsetMask = int


def label_key(label: Label) -> Tuple[int, Union[int, str]]:
    # Zahlen vor Strings, jeweils natürlich sortiert
    if isinstance(label, int) and not isinstance(label, bool):
        return (0, label)
    return (1, str(label))


def normalize_label(raw: object) -> Label:
    """'12' -> 12, sonst String (ohne Leerzeichen)."""
    if isinstance(raw, bool):
        raise UnknownLabel(f"Ungültiges Label: {raw!r}")
    if isinstance(raw, int):
        return raw
    text = str(raw).strip()
    if text.isdigit():
        return int(text)
    return text


@dataclass(frozen=True)
class GroundSet:
    """
    Endliche Grundmenge I. Die Labels liegen immer in kanonischer Reihenfolge vor;
    die Position eines Labels ist sein Bit in jeder SubsetMask.
    """

    labels: Tuple[Label, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.labels, key=label_key))
        if len(set(ordered)) != len(ordered):
            raise DomainError(f"Labels der Grundmenge sind nicht paarweise verschieden: {ordered!r}")
        object.__setattr__(self, "labels", ordered)

    @classmethod
    def of(cls, labels: Iterable[object]) -> "GroundSet":
        return cls(tuple(normalize_label(x) for x in labels))

    @classmethod
    def range(cls, n: int, start: int = 1) -> "GroundSet":
        return cls(tuple(range(start, start + n)))

    # ------------------------------------------------------------
    # Basis
    # ------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.index

    @cached_property
    def index(self) -> Dict[Label, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def full(self) -> SubsetMask:
        return (1 << len(self.labels)) - 1

    def position(self, label: Label, error: Type[DomainError] = UnknownLabel) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise error(f"Label {label!r} liegt nicht in der Grundmenge {list(self.labels)!r}.")

    def mask(self, labels: Iterable[Label], error: Type[DomainError] = UnknownLabel) -> SubsetMask:
        out = 0
        for label in labels:
            out |= 1 << self.position(label, error)
        return out

    def labels_of(self, mask: SubsetMask) -> Tuple[Label, ...]:
        return tuple(self.labels[i] for i in iter_bits(mask))

    # ------------------------------------------------------------
    # Mengenoperationen auf Grundmengen
    # ------------------------------------------------------------
    def sub(self, mask: SubsetMask) -> "GroundSet":
        return GroundSet(self.labels_of(mask))

    def disjoint_union(self, other: "GroundSet") -> "GroundSet":
        common = set(self.labels) & set(other.labels)
        if common:
            raise OverlappingGrounds(
                f"Grundmengen überschneiden sich in {sorted(common, key=label_key)!r}."
            )
        return GroundSet(self.labels + other.labels)

    def with_label(self, label: Label) -> "GroundSet":
        return GroundSet(self.labels + (label,))

    def render(self, mask: SubsetMask) -> str:
        labels = self.labels_of(mask)
        if not labels:
            return "{}"
        return ",".join(str(x) for x in labels)


@lru_cache(maxsize=4096)
def _table(src: GroundSet, dst: GroundSet) -> Tuple[int, ...]:
    return tuple(dst.position(label) for label in src.labels)


def translate(mask: SubsetMask, src: GroundSet, dst: GroundSet) -> SubsetMask:
    """Überträgt eine Teilmenge von src in die Bitkodierung von dst (Labels müssen in dst liegen)."""
    if src == dst:
        return mask
    table = _table(src, dst)
    out = 0
    for i in iter_bits(mask):
        out |= 1 << table[i]
    return out


def to_sub(mask: SubsetMask, selector: SubsetMask) -> SubsetMask:
    """Teilmenge in I -> Kodierung in der Teil-Grundmenge sub(selector)."""
    return compress(mask, selector)


def from_sub(mask: SubsetMask, selector: SubsetMask) -> SubsetMask:
    return expand(mask, selector)


def parse_labels(items: Sequence[object]) -> Tuple[Label, ...]:
    return tuple(normalize_label(x) for x in items)
