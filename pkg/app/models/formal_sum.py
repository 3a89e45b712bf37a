# app/models/formal_sum.py
from __future__ import annotations

from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from app.core.errors import GroundSetMismatch
from app.models.ground_set import GroundSet
from app.models.set_family import GroundedSetFamily


class FormalSum:
    """
    Endliche ganzzahlige Linearkombination von Mengenfamilien auf einer festen Grundmenge I
    (eine homogene Komponente SF[I]). Koeffizient 0 wird nie gespeichert.
    """

    __slots__ = ("ground", "_terms")

    def __init__(self, ground: GroundSet, terms: Optional[Mapping[GroundedSetFamily, int]] = None) -> None:
        self.ground = ground
        clean: Dict[GroundedSetFamily, int] = {}
        for family, coeff in (terms or {}).items():
            if family.ground != ground:
                raise GroundSetMismatch(
                    f"Term auf {list(family.ground.labels)!r} passt nicht zur Summe auf {list(ground.labels)!r}."
                )
            if coeff:
                clean[family] = int(coeff)
        self._terms = clean

    # ------------------------------------------------------------
    # Konstruktion
    # ------------------------------------------------------------
    @classmethod
    def zero(cls, ground: GroundSet) -> "FormalSum":
        return cls(ground)

    @classmethod
    def single(cls, family: GroundedSetFamily, coeff: int = 1) -> "FormalSum":
        return cls(family.ground, {family: coeff})

    @classmethod
    def accumulate(cls, ground: GroundSet, pairs: Iterable[Tuple[GroundedSetFamily, int]]) -> "FormalSum":
        acc: Dict[GroundedSetFamily, int] = {}
        for family, coeff in pairs:
            acc[family] = acc.get(family, 0) + coeff
        return cls(ground, acc)

    # ------------------------------------------------------------
    # Zugriff
    # ------------------------------------------------------------
    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[GroundedSetFamily, int]]:
        return iter(self.terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, family: GroundedSetFamily) -> int:
        return self._terms.get(family, 0)

    def as_dict(self) -> Dict[GroundedSetFamily, int]:
        return dict(self._terms)

    def terms(self) -> List[Tuple[GroundedSetFamily, int]]:
        """Terme in kanonischer Reihenfolge (Mitgliederlisten lexikographisch, dann Koeffizient)."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].sort_key(), kv[1]))

    def coefficients(self) -> List[int]:
        return [c for _, c in self.terms()]

    # ------------------------------------------------------------
    # Arithmetik
    # ------------------------------------------------------------
    def _check(self, other: "FormalSum") -> None:
        if self.ground != other.ground:
            raise GroundSetMismatch(
                f"Summen auf {list(self.ground.labels)!r} und {list(other.ground.labels)!r} sind nicht kompatibel."
            )

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._check(other)
        acc = dict(self._terms)
        for family, coeff in other._terms.items():
            acc[family] = acc.get(family, 0) + coeff
        return FormalSum(self.ground, acc)

    def __neg__(self) -> "FormalSum":
        return FormalSum(self.ground, {f: -c for f, c in self._terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __mul__(self, scalar: int) -> "FormalSum":
        if not isinstance(scalar, int):
            return NotImplemented
        return FormalSum(self.ground, {f: c * scalar for f, c in self._terms.items()})

    __rmul__ = __mul__

    def map_terms(
        self,
        fn: Callable[[GroundedSetFamily], GroundedSetFamily],
        ground: Optional[GroundSet] = None,
    ) -> "FormalSum":
        """Lineare Fortsetzung einer Abbildung auf der Basis."""
        target = ground if ground is not None else self.ground
        return FormalSum.accumulate(target, ((fn(f), c) for f, c in self._terms.items()))

    def join(self, other: "FormalSum") -> "FormalSum":
        """Bilineare Fortsetzung des Join (Produkt in SF)."""
        from app.services.family_service import join

        ground = self.ground.disjoint_union(other.ground)
        return FormalSum.accumulate(
            ground,
            ((join(f, g), a * b) for f, a in self._terms.items() for g, b in other._terms.items()),
        )

    # ------------------------------------------------------------
    # Vergleich
    # ------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.ground == other.ground and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ground, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        inner = " ".join(f"{c:+d}*{f}" for f, c in self.terms())
        return f"FormalSum({inner or '0'})"
