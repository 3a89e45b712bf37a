# app/models/chain_gang.py
"""
Basis C_λ F^p der Kettenbanden-Algebra sowie dünne Linearkombinationen (CGSum) und
Tensoren (CGTensor) mit exakten rationalen Koeffizienten.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class CGBasis:
    """Isomorphieklasse einer Kettenbande: Kettenlängen λ (absteigend) und p Phantome."""

    lam: Tuple[int, ...] = ()
    p: int = 0

    def __post_init__(self) -> None:
        if any(part <= 0 for part in self.lam) or self.p < 0:
            raise ValueError("Teile von λ müssen positiv sein, p ≥ 0")
        object.__setattr__(self, "lam", tuple(sorted(self.lam, reverse=True)))

    @classmethod
    def chain(cls, n: int) -> "CGBasis":
        """C_n; C_0 ist die Eins."""
        return cls((n,) if n else (), 0)

    @classmethod
    def phantom(cls, p: int = 1) -> "CGBasis":
        return cls((), p)

    @property
    def degree(self) -> int:
        return sum(self.lam) + self.p

    def __mul__(self, other: "CGBasis") -> "CGBasis":
        return CGBasis(self.lam + other.lam, self.p + other.p)

    def render(self) -> str:
        if not self.lam and not self.p:
            return "1"
        out = ""
        if self.lam:
            out += "C[" + ",".join(str(x) for x in self.lam) + "]"
        if self.p:
            out += "F" if self.p == 1 else f"F^{self.p}"
        return out

    def __str__(self) -> str:
        return self.render()


ONE = CGBasis()


def _sort_key(b: CGBasis) -> tuple:
    return (b.degree, b.lam, b.p)


class CGSum:
    """Σ c_b · b mit Fraction-Koeffizienten; Nullkoeffizienten werden nie gespeichert."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[CGBasis, Scalar]] = None) -> None:
        self._terms: Dict[CGBasis, Fraction] = {}
        for b, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self._terms[b] = c

    @classmethod
    def basis(cls, b: CGBasis, coeff: Scalar = 1) -> "CGSum":
        return cls({b: coeff})

    @classmethod
    def one(cls) -> "CGSum":
        return cls({ONE: 1})

    @classmethod
    def accumulate(cls, pairs: Iterable[Tuple[CGBasis, Scalar]]) -> "CGSum":
        acc: Dict[CGBasis, Fraction] = {}
        for b, c in pairs:
            acc[b] = acc.get(b, Fraction(0)) + c
        return cls(acc)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[CGBasis, Fraction]]:
        return iter(self.terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, b: CGBasis) -> Fraction:
        return self._terms.get(b, Fraction(0))

    def terms(self) -> List[Tuple[CGBasis, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def homogeneous(self, degree: int) -> "CGSum":
        return CGSum({b: c for b, c in self._terms.items() if b.degree == degree})

    def max_degree(self) -> int:
        return max((b.degree for b in self._terms), default=0)

    def __add__(self, other: "CGSum") -> "CGSum":
        out = dict(self._terms)
        for b, c in other._terms.items():
            out[b] = out.get(b, Fraction(0)) + c
        return CGSum(out)

    def __neg__(self) -> "CGSum":
        return CGSum({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: "CGSum") -> "CGSum":
        return self + (-other)

    def scale(self, scalar: Scalar) -> "CGSum":
        return CGSum({b: c * scalar for b, c in self._terms.items()})

    def __mul__(self, other: "CGSum") -> "CGSum":
        """Bilineares Produkt (C_λF^p)(C_μF^q) = C_{λ∪μ}F^{p+q}."""
        if not isinstance(other, CGSum):
            return self.scale(other)
        return CGSum.accumulate(
            (a * b, ca * cb) for a, ca in self._terms.items() for b, cb in other._terms.items()
        )

    __rmul__ = scale

    def map_linear(self, fn: Callable[[CGBasis], "CGSum"]) -> "CGSum":
        out = CGSum()
        for b, c in self._terms.items():
            out = out + fn(b).scale(c)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CGSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for b, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = b.render()
            if mag == 1:
                text = body
            elif body == "1":
                text = str(mag)
            else:
                text = f"{mag}*{body}"
            parts.append((sign, text))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"CGSum({self.render()})"


class CGTensor:
    """Σ c · (b₁ ⊗ b₂), Codomäne des Koprodukts."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[CGBasis, CGBasis], Scalar]] = None) -> None:
        self._terms: Dict[Tuple[CGBasis, CGBasis], Fraction] = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self._terms[k] = c

    @classmethod
    def accumulate(cls, pairs: Iterable[Tuple[Tuple[CGBasis, CGBasis], Scalar]]) -> "CGTensor":
        acc: Dict[Tuple[CGBasis, CGBasis], Fraction] = {}
        for k, c in pairs:
            acc[k] = acc.get(k, Fraction(0)) + c
        return cls(acc)

    @classmethod
    def pure(cls, left: CGSum, right: CGSum) -> "CGTensor":
        return cls.accumulate(((a, b), ca * cb) for a, ca in left for b, cb in right)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Tuple[CGBasis, CGBasis], Fraction]]:
        return iter(self.terms())

    def coefficient(self, left: CGBasis, right: CGBasis) -> Fraction:
        return self._terms.get((left, right), Fraction(0))

    def terms(self) -> List[Tuple[Tuple[CGBasis, CGBasis], Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (_sort_key(kv[0][0]), _sort_key(kv[0][1])))

    def __add__(self, other: "CGTensor") -> "CGTensor":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return CGTensor(out)

    def __sub__(self, other: "CGTensor") -> "CGTensor":
        return self + CGTensor({k: -c for k, c in other._terms.items()})

    def __mul__(self, other: "CGTensor") -> "CGTensor":
        """Komponentenweises Produkt in 𝒞 ⊗ 𝒞."""
        return CGTensor.accumulate(
            ((a1 * a2, b1 * b2), c1 * c2)
            for (a1, b1), c1 in self._terms.items()
            for (a2, b2), c2 in other._terms.items()
        )

    def map_legs(
        self,
        left: Callable[[CGBasis], CGSum],
        right: Callable[[CGBasis], CGSum],
    ) -> "CGTensor":
        out = CGTensor()
        for (a, b), c in self._terms.items():
            out = out + CGTensor.pure(left(a).scale(c), right(b))
        return out

    def multiply(self) -> CGSum:
        """μ: 𝒞 ⊗ 𝒞 → 𝒞"""
        return CGSum.accumulate((a * b, c) for (a, b), c in self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CGTensor):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*({a.render()} ⊗ {b.render()})" for (a, b), c in self.terms())

    def __repr__(self) -> str:
        return f"CGTensor({self.render()})"
