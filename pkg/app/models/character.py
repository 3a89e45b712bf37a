# app/models/character.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from app.models.chain_gang import Scalar


def _fractions(values: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Character:
    """ζ_{a,t}: Wert a auf F, t_n auf C_n (t₀ = 1 implizit), gültig bis Grad N."""

    a: Fraction
    t: Tuple[Fraction, ...]

    @classmethod
    def of(cls, a: Scalar, t: Iterable[Scalar]) -> "Character":
        return cls(Fraction(a), _fractions(t))

    @classmethod
    def counit(cls, truncation: int) -> "Character":
        return cls(Fraction(0), (Fraction(0),) * truncation)

    @property
    def truncation(self) -> int:
        return len(self.t)

    def chain_value(self, n: int) -> Fraction:
        """ζ(C_n); C_0 ist die Eins."""
        return Fraction(1) if n == 0 else self.t[n - 1]


@dataclass(frozen=True)
class PowerSeries:
    """1 + Σ c_n x^n, abgeschnitten bei Grad N."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("Der konstante Term einer Potenzreihe muss 1 sein.")

    @classmethod
    def of(cls, coefficients: Iterable[Scalar]) -> "PowerSeries":
        return cls(_fractions(coefficients))

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.truncation, other.truncation)
        return PowerSeries(
            tuple(
                sum((self.coefficients[k] * other.coefficients[i - k] for k in range(i + 1)), Fraction(0))
                for i in range(n + 1)
            )
        )

    def reciprocal(self) -> "PowerSeries":
        out = [Fraction(1)]
        for i in range(1, self.truncation + 1):
            out.append(-sum((self.coefficients[k] * out[i - k] for k in range(1, i + 1)), Fraction(0)))
        return PowerSeries(tuple(out))
