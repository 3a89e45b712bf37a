# app/services/character_service.py
"""
Charaktergruppe von 𝒞: Auswertung, Faltung (geschlossen und generisch über Δ), Inverse über
die Antipode, Exorzismus-Untergruppe ≅ Potenzreihen und geometrische Charaktere.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import comb
from typing import Optional

from app.core.config import settings
from app.core.errors import DegreeExceedsTruncation, NotInExorcismGroup, TruncationMismatch
from app.models.chain_gang import CGBasis, CGSum, Scalar
from app.models.character import Character, PowerSeries
from app.services.chaingang_service import antipode_basis, cg_coproduct

logger = logging.getLogger(__name__)


def _check_same(zeta: Character, eta: Character) -> None:
    if zeta.truncation != eta.truncation:
        raise TruncationMismatch(
            f"Abschneidegrade verschieden: {zeta.truncation} und {eta.truncation}."
        )


def make_character(a: Scalar, t, truncation: Optional[int] = None) -> Character:
    """Füllt t mit Nullen bis zum Abschneidegrad auf (Default aus den Settings)."""
    n = settings.TRUNCATION if truncation is None else truncation
    values = [Fraction(v) for v in t]
    if len(values) > n:
        raise TruncationMismatch(f"{len(values)} Werte für Abschneidegrad {n}.")
    return Character(Fraction(a), tuple(values + [Fraction(0)] * (n - len(values))))


def counit_character(truncation: Optional[int] = None) -> Character:
    return Character.counit(settings.TRUNCATION if truncation is None else truncation)


# ------------------------------------------------------------
# Auswertung
# ------------------------------------------------------------
def basis_value(zeta: Character, b: CGBasis) -> Fraction:
    """ζ(C_λ F^p) = a^p Π t_{λᵢ}"""
    if b.degree > zeta.truncation:
        raise DegreeExceedsTruncation(f"Grad {b.degree} > Abschneidegrad {zeta.truncation}.")
    value = zeta.a ** b.p
    for part in b.lam:
        value *= zeta.chain_value(part)
    return value


def char_eval(zeta: Character, x: CGSum) -> Fraction:
    return sum((c * basis_value(zeta, b) for b, c in x), Fraction(0))


# ------------------------------------------------------------
# Faltung
# ------------------------------------------------------------
def char_convolve(zeta: Character, eta: Character) -> Character:
    """(a+b, r) mit r_n = s_n + Σ_m Σ_j binom(n−m, j) t_{j+1} s_{m−1} b^{n−m−j}."""
    _check_same(zeta, eta)
    b = eta.a
    out = []
    for n in range(1, zeta.truncation + 1):
        r = eta.chain_value(n)
        for m in range(1, n + 1):
            for j in range(0, n - m + 1):
                r += comb(n - m, j) * zeta.chain_value(j + 1) * eta.chain_value(m - 1) * b ** (n - m - j)
        out.append(r)
    return Character(zeta.a + b, tuple(out))


def convolve_generic(zeta: Character, eta: Character, x: CGSum) -> Fraction:
    """(ζ ⊗ η)(Δx)"""
    _check_same(zeta, eta)
    return sum(
        (c * basis_value(zeta, left) * basis_value(eta, right) for (left, right), c in cg_coproduct(x)),
        Fraction(0),
    )


def char_inverse(zeta: Character) -> Character:
    """ζ⁻¹ = ζ ∘ S, auf den Erzeugern F und C_n ausgewertet."""
    a = char_eval(zeta, antipode_basis(CGBasis.phantom()))
    t = tuple(char_eval(zeta, antipode_basis(CGBasis.chain(n))) for n in range(1, zeta.truncation + 1))
    return Character(a, t)


# ------------------------------------------------------------
# Exorzismus-Untergruppe ≅ Potenzreihen
# ------------------------------------------------------------
def exorcism_to_series(zeta: Character) -> PowerSeries:
    if zeta.a != 0:
        raise NotInExorcismGroup(f"Charakter mit a = {zeta.a} liegt nicht in der Exorzismus-Gruppe.")
    return PowerSeries((Fraction(1),) + zeta.t)


def series_to_char(series: PowerSeries) -> Character:
    return Character(Fraction(0), series.coefficients[1:])


# ------------------------------------------------------------
# Geometrische Charaktere
# ------------------------------------------------------------
def geometric_character(u: Scalar, r: Scalar, truncation: Optional[int] = None) -> Character:
    """γ_{u,r} = ζ_{u,(r, r², r³, …)}"""
    n = settings.TRUNCATION if truncation is None else truncation
    r = Fraction(r)
    return Character(Fraction(u), tuple(r ** k for k in range(1, n + 1)))


def H(n: int, r: Scalar, q: Scalar) -> Fraction:
    """H_n(r, q) = Σ_{k=0}^n r^k q^{n−k}; H_{−1} = 0."""
    r, q = Fraction(r), Fraction(q)
    return sum((r ** k * q ** (n - k) for k in range(n + 1)), Fraction(0))


def geometric_convolve(u: Scalar, r: Scalar, v: Scalar, q: Scalar, n: int) -> Fraction:
    """(γ_{u,r} * γ_{v,q})(C_n) = H_n(r+v, q) − v·H_{n−1}(r+v, q); u geht nur in den Wert auf F ein."""
    v = Fraction(v)
    shifted = Fraction(r) + v
    return H(n, shifted, q) - v * H(n - 1, shifted, q)


def geometric_phantom_value(u: Scalar, v: Scalar) -> Fraction:
    return Fraction(u) + Fraction(v)
