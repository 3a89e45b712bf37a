# app/services/chaingang_service.py
"""
Hopf-Algebra 𝒞 der Kettenbanden: Produkt, Koprodukt, Antipode (graduiert-zusammenhängende
Rekursion), Quotient nach Λ und Fock-Bild von Formalsummen aus dem Monoid.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Tuple

from app.core.errors import NotAChainGang, NotLatticeOfIdeals
from app.models.chain_gang import ONE, CGBasis, CGSum, CGTensor
from app.models.formal_sum import FormalSum
from app.models.set_family import GroundedSetFamily
from app.services.classification_service import is_chain_gang_poset
from app.services.poset_service import recover_poset
from app.utils.bitmask import popcount

logger = logging.getLogger(__name__)

Triple = Tuple[CGBasis, CGBasis, CGBasis]


# ------------------------------------------------------------
# Hilfen: Partitionen und Kompositionen ganzer Zahlen
# ------------------------------------------------------------
def integer_partitions(n: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def integer_compositions(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in integer_compositions(n - first):
            yield (first,) + rest


def basis_of_degree(n: int) -> List[CGBasis]:
    """Alle C_λ F^p mit |λ| + p = n."""
    return [CGBasis(lam, n - k) for k in range(n + 1) for lam in integer_partitions(k)]


# ------------------------------------------------------------
# Produkt / Koprodukt / Koeinheit
# ------------------------------------------------------------
def cg_product(x: CGSum, y: CGSum) -> CGSum:
    return x * y


@lru_cache(maxsize=None)
def _chain_coproduct(n: int) -> CGTensor:
    """Δ(C_n) = 1⊗C_n + Σ_m Σ_j binom(n−m, j) C_{j+1} ⊗ C_{m−1} F^{n−m−j}"""
    pairs = [((ONE, CGBasis.chain(n)), 1)]
    for m in range(1, n + 1):
        for j in range(0, n - m + 1):
            left = CGBasis.chain(j + 1)
            right = CGBasis(CGBasis.chain(m - 1).lam, n - m - j)
            pairs.append(((left, right), comb(n - m, j)))
    return CGTensor.accumulate(pairs)


_PHANTOM_COPRODUCT = CGTensor({(ONE, CGBasis.phantom()): 1, (CGBasis.phantom(), ONE): 1})


@lru_cache(maxsize=None)
def coproduct_basis(b: CGBasis) -> CGTensor:
    """Δ als Algebrenmorphismus: Produkt der Koprodukte der Faktoren."""
    out = CGTensor({(ONE, ONE): 1})
    for part in b.lam:
        out = out * _chain_coproduct(part)
    for _ in range(b.p):
        out = out * _PHANTOM_COPRODUCT
    return out


def cg_coproduct(x: CGSum) -> CGTensor:
    out = CGTensor()
    for b, c in x:
        out = out + CGTensor({k: v * c for k, v in coproduct_basis(b)})
    return out


def counit(x: CGSum) -> Fraction:
    return x.coefficient(ONE)


def coproduct_left_then(x: CGSum) -> Dict[Triple, Fraction]:
    """(Δ ⊗ id) ∘ Δ"""
    acc: Dict[Triple, Fraction] = {}
    for (a, b), c in cg_coproduct(x):
        for (a1, a2), c1 in coproduct_basis(a):
            key = (a1, a2, b)
            acc[key] = acc.get(key, Fraction(0)) + c * c1
    return {k: v for k, v in acc.items() if v}


def coproduct_right_then(x: CGSum) -> Dict[Triple, Fraction]:
    """(id ⊗ Δ) ∘ Δ"""
    acc: Dict[Triple, Fraction] = {}
    for (a, b), c in cg_coproduct(x):
        for (b1, b2), c2 in coproduct_basis(b):
            key = (a, b1, b2)
            acc[key] = acc.get(key, Fraction(0)) + c * c2
    return {k: v for k, v in acc.items() if v}


# ------------------------------------------------------------
# Antipode
# ------------------------------------------------------------
@lru_cache(maxsize=None)
def antipode_basis(b: CGBasis) -> CGSum:
    """S(b) = −b − Σ S(x′)·x″ über das reduzierte Koprodukt."""
    if b == ONE:
        return CGSum.one()
    out = -CGSum.basis(b)
    for (left, right), c in coproduct_basis(b):
        if left.degree == 0 or right.degree == 0:
            continue
        out = out - (antipode_basis(left) * CGSum.basis(right)).scale(c)
    return out


def cg_antipode(x: CGSum) -> CGSum:
    result = x.map_linear(antipode_basis)
    logger.debug("cg_antipode: %d Terme -> %d Terme", len(x), len(result))
    return result


def composition_sum(v: int) -> CGSum:
    """Σ_{α⊨v} (−1)^{ℓ(α)} C_α"""
    return CGSum.accumulate(
        (CGBasis(alpha, 0), -1 if len(alpha) % 2 else 1) for alpha in integer_compositions(v)
    )


def chain_antipode_formula(n: int) -> CGSum:
    """Fock-Bild der Kettenformel: Σ_v (−1)^{n−v} binom(n−1, v−1) Σ_{α⊨v} (−1)^{ℓ(α)} C_α F^{n−v}."""
    if n == 0:
        return CGSum.one()
    out = CGSum()
    for v in range(1, n + 1):
        sign = -1 if (n - v) % 2 else 1
        phantoms = CGSum.basis(CGBasis.phantom(n - v))
        out = out + (composition_sum(v) * phantoms).scale(sign * comb(n - 1, v - 1))
    return out


# ------------------------------------------------------------
# Quotient nach Λ (h-Basis)
# ------------------------------------------------------------
def quotient_to_sym(x: CGSum) -> CGSum:
    """Projektion modulo des Ideals der Terme mit p > 0; C̄_λ entspricht h_λ."""
    return CGSum({b: c for b, c in x if b.p == 0})


def quotient_tensor(t: CGTensor) -> CGTensor:
    return CGTensor({k: c for k, c in t if k[0].p == 0 and k[1].p == 0})


def sym_antipode_h(n: int) -> CGSum:
    """S(h_n) = Σ_{α⊨n} (−1)^{ℓ(α)} h_α"""
    return composition_sum(n)


# ------------------------------------------------------------
# Fock-Bild (Isomorphieklassen)
# ------------------------------------------------------------
def classify_chain_gang(family: GroundedSetFamily) -> CGBasis:
    """Ordnet J(Kettenbande) mit Phantomen ihrer Klasse C_λ F^p zu."""
    try:
        poset = recover_poset(family)
    except NotLatticeOfIdeals as exc:
        raise NotAChainGang(f"{family} ist kein Verband von Ordnungsidealen.") from exc
    if not is_chain_gang_poset(poset):
        raise NotAChainGang(f"{family} ist keine disjunkte Vereinigung von Ketten.")
    lam = tuple(popcount(c) for c in poset.components())
    return CGBasis(lam, popcount(family.phantoms))


def fock_image(element: FormalSum) -> CGSum:
    return CGSum.accumulate((classify_chain_gang(f), c) for f, c in element)
