# app/services/simplicial_service.py
"""
Simplizialkomplexe als kokommutatives Untermonoid: Zerlegungen X_Φ, Supportsysteme über
Partitionen, fundamentale Inflatoren, gruppierte Antipode und die geschlossene Form für Skelette.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.errors import (
    FaceOutsideGround,
    GroundSetMismatch,
    InvalidIntervalParameters,
    InvalidSkeletonDim,
    NotAnInflation,
    NotASimplicialComplex,
    PartitionMismatch,
    ensure_ground_size,
)
from app.models.compositions import SetPartition
from app.models.formal_sum import FormalSum
from app.models.ground_set import GroundSet, Label, SubsetMask, normalize_label
from app.models.set_family import GroundedSetFamily
from app.models.simplicial_complex import InflationRecord, SimplicialComplex, maximal_masks
from app.services.classification_service import is_simplicial
from app.services.enumeration import enumerate_partitions, iter_partition_blocks
from app.utils.bitmask import iter_submasks, lowest_bit, popcount

logger = logging.getLogger(__name__)

FacetKey = Tuple[SubsetMask, ...]


# ------------------------------------------------------------
# Konstruktion
# ------------------------------------------------------------
def make_complex(ground: GroundSet, facets: Iterable[Iterable[Label]]) -> SimplicialComplex:
    masks = [ground.mask((normalize_label(x) for x in f), error=FaceOutsideGround) for f in facets]
    return SimplicialComplex.from_masks(ground, masks)


def from_family(family: GroundedSetFamily) -> SimplicialComplex:
    if not is_simplicial(family):
        raise NotASimplicialComplex("Die Familie ist nicht abwärts abgeschlossen.")
    return SimplicialComplex.from_masks(family.ground, family.members)


def skeleton(m: int, ground: GroundSet) -> SimplicialComplex:
    """sk(m, V): alle Teilmengen mit höchstens m Elementen."""
    n = len(ground)
    if m < 0 or m > n:
        raise InvalidSkeletonDim(f"Skelett-Dimension m={m} verlangt 0 ≤ m ≤ {n}.")
    facets = [sum(1 << i for i in combo) for combo in combinations(range(n), m)]
    return SimplicialComplex.from_masks(ground, facets)


def complete_colorful(parts: Sequence[GroundSet]) -> SimplicialComplex:
    """Vollständiger bunter Komplex: Seiten treffen jede Farbklasse höchstens einmal."""
    ground = GroundSet(())
    for part in parts:
        ground = ground.disjoint_union(part)
    classes = [[ground.position(x) for x in part.labels] for part in parts if len(part)]
    facets = [sum(1 << i for i in pick) for pick in product(*classes)]
    return SimplicialComplex.from_masks(ground, facets)


def color_partition(parts: Sequence[GroundSet]) -> SetPartition:
    ground = GroundSet(())
    for part in parts:
        ground = ground.disjoint_union(part)
    return SetPartition.of(ground.mask(part.labels) for part in parts if len(part))


# ------------------------------------------------------------
# Zerlegung X_Φ
# ------------------------------------------------------------
def restrict_facets(x: SimplicialComplex, block: SubsetMask) -> FacetKey:
    """Facetten von X|_block (Bits der ursprünglichen Grundmenge)."""
    return maximal_masks(f & block for f in x.facets)


def _decomp_key(x: SimplicialComplex, blocks: Sequence[SubsetMask]) -> FacetKey:
    current = [0]
    for block in blocks:
        local = restrict_facets(x, block)
        current = [a | b for a in current for b in local]
    # Vereinigungen je einer Facette pro Block bilden bereits eine Antichain
    return tuple(sorted(current))


def decomp(x: SimplicialComplex, phi: SetPartition) -> SimplicialComplex:
    """X_Φ = X|_{Φ₁} * ⋯ * X|_{Φ_k}"""
    seen = 0
    for block in phi.blocks:
        if not block or block & seen:
            raise PartitionMismatch("Die Blöcke der Partition sind leer oder nicht disjunkt.")
        seen |= block
    if seen != x.ground.full:
        raise PartitionMismatch("Die Partition zerlegt die Grundmenge des Komplexes nicht.")
    return SimplicialComplex(x.ground, _decomp_key(x, phi.blocks))


# ------------------------------------------------------------
# Supportsysteme / Inflatoren
# ------------------------------------------------------------
def support_system_simp(x: SimplicialComplex, y: SimplicialComplex) -> List[SetPartition]:
    if x.ground != y.ground:
        raise GroundSetMismatch("X und Y müssen dieselbe Grundmenge haben.")
    return [phi for phi in enumerate_partitions(x.ground) if _decomp_key(x, phi.blocks) == y.facets]


def meet_all(partitions: Iterable[SetPartition]) -> Optional[SetPartition]:
    out: Optional[SetPartition] = None
    for phi in partitions:
        out = phi if out is None else out.meet(phi)
    return out


def fundamental_inflator(x: SimplicialComplex, y: SimplicialComplex) -> SetPartition:
    return inflation_record(x, y).fundamental


def inflation_record(x: SimplicialComplex, y: SimplicialComplex) -> InflationRecord:
    support = support_system_simp(x, y)
    if not support:
        raise NotAnInflation(f"{y} ist keine Inflation von {x}.")
    fundamental = meet_all(support)
    if fundamental not in support:
        # Meet-Abgeschlossenheit verletzt: darf nicht passieren
        raise NotAnInflation("Der Schnitt des Supportsystems liegt nicht im Supportsystem.")
    return InflationRecord(x, y, tuple(support), fundamental)


def join_decomposition(y: SimplicialComplex) -> SetPartition:
    """Feinste Partition Ψ mit Y = Y|_{Ψ₁} * ⋯ * Y|_{Ψ_k}; Phantome landen als Singletons."""
    full = y.ground.full
    if not full:
        return SetPartition(())
    low = 1 << lowest_bit(full)
    result = SetPartition.one_block(full)
    for rest in iter_submasks(full & ~low):
        a = low | rest
        if a == full:
            continue
        split = SetPartition.of((a, full & ~a))
        if _decomp_key(y, split.blocks) == y.facets:
            result = result.meet(split)
    return result


def join_length(y: SimplicialComplex) -> int:
    """m(Y): Länge der kanonischen Join-Zerlegung."""
    return len(join_decomposition(y))


# ------------------------------------------------------------
# Antipode
# ------------------------------------------------------------
def _signed_factorial(k: int) -> int:
    return (-1 if k % 2 else 1) * factorial(k)


def _group_chunk(x: SimplicialComplex, chunk: List[List[SubsetMask]]) -> Dict[FacetKey, int]:
    acc: Dict[FacetKey, int] = {}
    for blocks in chunk:
        key = _decomp_key(x, blocks)
        acc[key] = acc.get(key, 0) + _signed_factorial(len(blocks))
    return acc


def antipode_simp(
    x: SimplicialComplex,
    threads: Optional[int] = None,
    max_ground: Optional[int] = None,
    chunk_size: int = 256,
) -> FormalSum:
    """S(X) = Σ_{Φ⊢I} (−1)^{|Φ|} |Φ|! X_Φ, nach X_Φ gruppiert."""
    ensure_ground_size(len(x.ground), max_ground)
    workers = threads or settings.THREADS
    partitions = list(iter_partition_blocks(x.ground.full))
    acc: Dict[FacetKey, int] = {}
    if workers <= 1 or len(partitions) <= chunk_size:
        acc = _group_chunk(x, partitions)
    else:
        chunks = [partitions[i:i + chunk_size] for i in range(0, len(partitions), chunk_size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(lambda c: _group_chunk(x, c), chunks):
                for key, coeff in part.items():
                    acc[key] = acc.get(key, 0) + coeff
    logger.debug("antipode_simp: %d Partitionen, %d Klassen", len(partitions), len(acc))
    return FormalSum(
        x.ground,
        {SimplicialComplex(x.ground, key).to_family(): c for key, c in acc.items() if c},
    )


def antipode_simp_grouped(x: SimplicialComplex) -> List[Tuple[SetPartition, int, SimplicialComplex]]:
    """(FInf, c_Φ, X_Φ) je Supportsystem; sortiert nach Anzahl der Blöcke des Inflators."""
    groups: Dict[FacetKey, List[SetPartition]] = {}
    for phi in enumerate_partitions(x.ground):
        groups.setdefault(_decomp_key(x, phi.blocks), []).append(phi)
    out = []
    for key, members in groups.items():
        coeff = sum(_signed_factorial(len(phi)) for phi in members)
        out.append((meet_all(members), coeff, SimplicialComplex(x.ground, key)))
    out.sort(key=lambda t: (-len(t[0]), t[0].blocks))
    return out


def fundamental_inflators(x: SimplicialComplex) -> List[SetPartition]:
    """Fund(X)"""
    return [phi for phi, _, _ in antipode_simp_grouped(x)]


# ------------------------------------------------------------
# Skelette
# ------------------------------------------------------------
@lru_cache(maxsize=None)
def p_count(a: int, b: int, c: int) -> int:
    """Partitionen einer c-Menge in b Blöcke der Größe ≤ a."""
    if b == 0:
        return 1 if c == 0 else 0
    if c == 0 or a <= 0:
        return 0
    # Block des letzten Elements hat k Elemente
    return sum(comb(c - 1, k - 1) * p_count(a, b - 1, c - k) for k in range(1, min(a, c) + 1))


def skeleton_coefficient(m: int, phi: SetPartition) -> int:
    s = phi.singleton_count()
    t = len(phi) - s
    return sum(
        (-1 if (t + j) % 2 else 1) * p_count(m, j, s) * factorial(t + j)
        for j in range(0, s + 1)
    )


def skeleton_fundamental_inflators(m: int, ground: GroundSet) -> List[SetPartition]:
    """Partitionen, deren Blöcke Größe 1 oder > m haben."""
    return [
        phi
        for phi in enumerate_partitions(ground)
        if all(popcount(b) == 1 or popcount(b) > m for b in phi.blocks)
    ]


def antipode_skeleton(m: int, n: int, max_ground: Optional[int] = None) -> FormalSum:
    """Geschlossene Form von S(sk(m, n)) über die fundamentalen Inflatoren."""
    if m < 1 or m > n:
        raise InvalidSkeletonDim(f"antipode_skeleton verlangt 1 ≤ m ≤ n (m={m}, n={n}).")
    ensure_ground_size(n, max_ground)
    ground = GroundSet.range(n)
    x = skeleton(m, ground)
    pairs = (
        (decomp(x, phi).to_family(), skeleton_coefficient(m, phi))
        for phi in skeleton_fundamental_inflators(m, ground)
    )
    return FormalSum.accumulate(ground, pairs)


# ------------------------------------------------------------
# Intervallsumme im Partitionsverband
# ------------------------------------------------------------
def interval_alternating_sum(k: int, b: int) -> int:
    """Σ_{Θ∈Π_k} (−1)^{k−|Θ|} (|Θ|+b−1)! = (b−1)! · b^k"""
    if k < 1 or b < 1:
        raise InvalidIntervalParameters(f"k und b müssen ≥ 1 sein (k={k}, b={b}).")
    return factorial(b - 1) * b ** k


def interval_alternating_sum_bruteforce(k: int, b: int) -> int:
    total = 0
    for blocks in iter_partition_blocks((1 << k) - 1):
        total += (-1 if (k - len(blocks)) % 2 else 1) * factorial(len(blocks) + b - 1)
    return total


def random_complex(rng, ground: GroundSet, max_facets: int = 4) -> SimplicialComplex:
    n = len(ground)
    count = rng.randint(0, max_facets)
    return SimplicialComplex.from_masks(ground, (rng.randrange(1 << n) for _ in range(count)))


def all_complexes(ground: GroundSet) -> Iterable[SimplicialComplex]:
    """Alle Komplexe auf ground, aufgezählt über die Facetten-Antichains (nur für kleine n)."""
    n = len(ground)
    seen = set()
    # [] und [∅] liefern denselben trivialen Komplex
    masks = list(range(1 << n))

    def rec(idx: int, chosen: List[SubsetMask]) -> Iterable[SimplicialComplex]:
        if idx == len(masks):
            key = maximal_masks(chosen) or (0,)
            if key not in seen:
                seen.add(key)
                yield SimplicialComplex(ground, key)
            return
        m = masks[idx]
        yield from rec(idx + 1, chosen)
        if not any(m & c == m or m & c == c for c in chosen):
            chosen.append(m)
            yield from rec(idx + 1, chosen)
            chosen.pop()

    yield from rec(0, [])
