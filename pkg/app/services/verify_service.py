# app/services/verify_service.py
"""
Orakelvergleiche für `verify` und `--oracle`: geschlossene Formeln gegen Takeuchi
(bzw. die gruppierte Rekursion), mit erstem abweichenden Term im Bericht.
"""
from __future__ import annotations

import logging
import random
from typing import Callable, List, Optional, Tuple

from app.core.config import settings
from app.core.errors import ensure_ground_size
from app.models.chain_gang import CGBasis, CGSum
from app.models.formal_sum import FormalSum
from app.models.ground_set import GroundSet
from app.models.poset import Poset
from app.models.set_family import GroundedSetFamily
from app.models.simplicial_complex import SimplicialComplex
from app.schemas.verify import TermDiffOut, VerifyCaseOut, VerifyReportOut
from app.services.chaingang_service import cg_antipode, chain_antipode_formula, fock_image
from app.services.family_service import add_phantom, family_from_masks
from app.services.loi_antipode_service import antipode_loi, antipode_of_dual, antipode_ordinal_sum
from app.services.poset_service import chain, dual, ordinal_sum, order_ideals, random_poset
from app.services.simplicial_service import antipode_simp, antipode_skeleton, random_complex, skeleton
from app.services.takeuchi_service import recursive_antipode, takeuchi_antipode
from app.utils.render import family_text

logger = logging.getLogger(__name__)

# bis zu dieser Größe läuft das direkte Takeuchi-Orakel, darüber die gruppierte Rekursion
DIRECT_ORACLE_LIMIT = 6

TARGETS = (
    "antipode-loi",
    "antipode-simp",
    "antipode-skeleton",
    "antipode-ordsum",
    "antipode-dual",
    "exorcism",
    "cg-antipode",
)


def make_rng(seed: Optional[int] = None) -> random.Random:
    return random.Random(settings.HOPF_SETFAM_SEED if seed is None else seed)


def oracle_antipode(family: GroundedSetFamily, max_ground: Optional[int] = None, threads: Optional[int] = None) -> FormalSum:
    ensure_ground_size(len(family.ground), max_ground)
    if len(family.ground) <= DIRECT_ORACLE_LIMIT:
        return takeuchi_antipode(family, threads=threads, max_ground=max_ground)
    return recursive_antipode(family, max_ground=max_ground)


# ------------------------------------------------------------
# Vergleich
# ------------------------------------------------------------
def compare_sums(instance: str, expected: FormalSum, actual: FormalSum) -> VerifyCaseOut:
    if expected == actual:
        return VerifyCaseOut(instance=instance, status="EQUAL", terms=len(actual))
    keys = set(expected.as_dict()) | set(actual.as_dict())
    first = None
    for family in sorted(keys, key=lambda f: f.sort_key()):
        if expected.coefficient(family) != actual.coefficient(family):
            first = family
            break
    return VerifyCaseOut(
        instance=instance,
        status="DIFF",
        terms=len(actual),
        first_difference=TermDiffOut(
            term=family_text(first),
            expected=str(expected.coefficient(first)),
            actual=str(actual.coefficient(first)),
        ),
    )


def compare_cg(instance: str, expected: CGSum, actual: CGSum) -> VerifyCaseOut:
    if expected == actual:
        return VerifyCaseOut(instance=instance, status="EQUAL", terms=len(actual))
    keys = {b for b, _ in expected} | {b for b, _ in actual}
    diff = None
    for b in sorted(keys, key=lambda b: (b.degree, b.lam, b.p)):
        if expected.coefficient(b) != actual.coefficient(b):
            diff = TermDiffOut(term=b.render(), expected=str(expected.coefficient(b)), actual=str(actual.coefficient(b)))
            break
    return VerifyCaseOut(instance=instance, status="DIFF", terms=len(actual), first_difference=diff)


def report(target: str, cases: List[VerifyCaseOut]) -> VerifyReportOut:
    status = "EQUAL" if all(c.status == "EQUAL" for c in cases) else "DIFF"
    logger.info("verify %s: %d Fälle, %s", target, len(cases), status)
    return VerifyReportOut(target=target, status=status, checked=len(cases), cases=cases)


# ------------------------------------------------------------
# Einzelfälle
# ------------------------------------------------------------
def verify_loi(poset: Poset, max_ground: Optional[int] = None, threads: Optional[int] = None) -> VerifyCaseOut:
    ensure_ground_size(len(poset), max_ground)
    expected = oracle_antipode(order_ideals(poset), max_ground, threads)
    return compare_sums(str(poset), expected, antipode_loi(poset, max_ground))


def verify_dual(poset: Poset, max_ground: Optional[int] = None) -> VerifyCaseOut:
    ensure_ground_size(len(poset), max_ground)
    expected = antipode_loi(dual(poset), max_ground)
    return compare_sums(f"dual {poset}", expected, antipode_of_dual(poset, max_ground))


def verify_ordsum(lo: Poset, hi: Poset, max_ground: Optional[int] = None) -> VerifyCaseOut:
    ensure_ground_size(len(lo) + len(hi), max_ground)
    expected = antipode_loi(ordinal_sum(lo, hi), max_ground)
    return compare_sums(f"{lo} ⊕ {hi}", expected, antipode_ordinal_sum(lo, hi, max_ground=max_ground))


def verify_simp(x: SimplicialComplex, max_ground: Optional[int] = None, threads: Optional[int] = None) -> VerifyCaseOut:
    ensure_ground_size(len(x.ground), max_ground)
    expected = oracle_antipode(x.to_family(), max_ground, threads)
    return compare_sums(str(x), expected, antipode_simp(x, threads=threads, max_ground=max_ground))


def verify_skeleton(m: int, n: int, max_ground: Optional[int] = None, threads: Optional[int] = None) -> VerifyCaseOut:
    ensure_ground_size(n, max_ground)
    x = skeleton(m, GroundSet.range(n))
    expected = antipode_simp(x, threads=threads, max_ground=max_ground)
    return compare_sums(f"sk({m}, {n})", expected, antipode_skeleton(m, n, max_ground))


def verify_exorcism(family: GroundedSetFamily, label: object = "x", max_ground: Optional[int] = None) -> VerifyCaseOut:
    """S(γF) = −γ(S F)"""
    ensure_ground_size(len(family.ground) + 1, max_ground)
    lifted = add_phantom(family, label)
    expected = -oracle_antipode(family, max_ground).map_terms(lambda f: add_phantom(f, label), lifted.ground)
    return compare_sums(f"γ {family}", expected, oracle_antipode(lifted, max_ground))


def verify_cg_chain(n: int) -> VerifyCaseOut:
    """Fock-Bild der Takeuchi-Antipode von J(C_n) gegen Rekursion und Kettenformel."""
    computed = cg_antipode(CGSum.basis(CGBasis.chain(n)))
    formula = chain_antipode_formula(n)
    if computed != formula:
        return compare_cg(f"C_{n} (Formel)", formula, computed)
    monoid = fock_image(oracle_antipode(order_ideals(chain(GroundSet.range(n)))))
    return compare_cg(f"C_{n}", monoid, computed)


# ------------------------------------------------------------
# Zufallsinstanzen
# ------------------------------------------------------------
def random_family(rng: random.Random, ground: GroundSet, density: float = 0.4) -> GroundedSetFamily:
    masks = {0} | {m for m in range(1, 1 << len(ground)) if rng.random() < density}
    return family_from_masks(ground, masks)


def _split_ground(rng: random.Random, size: int) -> Tuple[GroundSet, GroundSet]:
    k = rng.randint(0, size)
    return GroundSet.range(k), GroundSet.range(size - k, start=k + 1)


def run_random(
    target: str,
    count: int,
    size: int,
    rng: random.Random,
    max_ground: Optional[int] = None,
    threads: Optional[int] = None,
) -> VerifyReportOut:
    ensure_ground_size(size, max_ground)
    ground = GroundSet.range(size)
    builders: dict[str, Callable[[], VerifyCaseOut]] = {
        "antipode-loi": lambda: verify_loi(random_poset(rng, ground), max_ground, threads),
        "antipode-dual": lambda: verify_dual(random_poset(rng, ground), max_ground),
        "antipode-ordsum": lambda: _random_ordsum(rng, size, max_ground),
        "antipode-simp": lambda: verify_simp(random_complex(rng, ground), max_ground, threads),
        "antipode-skeleton": lambda: verify_skeleton(rng.randint(1, max(size, 1)), max(size, 1), max_ground, threads),
        "exorcism": lambda: verify_exorcism(random_family(rng, ground), max_ground=max_ground),
        "cg-antipode": lambda: verify_cg_chain(rng.randint(0, size)),
    }
    cases = [builders[target]() for _ in range(count)]
    return report(target, cases)


def _random_ordsum(rng: random.Random, size: int, max_ground: Optional[int]) -> VerifyCaseOut:
    lo_ground, hi_ground = _split_ground(rng, size)
    return verify_ordsum(random_poset(rng, lo_ground), random_poset(rng, hi_ground), max_ground)
