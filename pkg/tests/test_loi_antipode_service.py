# tests/test_loi_antipode_service.py
from __future__ import annotations

import random

from app.models.formal_sum import FormalSum
from app.services.fracturing_service import good_fracturings
from app.services.loi_antipode_service import (
    antipode_antichain,
    antipode_chain_formula,
    antipode_complete_ranked,
    antipode_loi,
    antipode_of_dual,
    antipode_ordinal_sum,
    hybrid_components,
)
from app.services.poset_service import (
    all_posets,
    antichain,
    chain,
    dual,
    ordinal_sum,
    order_ideals,
    random_poset,
)
from app.services.takeuchi_service import recursive_antipode, takeuchi_antipode
from tests.builders import fam, ground, poset


def test_example_three_element_poset():
    p = poset(3, "1<3,2<3")
    expected = FormalSum.accumulate(
        p.ground,
        [
            (fam(3, "", "1", "2", "12"), -1),
            (fam(3, "", "1", "2", "12", "123"), -1),
            (fam(3, "", "1", "2", "12", "13", "123"), 1),
            (fam(3, "", "1", "2", "12", "23", "123"), 1),
            (fam(3, "", "1", "2", "3", "12", "13", "23", "123"), -1),
        ],
    )
    assert antipode_loi(p) == expected
    assert takeuchi_antipode(order_ideals(p)) == expected


def test_all_small_posets_match_takeuchi():
    for n in range(0, 5):
        for p in all_posets(ground(n)):
            assert antipode_loi(p) == takeuchi_antipode(order_ideals(p)), str(p)


def test_random_posets_match_recursive_antipode():
    rng = random.Random(20240611)
    for _ in range(200):
        p = random_poset(rng, ground(rng.randint(5, 7)))
        assert antipode_loi(p) == recursive_antipode(order_ideals(p)), str(p)


def test_terms_are_cancellation_free():
    rng = random.Random(3)
    for _ in range(50):
        p = random_poset(rng, ground(rng.randint(1, 6)))
        result = antipode_loi(p)
        assert set(result.coefficients()) <= {-1, 1}
        assert len(result) == len(list(good_fracturings(p)))


def test_antichain_is_fixed_up_to_sign():
    for n in range(0, 6):
        g = ground(n)
        expected = FormalSum.single(order_ideals(antichain(g)), (-1) ** n)
        assert antipode_antichain(g) == expected
        assert antipode_loi(antichain(g)) == expected


def test_chain_formula():
    for n in range(0, 7):
        g = ground(n)
        assert antipode_chain_formula(g) == antipode_loi(chain(g)), n


def test_dual_formula_on_random_posets():
    rng = random.Random(11)
    for _ in range(100):
        p = random_poset(rng, ground(rng.randint(1, 6)))
        assert antipode_of_dual(p) == antipode_loi(dual(p)), str(p)


def test_ordinal_sum_formula_on_random_posets():
    rng = random.Random(5)
    for _ in range(100):
        a = rng.randint(0, 3)
        b = rng.randint(1, 6 - max(a, 1))
        lo = random_poset(rng, ground(a))
        hi = random_poset(rng, ground(b, start=a + 1))
        assert antipode_ordinal_sum(lo, hi) == antipode_loi(ordinal_sum(lo, hi)), f"{lo} ⊕ {hi}"


def test_hybrid_components_meet_both_parts():
    lo = antichain(ground(1))
    hi = antichain(ground(1, start=2))
    # 1 < 2: nur {1,2} ist gemischt und zusammenhängend
    assert hybrid_components(lo, hi) == [0b11]


def test_complete_ranked_poset():
    levels = [ground(2), ground(1, start=3), ground(2, start=4)]
    total = antichain(levels[0])
    for level in levels[1:]:
        total = ordinal_sum(total, antichain(level))
    assert antipode_complete_ranked(levels) == antipode_loi(total)
