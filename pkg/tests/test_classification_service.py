# tests/test_classification_service.py
from __future__ import annotations

import random

import pytest

from app.services.classification_service import (
    FLAG_ORDER,
    classify_family,
    is_accessible,
    is_chain_gang_poset,
    is_greedoid,
    is_intersection_closed,
    is_simplicial,
    is_union_closed,
    satisfies_donation,
    sorted_flags,
)
from app.services.family_service import contract, family_from_masks, join, power_set, restrict
from app.services.poset_service import order_ideals, random_poset
from app.services.simplicial_service import random_complex
from tests.builders import fam, ground, poset

PRESERVED = (is_accessible, is_union_closed, is_intersection_closed, is_simplicial)


def _pool(rng: random.Random, start: int = 1):
    """Mischung aus Zufallsfamilien, Idealverbänden und Komplexen."""
    n = rng.randint(1, 4)
    g = ground(n, start)
    kind = rng.randrange(3)
    if kind == 0:
        return family_from_masks(g, {0} | {m for m in range(1, 1 << n) if rng.random() < 0.4})
    if kind == 1:
        return order_ideals(random_poset(rng, g))
    return random_complex(rng, g).to_family()


def test_accessible_and_intersection_closed_example():
    f = fam(3, "", "1", "2", "3", "12", "13", "123")
    flags = classify_family(f)
    assert {"accessible", "intersection-closed"} <= flags
    assert "simplicial" not in flags
    assert "union-closed" not in flags
    assert "loi" not in flags


def test_donation_fails_after_restriction():
    f = fam(4, "", "2", "4", "14", "24", "23")
    assert is_greedoid(f)
    restricted = restrict(f, 0b0111)
    assert restricted == fam(3, "", "1", "2", "23")
    assert not satisfies_donation(restricted)
    assert not is_greedoid(restricted)


def test_power_set_has_every_flag():
    assert classify_family(power_set(ground(2))) == frozenset(FLAG_ORDER)


def test_chain_gang_detection():
    assert "chain-gang" in classify_family(order_ideals(poset(4, "1<2,3<4")))
    flags = classify_family(order_ideals(poset(3, "1<3,2<3")))
    assert "loi" in flags
    assert "chain-gang" not in flags
    assert is_chain_gang_poset(poset(5, "1<2<3"))
    assert not is_chain_gang_poset(poset(3, "1<2,1<3"))


def test_matroid_from_uniform_complex():
    # U_{2,3}: alle Teilmengen mit höchstens zwei Elementen
    f = fam(3, "", "1", "2", "3", "12", "13", "23")
    flags = classify_family(f)
    assert "matroid" in flags
    assert "antimatroid" not in flags


def test_sorted_flags_follow_fixed_order():
    assert sorted_flags(frozenset({"boolean", "accessible", "loi"})) == ["accessible", "boolean", "loi"]


def test_hierarchy_inclusions(rng):
    implications = [
        ("matroid", "simplicial"),
        ("simplicial", "accessible"),
        ("antimatroid", "accessible"),
        ("antimatroid", "union-closed"),
        ("topology", "union-closed"),
        ("loi", "antimatroid"),
        ("loi", "intersection-closed"),
        ("boolean", "loi"),
        ("boolean", "simplicial"),
        ("chain-gang", "loi"),
    ]
    for _ in range(300):
        flags = classify_family(_pool(rng))
        for strong, weak in implications:
            if strong in flags:
                assert weak in flags, (strong, weak)


@pytest.mark.parametrize("predicate", PRESERVED, ids=lambda p: p.__name__)
def test_classes_are_closed_under_hopf_operations(predicate, rng):
    for _ in range(150):
        a = _pool(rng)
        b = _pool(rng, start=10)
        subset = rng.randrange(1 << len(a.ground))
        if predicate(a) and predicate(b):
            assert predicate(join(a, b))
        if predicate(a):
            assert predicate(restrict(a, subset))
            assert predicate(contract(a, subset))
