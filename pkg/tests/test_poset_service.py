# tests/test_poset_service.py
from __future__ import annotations

import random

import pytest

from app.core.errors import CycleDetected, NotLatticeOfIdeals, UnknownLabel
from app.models.ground_set import GroundSet
from app.services.family_service import add_phantom, contract
from app.services.poset_service import (
    all_posets,
    antichain,
    chain,
    disjoint_sum,
    dual,
    dualize_family,
    is_lattice_of_ideals,
    order_ideals,
    ordinal_sum,
    random_poset,
    recover_poset,
    restrict_poset,
)
from tests.builders import fam, ground, poset


def test_make_poset_closes_transitively():
    p = poset(3, "1<2,2<3")
    g = p.ground
    assert p.lt(g.position(1), g.position(3))
    assert p.covers == ((0, 1), (1, 2))


def test_cycle_and_unknown_label():
    with pytest.raises(CycleDetected):
        poset(2, "1<2,2<1")
    with pytest.raises(UnknownLabel):
        poset(2, "1<7")


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 3), (3, 19), (4, 219)])
def test_all_posets_counts(n, expected):
    assert sum(1 for _ in all_posets(ground(n))) == expected


def test_order_ideals_of_chain_and_antichain():
    assert len(order_ideals(chain(ground(4)))) == 5
    assert len(order_ideals(antichain(ground(4)))) == 16
    assert order_ideals(poset(3, "1<3,2<3")) == fam(3, "", "1", "2", "12", "123")


def test_recover_poset_roundtrip_all_small():
    for n in range(0, 5):
        for p in all_posets(ground(n)):
            assert recover_poset(order_ideals(p)) == p


def test_recover_poset_with_phantoms():
    j = add_phantom(order_ideals(poset(2, "1<2")), 3)
    p = recover_poset(j)
    assert p.ground.labels == (1, 2)
    assert is_lattice_of_ideals(j)


def test_non_lattice_is_rejected():
    f = fam(3, "", "1", "2", "3", "12", "13", "123")
    with pytest.raises(NotLatticeOfIdeals):
        recover_poset(f)
    assert not is_lattice_of_ideals(fam(2, "", "12"))


def test_dual_and_dualize_family():
    p = poset(3, "1<3,2<3")
    d = dual(p)
    assert d.covers == tuple(sorted((y, x) for x, y in p.covers))
    assert dualize_family(order_ideals(p)) == order_ideals(d)
    assert dual(dual(p)) == p


def test_ordinal_and_disjoint_sum():
    lo = antichain(ground(2))
    hi = antichain(ground(1, start=3))
    total = ordinal_sum(lo, hi)
    assert total == poset(3, "1<3,2<3")
    assert disjoint_sum(lo, hi) == antichain(ground(3))


def test_restrict_poset():
    p = poset(3, "1<2<3")
    r = restrict_poset(p, 0b101)
    assert r.ground == GroundSet.of([1, 3])
    assert r.covers == ((0, 1),)


def test_random_poset_is_deterministic():
    a = random_poset(random.Random(7), ground(5))
    b = random_poset(random.Random(7), ground(5))
    assert a == b


def test_zigzag_ideals_and_dual_under_contraction():
    z = poset(4, "1<3,2<3,2<4")
    j = order_ideals(z)
    assert len(j) == 8
    a = z.ground.mask([2])
    rest = GroundSet.of([1, 3, 4])
    # Dualisieren vertauscht nicht mit Kontraktion
    contracted_first = dualize_family(contract(j, a))
    dualized_first = contract(dualize_family(j), a)
    assert contracted_first == fam(rest, "", "1")
    assert dualized_first == fam(rest, "", "3", "4", "34", "13", "134")
    assert contracted_first != dualized_first


def test_contraction_of_ideals_keeps_filter_as_phantoms():
    for n in range(0, 5):
        for p in all_posets(ground(n)):
            j = order_ideals(p)
            for s in range(1 << n):
                rest = p.full & ~s
                expected = order_ideals(restrict_poset(p, p.full & ~p.filter(s)), p.ground.sub(rest))
                assert contract(j, s) == expected
