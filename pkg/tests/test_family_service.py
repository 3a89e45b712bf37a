# tests/test_family_service.py
from __future__ import annotations

import random

import pytest

from app.core.errors import (
    CompositionMismatch,
    GroundSetMismatch,
    LabelAlreadyPresent,
    MemberOutsideGround,
    NotGrounded,
    OverlappingGrounds,
    SubsetOutsideGround,
)
from app.models.compositions import SetComposition
from app.models.formal_sum import FormalSum
from app.models.ground_set import GroundSet
from app.models.set_family import GroundedSetFamily
from app.services.family_service import (
    add_phantom,
    contract,
    family_from_masks,
    iterated_coproduct,
    join,
    make_family,
    mu_delta,
    phantoms,
    power_set,
    relabel,
    restrict,
)
from app.services.poset_service import antichain, chain, make_poset, order_ideals
from tests.builders import fam, ground


def _random_family(rng: random.Random, g: GroundSet) -> GroundedSetFamily:
    masks = {0} | {m for m in range(1, 1 << len(g)) if rng.random() < 0.4}
    return family_from_masks(g, masks)


# ------------------------------------------------------------
# Konstruktion
# ------------------------------------------------------------
def test_make_family_counts_members():
    f = fam(2, "", "1", "12")
    assert len(f) == 3
    assert f.phantoms == 0


def test_trivial_family_has_phantom():
    f = make_family(GroundSet.of([2]), [[]])
    assert f.ground.labels_of(phantoms(f)) == (2,)


def test_missing_empty_set_is_rejected_unless_flagged():
    with pytest.raises(NotGrounded):
        fam(1, "1")
    f = make_family(ground(1), [[1]], implicit_empty=True)
    assert 0 in f


def test_member_outside_ground():
    with pytest.raises(MemberOutsideGround):
        fam(2, "", "3")


def test_phantoms_examples():
    assert phantoms(fam(1, "", "1")) == 0
    f = fam(3, "", "1")
    assert f.ground.labels_of(phantoms(f)) == (2, 3)


# ------------------------------------------------------------
# Produkt / Koprodukt
# ------------------------------------------------------------
def test_join_with_trivial_family_is_identity():
    f = fam(2, "", "1", "12")
    trivial = GroundedSetFamily.trivial(GroundSet(()))
    assert join(f, trivial) == f
    assert join(trivial, f) == f


def test_join_of_points_is_boolean():
    a = fam(ground(1), "", "1")
    b = fam(ground(1, 2), "", "2")
    assert join(a, b) == power_set(ground(2))
    assert join(a, b) == order_ideals(antichain(ground(2)))


def test_join_rejects_overlap():
    with pytest.raises(OverlappingGrounds):
        join(fam(1, "", "1"), fam(1, ""))


def test_restrict_and_contract_examples():
    f = fam(2, "", "1", "12")
    g = f.ground
    assert restrict(f, g.mask([1])) == fam(1, "", "1")
    contracted = contract(f, g.mask([1]))
    assert contracted == make_family(GroundSet.of([2]), [[]])
    assert restrict(f, 0) == GroundedSetFamily.trivial(GroundSet(()))
    assert restrict(f, g.full) == f
    assert contract(f, 0) == f
    assert contract(f, g.full) == GroundedSetFamily.trivial(GroundSet(()))


def test_subset_outside_ground():
    with pytest.raises(SubsetOutsideGround):
        restrict(fam(1, "", "1"), 0b10)


def test_iterated_coproduct_examples():
    f = fam(2, "", "1", "12")
    g = f.ground
    left, right = iterated_coproduct(f, SetComposition((g.mask([2]), g.mask([1]))))
    assert left == make_family(GroundSet.of([2]), [[]])
    assert right == make_family(GroundSet.of([1]), [[], [1]])
    first, second = iterated_coproduct(f, SetComposition((g.mask([1]), g.mask([2]))))
    assert first == make_family(GroundSet.of([1]), [[], [1]])
    assert second == make_family(GroundSet.of([2]), [[]])
    assert iterated_coproduct(f, SetComposition((g.full,))) == [f]


def test_iterated_coproduct_rejects_bad_composition():
    f = fam(2, "", "1", "12")
    with pytest.raises(CompositionMismatch):
        iterated_coproduct(f, SetComposition((0b01,)))


def test_mu_delta_betrays_top_element():
    p = make_poset(ground(3), [(1, 3), (2, 3)])
    j = order_ideals(p)
    g = p.ground
    phi = SetComposition((g.mask([1]), g.mask([3]), g.mask([2])))
    result = mu_delta(j, phi)
    assert result == fam(3, "", "1", "2", "12")
    assert result.ground.labels_of(result.phantoms) == (3,)
    assert mu_delta(j, SetComposition((g.full,))) == j


def test_hopf_compatibility(rng):
    for _ in range(40):
        f1 = _random_family(rng, ground(3))
        f2 = _random_family(rng, ground(2, start=4))
        joined = join(f1, f2)
        s = rng.randrange(1 << 5)
        s1 = s & f1.full
        s2 = s >> 3
        assert restrict(joined, s) == join(restrict(f1, s1), restrict(f2, s2))
        assert contract(joined, s) == join(contract(f1, s1), contract(f2, s2))


def test_join_is_commutative(rng):
    for _ in range(20):
        f1 = _random_family(rng, ground(2))
        f2 = _random_family(rng, ground(3, start=3))
        assert join(f1, f2) == join(f2, f1)


def test_coassociativity_under_block_merge(rng):
    # Φ = a|b|c gegen Ψ = ab|c, danach Block ab in a|b zerlegt
    for _ in range(20):
        f = _random_family(rng, ground(4))
        a, b, c = 0b0011, 0b0100, 0b1000
        fine = iterated_coproduct(f, SetComposition((a, b, c)))
        coarse = iterated_coproduct(f, SetComposition((a | b, c)))
        head = coarse[0]
        refined = iterated_coproduct(head, SetComposition((0b011, 0b100)))
        assert refined + [coarse[1]] == fine


def test_groundedness_is_preserved(rng):
    for _ in range(30):
        f = _random_family(rng, ground(5))
        s = rng.randrange(1 << 5)
        assert 0 in restrict(f, s)
        assert 0 in contract(f, s)


# ------------------------------------------------------------
# Phantome / Umbenennung
# ------------------------------------------------------------
def test_add_phantom():
    empty = GroundedSetFamily.trivial(GroundSet(()))
    assert add_phantom(empty, 1) == make_family(ground(1), [[]])
    f = add_phantom(fam(1, "", "1"), 2)
    assert f == fam(2, "", "1")
    twice = add_phantom(add_phantom(fam(1, "", "1"), "x"), "y")
    assert twice.ground.labels == (1, "x", "y")
    with pytest.raises(LabelAlreadyPresent):
        add_phantom(f, 2)


def test_relabel_is_natural_for_join_and_restrict():
    f = order_ideals(chain(ground(2)))
    g = fam(ground(1, 3), "", "3")
    sigma = {1: "a", 2: "b"}
    tau = {3: "c"}
    joined = relabel(join(f, g), {**sigma, **tau})
    assert joined == join(relabel(f, sigma), relabel(g, tau))
    restricted = restrict(relabel(f, sigma), 0b01)
    assert restricted == relabel(restrict(f, 0b01), {1: "a"})


def test_relabel_requires_bijection():
    f = fam(2, "", "1")
    with pytest.raises(LabelAlreadyPresent):
        relabel(f, {1: 5, 2: 5})
    with pytest.raises(SubsetOutsideGround):
        relabel(f, {1: 5})


# ------------------------------------------------------------
# Formalsummen
# ------------------------------------------------------------
def test_formal_sum_arithmetic():
    f = fam(2, "", "1")
    s = FormalSum.single(f)
    assert not (s + (-s))
    assert (s + s).coefficient(f) == 2
    assert len(s * 2 - s * 2) == 0


def test_formal_sum_ground_mismatch():
    with pytest.raises(GroundSetMismatch):
        FormalSum.single(fam(1, "")) + FormalSum.single(fam(2, ""))
