# tests/test_fracturing_service.py
from __future__ import annotations

import pytest

from app.core.errors import NotAFracturing
from app.models.fracturing import BetrayalFunction
from app.services.enumeration import enumerate_compositions
from app.services.family_service import mu_delta
from app.services.fracturing_service import (
    betrayal_functions,
    betrayed,
    conflict_digraph,
    enumerate_fracturings,
    fractured_family,
    good_fracturings,
    is_acyclic,
    is_good,
    loi_mu_delta,
    make_fracturing,
    supp_beta,
    supp_membership,
    support_system,
)
from app.services.poset_service import all_posets, order_ideals, random_poset
from tests.builders import fam, ground, poset

EXAMPLE_SUPPORT = {"1|2|3", "2|1|3", "12|3", "1|3|2", "2|3|1", "1|23", "2|13"}


@pytest.fixture
def example():
    p = poset(3, "1<3,2<3")
    g = p.ground
    return p, make_fracturing(p, [g.mask([1]), g.mask([2])])


def test_support_system_of_example(example):
    p, q = example
    rendered = [phi.render(p.ground) for phi in support_system(p, q)]
    assert len(rendered) == 7
    assert set(rendered) == EXAMPLE_SUPPORT


def test_supp_beta_decomposition(example):
    p, q = example
    g = p.ground
    betas = list(betrayal_functions(p, q))
    assert len(betas) == 2
    first = {phi.render(g) for phi in supp_beta(p, q, BetrayalFunction(((2, 0),)))}
    second = {phi.render(g) for phi in supp_beta(p, q, BetrayalFunction(((2, 1),)))}
    assert len(first) == len(second) == 5
    assert len(first & second) == 3
    assert first | second == EXAMPLE_SUPPORT


def test_fractured_family_of_example(example):
    p, q = example
    assert fractured_family(q) == fam(3, "", "1", "2", "12")
    assert q.sign() == -1
    assert q.omitted == 0b100


def test_make_fracturing_splits_components():
    p = poset(3, "1<2")
    q = make_fracturing(p, [0b111])
    assert q.blocks == (0b011, 0b100)
    with pytest.raises(NotAFracturing):
        make_fracturing(p, [0b011, 0b010])


def test_betrayed_elements():
    p = poset(3, "1<3,2<3")
    phi = next(c for c in enumerate_compositions(p.ground) if c.render(p.ground) == "1|3|2")
    assert betrayed(p, phi) == 0b100


def test_conflict_digraph_cycle():
    p = poset(4, "1<3,1<4,2<3,2<4")
    g = p.ground
    q = make_fracturing(p, [g.mask([1, 4]), g.mask([2, 3])])
    assert not is_acyclic(q)
    assert conflict_digraph(q).edges == frozenset({(0, 1), (1, 0)})
    chain_q = make_fracturing(poset(2, "1<2"), [0b01, 0b10])
    assert is_acyclic(chain_q)


def test_loi_mu_delta_matches_generic():
    for p in all_posets(ground(3)):
        j = order_ideals(p)
        for phi in enumerate_compositions(p.ground):
            q, family = loi_mu_delta(p, phi)
            assert family == mu_delta(j, phi)
            assert family == fractured_family(q)
            assert supp_membership(p, q, phi)


def test_good_fracturings_characterize_nonempty_support():
    for n in range(0, 5):
        for p in all_posets(ground(n)):
            good = {q.blocks for q in good_fracturings(p)}
            for q in enumerate_fracturings(p):
                nonempty = bool(support_system(p, q))
                assert nonempty == is_good(p, q)
                assert nonempty == (q.blocks in good)


def test_support_members_betray_exactly_the_omitted_elements():
    for p in all_posets(ground(3)):
        for q in good_fracturings(p):
            for phi in support_system(p, q):
                assert betrayed(p, phi) == q.omitted


def test_blocks_of_good_fracturings_are_convex():
    for p in all_posets(ground(4)):
        for q in good_fracturings(p):
            for block in q.blocks:
                for x in range(len(p)):
                    for y in range(len(p)):
                        if not (block >> x & 1 and block >> y & 1):
                            continue
                        for z in range(len(p)):
                            if q.carrier >> z & 1 and p.lt(x, z) and p.lt(z, y):
                                assert block >> z & 1


def test_nonempty_betrayal_supports_intersect():
    for p in all_posets(ground(4)):
        for q in good_fracturings(p):
            supports = [set(supp_beta(p, q, beta)) for beta in betrayal_functions(p, q)]
            supports = [s for s in supports if s]
            if supports:
                assert set.intersection(*supports)


def test_conflict_digraph_of_two_interlocked_chains():
    p = poset(6, "1<2<3,4<5<6,1<4,2<5,3<6")
    g = p.ground
    q1, q2, q3 = g.mask([4]), g.mask([1, 2, 5]), g.mask([3, 6])
    q = make_fracturing(p, [q1, q2, q3])
    index = {block: pos for pos, block in enumerate(q.blocks)}
    assert set(index) == {q1, q2, q3}
    # Q_i → Q_j, sobald ein Element von Q_j unter einem Element von Q_i liegt
    expected = {(q1, q2), (q2, q1), (q3, q1), (q3, q2)}
    assert conflict_digraph(q).edges == frozenset((index[a], index[b]) for a, b in expected)
    assert not is_acyclic(q)
    assert not is_good(p, q)
    assert support_system(p, q) == []


def test_support_membership_only_for_the_computed_fracturing():
    for n in range(1, 5):
        for p in all_posets(ground(n)):
            fracturings = list(enumerate_fracturings(p))
            for phi in enumerate_compositions(p.ground):
                computed = loi_mu_delta(p, phi)[0].blocks
                for q in fracturings:
                    assert supp_membership(p, q, phi) == (q.blocks == computed)


def test_support_membership_on_random_posets(rng):
    g = ground(5)
    for _ in range(4):
        p = random_poset(rng, g)
        fracturings = list(enumerate_fracturings(p))
        for phi in enumerate_compositions(g):
            computed = loi_mu_delta(p, phi)[0].blocks
            hits = [q.blocks for q in fracturings if supp_membership(p, q, phi)]
            assert hits == [computed]


@pytest.mark.parametrize("n, ordered_bell", [(1, 1), (2, 3), (3, 13), (4, 75)])
def test_supports_of_good_fracturings_partition_compositions(n, ordered_bell):
    for p in all_posets(ground(n)):
        seen = set()
        total = 0
        for q in good_fracturings(p):
            support = support_system(p, q)
            total += len(support)
            seen.update(support)
        assert total == len(seen) == ordered_bell
        assert seen == set(enumerate_compositions(p.ground))


def test_supports_partition_compositions_on_random_posets(rng):
    g = ground(5)
    for _ in range(3):
        p = random_poset(rng, g)
        supports = [support_system(p, q) for q in good_fracturings(p)]
        assert sum(len(s) for s in supports) == 541
        assert set().union(*map(set, supports)) == set(enumerate_compositions(g))
