# tests/test_simplicial_service.py
from __future__ import annotations

import random

import pytest

from app.core.errors import (
    FaceOutsideGround,
    DomainError,
    GroundSetMismatch,
    InvalidIntervalParameters,
    InvalidSkeletonDim,
    NotAnInflation,
    NotASimplicialComplex,
    OverlappingGrounds,
    PartitionMismatch,
)
from app.models.compositions import SetPartition
from app.models.formal_sum import FormalSum
from app.services.enumeration import enumerate_partitions
from app.services.simplicial_service import (
    all_complexes,
    antipode_simp,
    antipode_simp_grouped,
    antipode_skeleton,
    color_partition,
    complete_colorful,
    decomp,
    fundamental_inflator,
    fundamental_inflators,
    from_family,
    interval_alternating_sum,
    interval_alternating_sum_bruteforce,
    join_decomposition,
    join_length,
    make_complex,
    p_count,
    random_complex,
    restrict_facets,
    skeleton,
    skeleton_coefficient,
    support_system_simp,
)
from app.services.takeuchi_service import takeuchi_antipode
from tests.builders import cx, fam, ground


@pytest.fixture
def x():
    return cx(4, "123", "34")


def _partition(g, text):
    return SetPartition.of(g.mask(int(c) for c in block) for block in text.split("|"))


def test_make_complex_keeps_facets(x):
    assert len(x.facets) == 2
    trivial = make_complex(ground(1), [])
    assert trivial.facets == (0,)
    assert trivial.vertices == 0
    assert make_complex(ground(3), ["12", "1", "2"]) == cx(3, "12")


def test_antipode_of_example(x):
    g = x.ground
    expected = FormalSum.accumulate(
        g,
        [
            (x.to_family(), 1),
            (cx(g, "1234").to_family(), 4),
            (cx(g, "123", "234").to_family(), -2),
            (cx(g, "123", "134").to_family(), -2),
        ],
    )
    assert antipode_simp(x) == expected
    assert takeuchi_antipode(x.to_family()) == expected


def test_antipode_parallel_matches_sequential(x):
    assert antipode_simp(x, threads=4, chunk_size=2) == antipode_simp(x, threads=1)


def test_grouped_antipode_of_example(x):
    g = x.ground
    grouped = antipode_simp_grouped(x)
    assert len(grouped) == 4
    by_complex = {str(y): (phi.render(g), coeff) for phi, coeff, y in grouped}
    assert by_complex["<123,34>"] == ("124|3", 1)
    assert by_complex["<1234>"][1] == 4
    assert sorted(c for _, c, _ in grouped) == [-2, -2, 1, 4]


def test_decomp_of_example(x):
    g = x.ground
    assert decomp(x, _partition(g, "124|3")) == x
    assert decomp(x, SetPartition.singletons(g.full)) == cx(g, "1234")


def test_support_system_and_fundamental_inflator(x):
    g = x.ground
    full = cx(g, "1234")
    support = support_system_simp(x, full)
    assert len(support) == 7
    assert _partition(g, "124|3") not in support
    assert fundamental_inflator(x, full) == SetPartition.singletons(g.full)
    assert fundamental_inflator(x, x).render(g) == "124|3"


def test_join_decomposition():
    x = cx(4, "123", "34")
    assert join_decomposition(x).render(x.ground) == "124|3"
    assert join_length(x) == 2
    simplex = cx(3, "123")
    assert join_decomposition(simplex) == SetPartition.singletons(simplex.ground.full)
    # Phantom 3 wird eigener Block
    with_phantom = cx(3, "1", "2")
    assert join_decomposition(with_phantom).render(with_phantom.ground) == "12|3"


def test_fundamental_inflator_agrees_blockwise_and_is_join_decomposition():
    for n in range(1, 5):
        g = ground(n)
        partitions = list(enumerate_partitions(g))
        for x in all_complexes(g):
            inflations = {decomp(x, phi) for phi in partitions}
            for y in inflations:
                psi = fundamental_inflator(x, y)
                for block in psi.blocks:
                    assert restrict_facets(x, block) == restrict_facets(y, block), (str(x), str(y))
                assert psi == join_decomposition(y), (str(x), str(y))


def test_point_complex_support_is_everything():
    point = cx(1, "1")
    assert support_system_simp(point, point) == list(enumerate_partitions(point.ground))


def test_zero_dimensional_complex_has_singleton_support_systems():
    x = skeleton(1, ground(4))
    assert all(len(support_system_simp(x, y)) == 1 for _, _, y in antipode_simp_grouped(x))


def test_coefficient_law_exhaustive():
    for n in range(0, 5):
        for x in all_complexes(ground(n)):
            coeff = antipode_simp(x).coefficient(x.to_family())
            assert coeff == (-1) ** join_length(x), str(x)


def test_oracle_on_small_and_random_complexes(rng):
    for n in range(0, 4):
        for x in all_complexes(ground(n)):
            assert antipode_simp(x) == takeuchi_antipode(x.to_family()), str(x)
    for _ in range(20):
        x = random_complex(rng, ground(rng.randint(5, 6)))
        assert antipode_simp(x) == takeuchi_antipode(x.to_family()), str(x)


def test_support_systems_are_meet_and_interval_closed():
    for n in range(1, 5):
        g = ground(n)
        partitions = list(enumerate_partitions(g))
        for x in all_complexes(g):
            groups = {}
            for phi in partitions:
                groups.setdefault(decomp(x, phi), set()).add(phi)
            for members in groups.values():
                for a in members:
                    for b in members:
                        assert a.meet(b) in members
                        if not a.refines(b):
                            continue
                        for theta in partitions:
                            if a.refines(theta) and theta.refines(b):
                                assert theta in members


def test_all_complexes_counts():
    # Antichains in der Booleschen Algebra (Dedekind-Zahlen), ohne die leere Antichain
    assert [len(list(all_complexes(ground(n)))) for n in range(0, 5)] == [1, 2, 5, 19, 167]


def test_skeleton_construction():
    assert skeleton(3, ground(3)) == cx(3, "123")
    assert skeleton(0, ground(2)).facets == (0,)
    assert decomp(skeleton(2, ground(4)), _partition(ground(4), "12|34")) == cx(4, "1234")


def test_p_count_small_values():
    assert p_count(1, 3, 3) == 1
    assert p_count(2, 2, 4) == 3
    assert p_count(3, 1, 2) == 1
    assert p_count(1, 0, 0) == 1
    assert p_count(1, 2, 3) == 0


def test_skeleton_coefficient_example():
    g = ground(2)
    # S(⟨1,2⟩) = −⟨1,2⟩ + 2⟨12⟩
    assert skeleton_coefficient(1, SetPartition.singletons(g.full)) == 2
    assert skeleton_coefficient(1, SetPartition.one_block(g.full)) == -1
    expected = FormalSum.accumulate(g, [(cx(g, "1", "2").to_family(), -1), (cx(g, "12").to_family(), 2)])
    assert antipode_skeleton(1, 2) == expected


def test_skeleton_closed_form():
    for n in range(1, 7):
        for m in range(1, n + 1):
            assert antipode_skeleton(m, n) == antipode_simp(skeleton(m, ground(n))), (m, n)


def test_interval_alternating_sum():
    for k in range(1, 7):
        for b in range(1, 5):
            assert interval_alternating_sum(k, b) == interval_alternating_sum_bruteforce(k, b)
    with pytest.raises(InvalidIntervalParameters) as info:
        interval_alternating_sum(0, 2)
    assert isinstance(info.value, DomainError)
    assert info.value.exit_code == 3
    with pytest.raises(InvalidIntervalParameters):
        interval_alternating_sum(3, 0)


def test_complete_colorful_complex():
    parts = [ground(2), ground(2, start=3)]
    x = complete_colorful(parts)
    assert x == cx(4, "13", "14", "23", "24")
    assert fundamental_inflator(x, x).render(x.ground) == "12|34"
    assert complete_colorful([ground(3)]) == skeleton(1, ground(3))
    assert complete_colorful([ground(1, start=i) for i in range(1, 4)]) == cx(3, "123")
    with pytest.raises(OverlappingGrounds):
        complete_colorful([ground(2), ground(2, start=2)])


@pytest.mark.parametrize("sizes", [(2, 2), (2, 3)])
def test_colorful_inflators_are_monochromatic(sizes):
    parts = [ground(sizes[0]), ground(sizes[1], start=sizes[0] + 1)]
    x = complete_colorful(parts)
    colors = color_partition(parts)
    monochromatic = {phi for phi in enumerate_partitions(x.ground) if phi.refines(colors)}
    assert set(fundamental_inflators(x)) == monochromatic


def test_errors(x):
    with pytest.raises(FaceOutsideGround):
        make_complex(ground(3), [[1, 4]])
    with pytest.raises(NotASimplicialComplex):
        from_family(fam(2, "", "12"))
    with pytest.raises(InvalidSkeletonDim):
        skeleton(4, ground(3))
    with pytest.raises(InvalidSkeletonDim):
        antipode_skeleton(0, 3)
    with pytest.raises(PartitionMismatch):
        decomp(x, SetPartition.of([0b0011, 0b0100]))
    with pytest.raises(GroundSetMismatch):
        support_system_simp(x, cx(3, "123"))
    with pytest.raises(NotAnInflation):
        fundamental_inflator(cx(2, "12"), cx(2, "1", "2"))
    assert from_family(fam(2, "", "1", "2", "12")) == cx(2, "12")
