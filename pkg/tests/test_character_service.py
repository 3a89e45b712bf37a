# tests/test_character_service.py
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from app.core.errors import DegreeExceedsTruncation, NotInExorcismGroup, TruncationMismatch
from app.models.chain_gang import CGBasis, CGSum
from app.models.character import Character, PowerSeries
from app.services.character_service import (
    H,
    basis_value,
    char_convolve,
    char_eval,
    char_inverse,
    convolve_generic,
    counit_character,
    exorcism_to_series,
    geometric_character,
    geometric_convolve,
    geometric_phantom_value,
    make_character,
    series_to_char,
)

N = 10


def _q(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def _random_character(rng: random.Random, truncation: int = N, exorcised: bool = False) -> Character:
    a = Fraction(0) if exorcised else _q(rng)
    return Character(a, tuple(_q(rng) for _ in range(truncation)))


def test_make_character_pads_to_default_truncation():
    zeta = make_character(1, [2, 3])
    assert zeta.truncation == N
    assert zeta.t[:3] == (Fraction(2), Fraction(3), Fraction(0))
    with pytest.raises(TruncationMismatch):
        make_character(0, [1, 2, 3], truncation=2)


def test_evaluation_is_multiplicative():
    zeta = make_character(Fraction(1, 2), [3, 5], truncation=4)
    assert basis_value(zeta, CGBasis((2, 1), 1)) == Fraction(1, 2) * 5 * 3
    assert char_eval(zeta, CGSum.one()) == 1
    eps = counit_character(4)
    assert char_eval(eps, CGSum.basis(CGBasis.chain(2))) == 0
    assert char_eval(eps, CGSum.one()) == 1
    with pytest.raises(DegreeExceedsTruncation):
        basis_value(zeta, CGBasis.chain(5))


def test_geometric_character_values():
    gamma = geometric_character(2, Fraction(1, 3), truncation=5)
    assert gamma.a == 2
    assert [gamma.chain_value(n) for n in range(6)] == [Fraction(1, 3) ** n for n in range(6)]


def test_counit_is_two_sided_identity(rng):
    eps = counit_character(N)
    for _ in range(10):
        zeta = _random_character(rng)
        assert char_convolve(zeta, eps) == zeta
        assert char_convolve(eps, zeta) == zeta


def test_closed_form_matches_generic_convolution(rng):
    for _ in range(10):
        zeta = _random_character(rng, truncation=6)
        eta = _random_character(rng, truncation=6)
        product = char_convolve(zeta, eta)
        assert convolve_generic(zeta, eta, CGSum.basis(CGBasis.phantom())) == product.a
        for n in range(1, 7):
            assert convolve_generic(zeta, eta, CGSum.basis(CGBasis.chain(n))) == product.chain_value(n)


def test_group_laws(rng):
    eps = counit_character(N)
    for _ in range(10):
        zeta, eta, theta = (_random_character(rng) for _ in range(3))
        assert char_convolve(char_convolve(zeta, eta), theta) == char_convolve(zeta, char_convolve(eta, theta))
        inverse = char_inverse(zeta)
        assert char_convolve(zeta, inverse) == eps
        assert char_convolve(inverse, zeta) == eps
    assert char_inverse(eps) == eps


def test_inverse_small_degrees():
    zeta = make_character(0, [3, 7], truncation=2)
    inverse = char_inverse(zeta)
    assert inverse.a == 0
    assert inverse.chain_value(1) == -3
    assert inverse.chain_value(2) == 3 ** 2 - 7


def test_exorcism_group_is_power_series_group(rng):
    for _ in range(100):
        zeta = _random_character(rng, exorcised=True)
        eta = _random_character(rng, exorcised=True)
        f, g = exorcism_to_series(zeta), exorcism_to_series(eta)
        product = char_convolve(zeta, eta)
        assert product.a == 0
        assert exorcism_to_series(product) == f * g
        assert exorcism_to_series(char_inverse(zeta)) == f.reciprocal()
        assert series_to_char(f) == zeta


def test_exorcism_requires_zero_phantom_value():
    with pytest.raises(NotInExorcismGroup):
        exorcism_to_series(make_character(1, [1], truncation=3))


def test_geometric_series_correspondence():
    t = Fraction(2, 3)
    series = exorcism_to_series(geometric_character(0, t, truncation=N))
    assert series == PowerSeries.of([t ** n for n in range(N + 1)])
    assert series.reciprocal() == PowerSeries.of([1, -t] + [0] * (N - 1))


def test_power_series_arithmetic():
    f = PowerSeries.of([1, 1, 0, 0])
    assert f.reciprocal() == PowerSeries.of([1, -1, 1, -1])
    assert f * f.reciprocal() == PowerSeries.of([1, 0, 0, 0])
    with pytest.raises(ValueError):
        PowerSeries.of([2, 1])


def test_geometric_convolution_matches_closed_form(rng):
    for _ in range(20):
        u, r, v, q = (_q(rng) for _ in range(4))
        product = char_convolve(geometric_character(u, r, 8), geometric_character(v, q, 8))
        assert product.a == geometric_phantom_value(u, v)
        for n in range(1, 9):
            assert geometric_convolve(u, r, v, q, n) == product.chain_value(n)
    assert geometric_convolve(0, 2, 3, 5, 1) == 2 + 5
    # q = r + v
    assert geometric_convolve(0, 1, 1, 2, 3) == H(3, 2, 2) - H(2, 2, 2)


def test_curious_identity(rng):
    for _ in range(20):
        r, q = _q(rng), _q(rng)
        left = char_convolve(geometric_character(1, r, N), geometric_character(1, q, N))
        right = char_convolve(geometric_character(1, q - 1, N), geometric_character(1, r + 1, N))
        assert left == right


def test_diagonal_geometric_characters_add():
    for u, v in [(1, 2), (Fraction(1, 2), Fraction(-1, 3)), (0, 4)]:
        for n in range(0, 6):
            assert geometric_convolve(u, u, v, v, n) == Fraction(u + v) ** n


def test_truncation_mismatch():
    with pytest.raises(TruncationMismatch):
        char_convolve(counit_character(3), counit_character(4))
