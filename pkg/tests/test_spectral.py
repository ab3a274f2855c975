import logging
from itertools import combinations_with_replacement

import pytest

from dyckgen.algebra import LSeries, QLaurent
from dyckgen.constants import GUARD_ENV_VAR
from dyckgen.errors import GuardExceeded, HeightTooLarge, InvalidHeight
from dyckgen.spectral import (
    BosonicPartition,
    PartitionMethod,
    SecularMatrix,
    SpectralFunction,
    bosonic_partition,
    bosonic_partition_dual_product,
    duality_holds,
    excitations_to_levels,
    excitations_to_occupations,
    exclusion_partition,
    grand_partition_exclusion,
    height_generating_function,
    levels_to_excitations,
    levels_to_occupations,
    q_binomial,
    q_factorial,
    secular_det_direct,
    secular_det_recursive,
    secular_det_tilde,
    secular_family,
    secular_methods,
)

F1 = LSeries.from_terms({(0, 0): 1, (2, 0): -1}, order=4)
F2 = LSeries.from_terms({(0, 0): 1, (2, 0): -1, (2, 2): -1}, order=4)
F3 = LSeries.from_terms({(0, 0): 1, (2, 0): -1, (2, 2): -1, (2, 4): -1, (4, 4): 1}, order=4)


def test_low_secular_determinants():
    assert secular_det_recursive(-1, 4) == LSeries.one(4)
    assert secular_det_recursive(0, 4) == LSeries.one(4)
    assert secular_det_recursive(1, 4) == F1
    assert secular_det_recursive(2, 4) == F2
    assert secular_det_recursive(3, 4) == F3


def test_secular_family():
    assert secular_family(3, 4) == [LSeries.one(4), F1, F2, F3]


def test_invalid_height():
    with pytest.raises(InvalidHeight):
        secular_det_recursive(-2, 4)
    with pytest.raises(InvalidHeight):
        secular_det_direct(-1)


def test_direct_determinant_guard(monkeypatch):
    monkeypatch.delenv(GUARD_ENV_VAR, raising=False)
    with pytest.raises(HeightTooLarge):
        secular_det_direct(33)
    with pytest.raises(HeightTooLarge):
        secular_det_tilde(40)


def test_tilde_low_heights():
    assert secular_det_tilde(1) == LSeries.from_terms({(0, 0): 1, (1, 0): -1}, order=1)
    assert secular_det_tilde(2) == LSeries.from_terms({(0, 0): 1, (1, 0): -1, (1, 1): -1}, order=1)
    assert secular_det_tilde(3) == LSeries.from_terms({(0, 0): 1, (1, 0): -1, (1, 1): -1, (1, 2): -1, (2, 2): 1}, order=2)


@pytest.mark.parametrize("k", range(0, 13))
def test_three_determinant_routes_agree(k):
    reference = secular_det_recursive(k, k + 1)
    assert secular_det_direct(k) == reference
    assert secular_det_tilde(k).dilate(2).with_order(k + 1) == reference


@pytest.mark.parametrize("k", range(0, 9))
def test_every_route_agrees(k):
    L = 12
    reference = secular_det_recursive(k, L)
    for name, method in secular_methods().items():
        assert method(k, L) == reference, name


def test_height_generating_function():
    H = height_generating_function(8, 20)
    for k in range(9):
        assert H.coefficient(k) == secular_det_recursive(k, 20)
    with pytest.raises(IndexError):
        H.coefficient(9)


@pytest.mark.parametrize("k", range(0, 13))
def test_secular_duality(k):
    assert duality_holds(k)


@pytest.mark.parametrize("k", range(1, 10))
def test_secular_degree(k):
    F = secular_det_recursive(k, k + 4)
    top = 2 * ((k + 1) // 2)
    assert F.coefficient(top)
    assert all(not F.coefficient(l) for l in range(top + 1, k + 5))
    assert all(not F.coefficient(l) for l in range(1, k + 5, 2))


def test_secular_matrix_structure():
    D = SecularMatrix(2)
    assert D.size == 3
    assert D.cell(0, 0) == {(0, 0): 1}
    assert D.cell(0, 1) == D.cell(1, 0) == {(1, 0): -1}
    assert D.cell(1, 2) == {(1, 1): -1}
    assert D.cell(0, 2) == {}
    assert D.determinant() == {(0, 0): 1, (2, 0): -1, (2, 2): -1}
    assert D.entries[1][2] == LSeries.from_terms({(1, 1): -1}, order=1)


def test_marked_secular_matrix():
    D = SecularMatrix(1, marked=True)
    assert D.gens == "zeta,theta,t"
    assert D.cell(0, 1) == {(1, 0, 1): -1}
    assert D.cell(1, 0) == {(1, 0, 0): -1}
    assert D.determinant() == {(0, 0, 0): 1, (2, 0, 1): -1}


def test_spectral_function():
    spectrum = SpectralFunction(3)
    assert spectrum.levels() == [QLaurent.one(), QLaurent.monomial(2), QLaurent.monomial(4)]
    assert spectrum.fugacity(4) == LSeries.monomial(2, 0, 4, coeff=-1)
    with pytest.raises(InvalidHeight):
        spectrum.level(3)


def test_q_numbers():
    assert q_binomial(4, 2) == QLaurent({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert q_binomial(5, 0) == QLaurent.one()
    assert q_binomial(3, 4) == QLaurent.zero()
    assert q_factorial(3) == QLaurent({0: 1, 1: 2, 2: 2, 3: 1})
    assert q_factorial(0) == QLaurent.one()


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("N", range(0, 7))
def test_bosonic_partition_methods_agree(k, N):
    reference = bosonic_partition_dual_product(k, N).value
    for method in PartitionMethod:
        assert bosonic_partition(k, N, method).value == reference, method
    assert bosonic_partition(k, N).value.at_one() == len(list(combinations_with_replacement(range(k), N)))


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("N", range(0, 7))
def test_bosonic_particle_level_duality(k, N):
    assert bosonic_partition(k, N).value == bosonic_partition(N + 1, k - 1).value


def test_bosonic_partition_in_plaquettes():
    Z = bosonic_partition(2, 2)
    assert Z == BosonicPartition(2, 2, QLaurent({0: 1, 1: 1, 2: 1}))
    assert Z.in_plaquettes() == QLaurent({0: 1, 2: 1, 4: 1})


def test_bosonic_partition_rejects_bad_levels():
    with pytest.raises(InvalidHeight):
        bosonic_partition(0, 2)
    with pytest.raises(InvalidHeight):
        bosonic_partition_dual_product(3, -1)


def test_enumeration_guard(monkeypatch, caplog):
    monkeypatch.delenv(GUARD_ENV_VAR, raising=False)
    with pytest.raises(GuardExceeded):
        bosonic_partition(7, 6, PartitionMethod.OCCUPATION)
    # the formula routes are never guarded
    assert bosonic_partition(7, 6).value == bosonic_partition(7, 6, PartitionMethod.QBINOMIAL).value

    monkeypatch.setenv(GUARD_ENV_VAR, "1")
    with caplog.at_level(logging.WARNING):
        value = bosonic_partition(7, 6, PartitionMethod.EXCITATION).value
    assert value == bosonic_partition(7, 6).value
    assert "exceeds the desk-scale guard" in caplog.text


def test_excitation_numbers():
    assert levels_to_excitations((0, 1, 1), 4) == (2, 0, 1, 0)
    assert excitations_to_levels((2, 0, 1, 0)) == (0, 1, 1)
    assert levels_to_occupations((0, 1, 1), 4) == (1, 2, 0, 0)
    assert excitations_to_occupations((2, 0, 1, 0)) == (1, 2, 0, 0)


@pytest.mark.parametrize("k,N", [(1, 3), (3, 2), (4, 3), (5, 4)])
def test_excitation_bijection(k, N):
    for levels in combinations_with_replacement(range(k), N):
        m = levels_to_excitations(levels, k)
        assert sum(m) == k - 1
        assert sum(i * m_i for i, m_i in enumerate(m)) == sum(levels)
        assert excitations_to_levels(m) == levels
        assert excitations_to_occupations(m) == levels_to_occupations(levels, k)


@pytest.mark.parametrize("k", range(0, 9))
def test_exclusion_partition_matches_enumeration(k):
    for N in range(0, 5):
        assert exclusion_partition(k, N) == exclusion_partition(k, N, enumerate_levels=True)


@pytest.mark.parametrize("k", range(0, 9))
def test_secular_as_grand_partition(k):
    order = k + 1
    coeffs = {2 * N: exclusion_partition(k, N, enumerate_levels=True).dilate(2).scale((-1) ** N)
              for N in range(order // 2 + 1)}
    assert LSeries(coeffs, order=order) == secular_det_recursive(k, order)
    assert grand_partition_exclusion(k, order) == secular_det_recursive(k, order)


def test_exclusion_examples():
    assert exclusion_partition(3, 2) == QLaurent.monomial(2)
    assert exclusion_partition(4, 2) == QLaurent({2: 1, 3: 1, 4: 1})
    assert exclusion_partition(3, 3) == QLaurent.zero()
