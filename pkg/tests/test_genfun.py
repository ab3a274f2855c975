import pytest

from dyckgen.algebra import LSeries, QLaurent
from dyckgen.errors import SpecOutOfRange
from dyckgen.genfun import (
    GenSpec,
    continued_fraction,
    genfun,
    genfun_ceiling,
    genfun_continued,
    genfun_excursion,
    genfun_weighted,
    prefactor,
)
from dyckgen.identities import check_duality, check_recursions, compare_series, duality_result
from dyckgen.oracle import enumerate_paths, genfun_from_table


def meanders(k_max):
    return [(k, m, n) for k in range(k_max + 1) for m in range(k + 1) for n in range(m, k + 1)]


def test_zigzag():
    G = genfun(GenSpec(1, 0, 0, 10))
    assert G.series == LSeries({l: 1 for l in range(0, 11, 2)}, order=10)
    assert G.prefactor == (0, 0)


def test_unbounded_excursions():
    G = genfun(GenSpec(None, 0, 0, 6))
    assert G.coefficient(4) == QLaurent({0: 1, 2: 1})
    assert G.coefficient(6) == QLaurent({0: 1, 2: 2, 4: 1, 6: 1})


def test_long_meander_with_area_21():
    G = genfun(GenSpec(4, 1, 2, 13))
    assert G.coefficient(13).coefficient(21) >= 1
    assert G.prefactor == (1, 1)


def test_height_two_excursions():
    expected = LSeries.from_terms({(0, 0): 1, (2, 0): 1, (4, 0): 1, (4, 2): 1, (6, 0): 1, (6, 2): 2, (6, 4): 1}, order=6)
    assert genfun_excursion(2, 6).series == expected
    assert genfun(GenSpec(2, 0, 0, 6)).series == expected


def test_spec_validation():
    with pytest.raises(SpecOutOfRange):
        GenSpec(2, 3, 0, 5)
    with pytest.raises(SpecOutOfRange):
        GenSpec(2, 0, 0, -1)
    with pytest.raises(SpecOutOfRange):
        GenSpec(-1, 0, 0, 4)
    with pytest.raises(SpecOutOfRange):
        GenSpec(None, 0, 0, 4).dual()
    spec = GenSpec(None, 1, 3, 8)
    assert spec.unbounded and spec.ceiling == 11
    assert spec.bounded().k == 11
    assert GenSpec(5, 4, 1, 3).ordered() == GenSpec(5, 1, 4, 3)
    assert GenSpec(5, 4, 1, 3).dual() == GenSpec(5, 1, 4, 3)


@pytest.mark.parametrize("m,n,expected", [(0, 0, (0, 0)), (1, 2, (1, 1)), (2, 1, (1, 1)), (0, 3, (3, 3)), (2, 5, (3, 9))])
def test_prefactor(m, n, expected):
    assert prefactor(m, n) == expected


@pytest.mark.parametrize("k,m,n", meanders(6))
def test_genfun_matches_oracle(k, m, n):
    L = 16
    assert genfun(GenSpec(k, m, n, L)).series == genfun_from_table(enumerate_paths(k, m, n, L)).series


@pytest.mark.parametrize("m,n", [(0, 0), (0, 1), (1, 3), (2, 2)])
def test_unbounded_genfun_matches_oracle(m, n):
    L = 14
    assert genfun(GenSpec(None, m, n, L)).series == genfun_from_table(enumerate_paths(None, m, n, L)).series


@pytest.mark.parametrize("k,m,n", meanders(5))
def test_symmetry_parity_integrality(k, m, n):
    L = 12
    G = genfun(GenSpec(k, m, n, L))
    assert G.series == genfun(GenSpec(k, n, m, L)).series
    for l, A, coeff in G.terms():
        assert (l - (n - m)) % 2 == 0
        assert coeff.denominator == 1 and coeff > 0
        assert A >= 0


@pytest.mark.parametrize("m,n", [(0, 0), (1, 2), (0, 3)])
def test_unbounded_stabilization(m, n):
    L = 10
    unbounded = genfun(GenSpec(None, m, n, L)).series
    assert genfun(GenSpec(L + n, m, n, L)).series == unbounded
    assert genfun(GenSpec(L + n + 5, m, n, L)).series == unbounded


def test_excursion_area_degree():
    G = genfun(GenSpec(None, 0, 0, 20))
    for a in range(1, 11):
        assert G.coefficient(2 * a).degree() == a * (a - 1)
        assert G.coefficient(2 * a).low_degree() == 0


@pytest.mark.parametrize("k", range(0, 7))
def test_ceiling_genfun(k):
    assert genfun_ceiling(k, 12).series == genfun(GenSpec(k, k, k, 12)).series


def test_weighted_identity_and_balance():
    spec = GenSpec(3, 0, 0, 10)
    weighted = genfun_weighted(spec)
    assert weighted.at(1, 1) == genfun(spec).series
    assert all(up == down for up, down in weighted.coefficients())


def test_weighted_single_up_step():
    weighted = genfun_weighted(GenSpec(1, 0, 1, 5))
    coefficients = weighted.coefficients()
    assert coefficients[(1, 0)] == QLaurent.one()
    assert coefficients[(2, 1)] == QLaurent.one()
    at = weighted.at(2, 3)
    assert at.coefficient(1) == QLaurent.constant(2)
    assert at.coefficient(3) == QLaurent.constant(12)
    assert list(weighted.terms())[0] == (1, 0, 0, 1)


def test_continued_fraction_low_heights():
    assert continued_fraction(0, 8) == LSeries.one(8)
    assert continued_fraction(1, 8) == genfun_excursion(1, 8).series
    assert continued_fraction(2, 6) == genfun_excursion(2, 6).series


@pytest.mark.parametrize("k", range(0, 7))
def test_continued_fraction_matches_determinants(k):
    assert continued_fraction(k, 16) == genfun_excursion(k, 16).series


def test_unbounded_continued_fraction():
    assert continued_fraction(None, 12) == genfun_excursion(None, 12).series


@pytest.mark.parametrize("k,m,n", [s for s in meanders(5) if s[1] == 0 or s[2] == s[0]])
def test_genfun_continued(k, m, n):
    L = 12
    assert genfun_continued(GenSpec(k, m, n, L)).series == genfun(GenSpec(k, m, n, L)).series
    assert genfun_continued(GenSpec(k, n, m, L)).series == genfun(GenSpec(k, m, n, L)).series


def test_genfun_continued_needs_boundary_endpoint():
    with pytest.raises(SpecOutOfRange):
        genfun_continued(GenSpec(4, 1, 2, 10))


@pytest.mark.parametrize("k,m,n", [(2, 1, 1), (3, 0, 1), (4, 1, 2), (4, 0, 4), (5, 2, 3)])
def test_duality_examples(k, m, n):
    assert check_duality(GenSpec(k, m, n, 12))


def test_duality_all_small_specs():
    for k in range(5):
        for m in range(k + 1):
            for n in range(k + 1):
                assert duality_result(GenSpec(k, m, n, 10)).passed


def test_duality_needs_finite_ceiling():
    with pytest.raises(SpecOutOfRange):
        check_duality(GenSpec(None, 0, 0, 6))


@pytest.mark.parametrize("k,m,n", meanders(5))
def test_recursions(k, m, n):
    report = check_recursions(GenSpec(k, m, n, 12))
    assert report, [r.mismatch for r in report.failures]


def test_recursion_names():
    report = check_recursions(GenSpec(3, 0, 1, 10))
    assert {r.name for r in report.results} == {"last-step", "intermediate", "three-term", "first-passage"}
    assert report.passed and not report.failures


def test_compare_series_reports_first_difference():
    result = compare_series("demo", {"k": 1}, LSeries.one(2), LSeries([1, 0, 1]))
    assert not result.passed
    assert result.mismatch == "zeta^2: 0 != 1"
    assert result.to_dict() == {"identity": "demo", "params": {"k": 1}, "passed": False, "mismatch": "zeta^2: 0 != 1"}
    assert compare_series("demo", {}, LSeries.one(2), LSeries.one(4)).passed
