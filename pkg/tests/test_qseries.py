from collections import Counter

import pytest
from hypothesis import given, strategies as st

import oracles
from pdsaw import qseries, stats
from pdsaw.core import ASYM, MATCHING, PERMUTATION, SYM, count_free_sym_walks
from pdsaw.qseries import InexactDivision, QPoly, RationalSeries, q_integer


def brute(objects, stat):
    counts = Counter(stat(o) for o in objects)
    return QPoly(dict(counts))


# --- polynomial arithmetic ------------------------------------------------------


def test_product():
    assert QPoly([1, -1]) * QPoly([1, 1]) == QPoly([1, 0, -1])


def test_exact_division():
    assert QPoly([2, -3, 0, 1]).div_exact(QPoly([1, -1]) ** 2) == QPoly([2, 1])
    assert (QPoly([2, 1]) * QPoly([1, -1]) ** 2) == QPoly([2, -3, 0, 1])


def test_inexact_division_raises():
    with pytest.raises(InexactDivision, match="inexact division"):
        QPoly([1, 1]).div_exact(QPoly([1, -1]))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QPoly([1]).divmod(QPoly())


def test_laurent_terms():
    p = QPoly({-2: 1, 0: 3})
    assert not p.is_polynomial
    assert p.polynomial_part() == QPoly([3])
    assert (p * QPoly.monomial(2)).is_polynomial
    assert p.shift(2) == QPoly([1, 0, 3])


@pytest.mark.parametrize("k, expected", [(1, [1]), (3, [1, 1, 1]), (0, [])])
def test_q_integer(k, expected):
    assert q_integer(k) == QPoly(expected)


def test_q_integer_squared():
    assert q_integer(2) ** 2 == QPoly([1, 2, 1])


@pytest.mark.parametrize(
    "poly, shown",
    [(QPoly([2, 1]), "2 + q"), (QPoly([5, 6, 3]), "5 + 6q + 3q^2"), (QPoly(), "0"), (QPoly([1]), "1")],
)
def test_str(poly, shown):
    assert str(poly) == shown


def test_json_round_trip():
    p = QPoly({-1: 2, 3: -4})
    assert QPoly.from_json(p.to_json()) == p
    assert QPoly([2, 1]).to_json() == {"var": "q", "coeffs": {"0": 2, "1": 1}}


small_polys = st.lists(st.integers(-5, 5), max_size=6).map(QPoly)


@given(small_polys, small_polys.filter(bool))
def test_divmod_identity(a, b):
    quot, rem = a.divmod(b)
    assert quot * b + rem == a
    assert (a * b).div_exact(b) == a


# --- formulas against brute force ----------------------------------------------


@pytest.mark.parametrize("n", range(6))
def test_touchard_riordan_against_matchings(n):
    expected = brute(oracles.matchings(n), stats.nestings)
    assert qseries.touchard_riordan(n) == expected


def test_touchard_riordan_values():
    assert qseries.touchard_riordan(1) == QPoly([1])
    assert qseries.touchard_riordan(2) == QPoly([2, 1])
    assert qseries.touchard_riordan(3).at_one() == 15


@pytest.mark.parametrize("n", range(1, 7))
def test_williams_against_permutations(n):
    expected = brute(oracles.perms(n), stats.nestings)
    assert qseries.williams(n) == expected


def test_williams_values():
    assert qseries.williams(1) == QPoly([1])
    assert qseries.williams(2) == QPoly([2])
    assert qseries.williams(3) == QPoly([5, 1])


@pytest.mark.parametrize(
    "family, n, expected",
    [("hermite", 0, [1]), ("hermite", 1, [1]), ("hermite", 2, [2, 1]), ("laguerre", 2, [2]), ("laguerre", 3, [5, 1])],
)
def test_continued_fraction_moments(family, n, expected):
    assert qseries.cf_moments(family, n) == QPoly(expected)


@pytest.mark.parametrize("n", range(6))
def test_transfer_against_weighted_paths(n):
    dyck = brute(oracles.dyck_paths(n), stats.total_weight)
    motzkin = brute(oracles.motzkin_paths(n), stats.total_weight)
    assert qseries.transfer_distribution("hermite", n) == dyck
    assert qseries.transfer_distribution("laguerre", n) == motzkin


@pytest.mark.parametrize(
    "kind, stat, n, expected",
    [(SYM, "north", 2, [2, 1]), (MATCHING, "nestings", 2, [2, 1]), (ASYM, "north", 3, [5, 1])],
)
def test_statistic_distribution(kind, stat, n, expected):
    assert qseries.statistic_distribution(kind, stat, n) == QPoly(expected)


def test_joint_distribution_small():
    assert qseries.joint_distribution(MATCHING, 2) == {(0, 0): 1, (1, 0): 1, (0, 1): 1}
    joint = qseries.joint_distribution(PERMUTATION, 3)
    assert sum(joint.values()) == 6


# --- power series ---------------------------------------------------------------


def test_series_sqrt_squares_back():
    s = RationalSeries([1, 2, 0, 5], 6)
    root = s.sqrt()
    assert root * root == s


def test_series_reciprocal():
    s = RationalSeries([1, -1], 5)
    assert s.reciprocal().integer_coeffs() == [1] * 6


def test_integer_coeffs_rejects_fractions():
    with pytest.raises(ArithmeticError, match="non-integral"):
        RationalSeries([1, "1/2"], 2).integer_coeffs()


def test_free_walk_series_prefix():
    assert qseries.free_walk_series(4).integer_coeffs() == [1, 1, 3, 5, 13]


@pytest.mark.parametrize("order", [0, 1, 12, 18, 25])
def test_free_walk_series_matches_dp(order):
    assert qseries.free_walk_series(order).integer_coeffs() == count_free_sym_walks(order)
