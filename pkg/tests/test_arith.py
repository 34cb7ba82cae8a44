from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from congruent.arith import (
    Factorization,
    difference_of_squares,
    exact_sqrt,
    factorize,
    format_rational,
    is_perfect_square,
    is_prime,
    is_squarefree,
    is_sum_of_two_squares,
    parse_int,
    parse_rational,
    rational_sqrt,
    squarefree_decomposition,
    squarefree_part,
)
from congruent.errors import DomainError, NotRepresentable

from oracles import (
    brute_difference_of_squares,
    brute_squarefree,
    brute_sum_two_squares,
    trial_factor,
)


@pytest.mark.parametrize("n, expected", [
    (1, {}),
    (468, {2: 2, 3: 2, 13: 1}),
    (60, {2: 2, 3: 1, 5: 1}),
])
def test_factorize_examples(n, expected):
    assert factorize(n).as_dict() == expected == trial_factor(n)


def test_factorize_rejects_zero():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(-5)


def test_factorize_agrees_with_trial_division():
    for n in range(1, 5000):
        assert factorize(n).as_dict() == trial_factor(n)


@given(st.integers(min_value=1, max_value=10 ** 30))
def test_factorization_invariants(n):
    f = factorize(n)
    assert f.value() == n
    primes = f.primes
    assert primes == sorted(set(primes))
    assert all(is_prime(p) for p in primes)


def test_factorization_rejects_inconsistent_data():
    with pytest.raises(DomainError):
        Factorization(12, ((2, 2), (5, 1)))
    with pytest.raises(DomainError):
        Factorization(6, ((3, 1), (2, 1)))


def test_factorize_large_square_multiple():
    # 157 times a 46-digit square with 12-digit prime factors
    k = 2 * 3 * 5 * 13 * 17 * 37 * 101 * 17401 * 46997 * 356441 * 157841 * 4947203 * 526771095761
    f = factorize(157 * k * k)
    assert f.as_dict()[157] == 1
    assert squarefree_part(157 * k * k) == 157


@pytest.mark.parametrize("n, m", [(1, 1), (20, 5), (468, 13)])
def test_squarefree_part_examples(n, m):
    assert squarefree_part(n) == m


def test_squarefree_decomposition_exposes_cofactor():
    assert squarefree_decomposition(468) == (13, 6)
    assert squarefree_decomposition(20) == (5, 2)


def test_squarefree_part_range():
    for n in range(1, 100001):
        m, k = squarefree_decomposition(n)
        assert m * k * k == n
        assert is_squarefree(m)
    for n in range(1, 3000):
        assert squarefree_part(n) == brute_squarefree(n)


@pytest.mark.parametrize("n, root", [(49, 7), (0, 0), (1, 1), (2825630694251145858025, 53156661805)])
def test_perfect_squares(n, root):
    assert is_perfect_square(n)
    assert exact_sqrt(n) == root


@pytest.mark.parametrize("n", [50, 2, 3, -4, 2825630694251145858026])
def test_not_perfect_squares(n):
    assert not is_perfect_square(n)
    assert exact_sqrt(n) is None


def test_large_root_squares_back():
    assert 53156661805 ** 2 == 2825630694251145858025


@pytest.mark.parametrize("n, expected", [(34, True), (21, False), (9, True)])
def test_sum_of_two_squares_examples(n, expected):
    assert is_sum_of_two_squares(n) is expected
    assert brute_sum_two_squares(n) is expected


def test_sum_of_two_squares_matches_brute_force():
    for n in range(1, 10001):
        assert is_sum_of_two_squares(n) == brute_sum_two_squares(n), n


@pytest.mark.parametrize("n, pair", [(9, (5, 4)), (12, (4, 2))])
def test_difference_of_squares_examples(n, pair):
    assert difference_of_squares(n) == pair
    assert pair in brute_difference_of_squares(n)


def test_difference_of_squares_rejects_2_mod_4():
    with pytest.raises(NotRepresentable):
        difference_of_squares(6)
    assert brute_difference_of_squares(6) == []


@pytest.mark.parametrize("n", [1, 4])
def test_difference_of_squares_degenerate(n):
    r = difference_of_squares(n)
    assert r.b == 0 and r.degenerate
    assert r.a ** 2 == n


def test_difference_of_squares_range():
    for n in range(3, 10001):
        if n % 4 == 2 or n == 4:
            continue
        a, b = difference_of_squares(n)
        assert a * a - b * b == n and b >= 1


def test_difference_representable_iff_not_2_mod_4():
    # representable iff n != 2 mod 4
    for n in range(1, 400):
        assert bool(brute_difference_of_squares(n)) == (n % 4 != 2)


def test_rational_helpers():
    assert rational_sqrt(Fraction(49, 4)) == Fraction(7, 2)
    assert rational_sqrt(Fraction(2, 9)) is None
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(4)) == "4/1"
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational("6/4") == Fraction(3, 2)
    for bad in ["", "1/", "a/b", "1.5", "1_0/3", " 1 / 2", "1/-2"]:
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")
    assert parse_int("123456789012345678901234567890") == 123456789012345678901234567890
    for bad in ["1e5", "1_000", "", 12]:
        with pytest.raises(ValueError):
            parse_int(bad)


@settings(max_examples=200)
@given(st.fractions(min_value=Fraction(-10 ** 9), max_value=Fraction(10 ** 9)))
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q
