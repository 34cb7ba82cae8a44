from math import isqrt

import pytest

from congruent.errors import NotQuadraticIrrational, Unsolvable
from congruent.pell import (
    PellSolution,
    cf_expand,
    fundamental,
    iter_solutions,
    negative_pell_necessary,
    solutions,
    theorem8_admissible,
)

from oracles import decimal_cf, minimal_period, pell_scan

NONSQUARE_500 = [d for d in range(2, 501) if isqrt(d) ** 2 != d]


@pytest.mark.parametrize("d, a0, period", [
    (2, 1, (2,)),
    (13, 3, (1, 1, 1, 1, 6)),
    (34, 5, (1, 4, 1, 10)),
    (3, 1, (1, 2)),
    (61, 7, (1, 4, 3, 1, 2, 2, 1, 3, 4, 1, 14)),
])
def test_cf_examples(d, a0, period):
    cf = cf_expand(d)
    assert (cf.a0, cf.period) == (a0, period)


@pytest.mark.parametrize("d", [1, 4, 9, 144])
def test_cf_rejects_squares(d):
    with pytest.raises(NotQuadraticIrrational):
        cf_expand(d)


def test_cf_matches_decimal_expansion():
    for d in NONSQUARE_500:
        cf = cf_expand(d)
        terms = decimal_cf(d, 1 + 3 * len(cf.period))
        assert terms[0] == cf.a0
        assert tuple(minimal_period(terms[1:])) == cf.period
        assert cf.period[-1] == 2 * cf.a0


@pytest.mark.parametrize("d, sign, xy", [
    (2, -1, (1, 1)),
    (13, -1, (18, 5)),
    (2, 1, (3, 2)),
    (3, 1, (2, 1)),
    (5, 1, (9, 4)),
    (61, 1, (1766319049, 226153980)),
    (130, -1, (57, 5)),
    (26, -1, (5, 1)),
])
def test_fundamental_examples(d, sign, xy):
    sol = fundamental(d, sign)
    assert (sol.x, sol.y) == xy
    assert sol.x ** 2 - d * sol.y ** 2 == sign


def test_d34_negative_unsolvable():
    with pytest.raises(Unsolvable):
        fundamental(34, -1)
    assert pell_scan(34, -1, 10 ** 6) is None


@pytest.mark.parametrize("d, sign, count, expected", [
    (2, -1, 2, [(1, 1), (7, 5)]),
    (2, 1, 2, [(3, 2), (17, 12)]),
    (3, 1, 1, [(2, 1)]),
])
def test_solutions_examples(d, sign, count, expected):
    assert [(s.x, s.y) for s in solutions(d, sign, count)] == expected


def test_solutions_propagates_unsolvable():
    with pytest.raises(Unsolvable):
        solutions(34, -1, 3)


def test_every_solution_satisfies_equation():
    for d in NONSQUARE_500:
        for sign in (1, -1):
            try:
                sols = solutions(d, sign, 4)
            except Unsolvable:
                continue
            for s in sols:
                assert s.x * s.x - d * s.y * s.y == sign
            xs = [s.x for s in sols]
            assert xs == sorted(set(xs))
            unit = fundamental(d, 1)
            for u, v in zip(sols, sols[1:]):
                assert u.compose(unit) == v


def test_negative_solvability_is_period_parity_and_brute_force():
    for d in NONSQUARE_500:
        cf = cf_expand(d)
        try:
            sol = fundamental(d, -1)
        except Unsolvable:
            assert not cf.odd_period
            assert pell_scan(d, -1, 10 ** 5) is None
            continue
        assert cf.odd_period
        if sol.y <= 10 ** 5:
            assert pell_scan(d, -1, 10 ** 5) == (sol.x, sol.y)


def test_plus_one_matches_brute_force():
    for d in NONSQUARE_500:
        if d > 200:
            break
        sol = fundamental(d, 1)
        scan = pell_scan(d, 1, 10 ** 5)
        if sol.y <= 10 ** 5:
            assert scan == (sol.x, sol.y), d
        else:
            assert scan is None, d


def test_plus_one_from_odd_period_is_square_of_minus_one():
    for d in (2, 5, 10, 13, 29, 41, 109):
        m = fundamental(d, -1)
        p = fundamental(d, 1)
        assert (p.x, p.y) == (m.x ** 2 + d * m.y ** 2, 2 * m.x * m.y)


def test_pell_solution_invariant():
    with pytest.raises(ArithmeticError):
        PellSolution(2, 3, 1, 1)


@pytest.mark.parametrize("d, holds", [(34, True), (12, False), (15, False), (10, True), (2, True), (5, True)])
def test_negative_pell_necessary(d, holds):
    diag = negative_pell_necessary(d)
    assert diag.holds is holds


def test_necessary_condition_reports_violations():
    assert negative_pell_necessary(12).violations == (4, 3)
    assert negative_pell_necessary(15).violations == (3,)
    assert negative_pell_necessary(34).violations == ()


def test_d34_is_the_non_sufficiency_witness():
    assert negative_pell_necessary(34).holds
    with pytest.raises(Unsolvable):
        fundamental(34, -1)


def test_necessary_condition_holds_whenever_solvable():
    for d in NONSQUARE_500:
        if cf_expand(d).odd_period:
            assert negative_pell_necessary(d).holds, d


@pytest.mark.parametrize("d, holds", [(10, True), (2, True), (20, False), (26, True), (130, True),
                                      (6, False), (5, False), (50, False)])
def test_admissible(d, holds):
    assert theorem8_admissible(d).holds is holds


def test_admissible_implies_necessary():
    for d in range(2, 10001):
        if theorem8_admissible(d).holds:
            assert negative_pell_necessary(d).holds, d


def test_iter_solutions_is_lazy():
    it = iter_solutions(2, 1)
    assert [next(it).x for _ in range(4)] == [3, 17, 99, 577]
