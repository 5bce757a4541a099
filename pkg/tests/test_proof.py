from fractions import Fraction

import pytest

from qhbound.bounds import hamming_check
from qhbound.combinatorics import binomial
from qhbound.families import odd_family
from qhbound.proof import (
    chain_report,
    check_suffices,
    lemma_binomial,
    lemma_power,
    lemma_quadratic,
    margins_strictly_increasing,
    verify_chain,
)


@pytest.mark.parametrize("t", [1, 2, 100])
def test_lemma_quadratic(t):
    assert lemma_quadratic(t)


def test_quadratic_integer_form_is_the_completed_square():
    for t in range(1, 50):
        completed = 4 * (t - Fraction(1, 6)) ** 2 + Fraction(8, 9)
        assert completed == 4 * t * t - Fraction(4 * t, 3) + 1
        assert 3 * (2 * t + 1) ** 2 - 16 * t == 3 * completed == 12 * t * t - 4 * t + 3


def test_lemma_power_small_values():
    # t=1: 16*1 < 3*9; t=2: 256*4 = 1024 < 9*625 = 5625
    assert 16 * 1 < 3 * 9 and lemma_power(1)
    assert 1024 < 5625 and lemma_power(2)
    assert lemma_power(50)


@pytest.mark.parametrize("n, t", [(9, 1), (25, 2), (1, 1), (17, 1)])
def test_lemma_binomial(n, t):
    assert lemma_binomial(n, t)


def test_lemma_binomial_equality_at_t_one():
    for n in range(1, 30):
        assert binomial(n, 1) * 1 == n


def test_lemma_binomial_rejects_t_above_n():
    with pytest.raises(ValueError):
        lemma_binomial(3, 4)


@pytest.mark.parametrize("t", [1, 2, 200])
def test_check_suffices(t):
    assert check_suffices(t)


def test_check_suffices_values():
    assert 2**4 < binomial(9, 1) * 3 == 27
    assert 2**8 < binomial(25, 2) * 9 == 2700


@pytest.mark.parametrize("fn", [lemma_quadratic, lemma_power, check_suffices, verify_chain])
def test_nonpositive_t_rejected(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_single_term_dominates_implies_violation():
    for t in range(1, 80):
        rep = hamming_check(odd_family(t))
        single_term = binomial((2 * t + 1) ** 2, t) * 3**t
        assert rep.rhs >= single_term
        if check_suffices(t):
            assert not rep.satisfied


def test_verify_chain_t_max_one():
    (row,) = verify_chain(1)
    assert row.all_ok
    assert (row.hamming_lhs, row.hamming_rhs) == (16, 28)
    assert row.margin_bits == pytest.approx(0.807, abs=1e-3)


def test_verify_chain_rows_are_ascending_and_true():
    rows = verify_chain(3)
    assert [r.t for r in rows] == [1, 2, 3]
    assert all(r.all_ok for r in rows)


def test_implication_flag_reflects_broken_chain():
    row = chain_report(2)
    broken = type(row)(**{**row.__dict__, "suffices_ok": False})
    assert not broken.implication_ok
    assert not broken.all_ok


def test_margins_increase_exactly():
    rows = verify_chain(40)
    assert margins_strictly_increasing(rows)
    assert not margins_strictly_increasing(list(reversed(rows)))
