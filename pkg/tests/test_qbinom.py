"""q-Pochhammer, Gaussian binomials, and the extended coefficients."""

import pytest

from qchar.laurent import BiLaurent
from qchar.qbinom import ext_min_qexp, qbinomial, qbinomial_ext, qpochhammer

from oracles import gaussian_binomial_by_boxes, laurent_coeff_one_plus_inv_z


def qpoly(*pairs):
    return BiLaurent({(q, 0): c for q, c in pairs})


def test_qpochhammer_small():
    assert qpochhammer(0) == BiLaurent.one()
    assert qpochhammer(1) == qpoly((0, 1), (1, -1))
    assert qpochhammer(3) == qpoly((0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1))


def test_qpochhammer_rejects_negative():
    with pytest.raises(ValueError):
        qpochhammer(-1)


def test_qbinomial_4_2():
    assert qbinomial(4, 2) == qpoly((0, 1), (1, 1), (2, 2), (3, 1), (4, 1))


def test_qbinomial_out_of_range_is_zero():
    assert qbinomial(2, 3) == BiLaurent.zero()
    assert qbinomial(3, -1) == BiLaurent.zero()


def test_qbinomial_bottom_zero():
    for n in range(0, 6):
        assert qbinomial(n, 0) == BiLaurent.one()


def test_qbinomial_against_box_partitions():
    for n in range(0, 9):
        for m in range(0, n + 1):
            assert qbinomial(n, m).qdict() == gaussian_binomial_by_boxes(n, m)


def test_ext_agrees_with_gaussian_for_nonnegative_top():
    for n in range(0, 8):
        for m in range(-3, n + 3):
            assert qbinomial_ext(n, m) == qbinomial(n, m)


def test_ext_diagonal_is_one():
    for m in (-5, -2, -1, 0, 1, 4):
        assert qbinomial_ext(m, m) == BiLaurent.one()


def test_ext_bottom_zero_negative_top():
    for n in (-4, -2, -1):
        assert qbinomial_ext(n, 0) == BiLaurent.zero()


def test_ext_minus_one_minus_two():
    assert qbinomial_ext(-1, -2) == qpoly((-1, -1))


def test_ext_specializes_to_laurent_coefficient():
    # at q = 1 the extended coefficient is the z^(-m) coefficient of (1+1/z)^n
    for n in range(-6, 7):
        for m in range(-8, 9):
            expected = laurent_coeff_one_plus_inv_z(n, m)
            assert qbinomial_ext(n, m).at_q1_z1() == expected


def test_ext_pascal_recurrences_window():
    for n in range(-6, 7):
        for m in range(-6, 7):
            x = qbinomial_ext(n, m)
            first = BiLaurent.term(1, m) * qbinomial_ext(n - 1, m) + qbinomial_ext(
                n - 1, m - 1
            )
            second = qbinomial_ext(n - 1, m) + BiLaurent.term(
                1, n - m
            ) * qbinomial_ext(n - 1, m - 1)
            assert x == first
            assert x == second


def test_ext_min_qexp_matches_polynomials():
    for n in range(-7, 8):
        for m in range(-7, 8):
            poly = qbinomial_ext(n, m)
            bound = ext_min_qexp(n, m)
            if not poly:
                assert bound is None
            else:
                assert bound == poly.q_min()
