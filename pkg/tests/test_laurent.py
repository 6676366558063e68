"""Core Laurent arithmetic: ring laws, substitutions, series, serialization."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qchar.laurent import (
    BiLaurent,
    CyclotomicVector,
    bounded_partition_counts,
    cyclic_convolve,
    partition_series,
)
from qchar.qbinom import qpochhammer

from oracles import partitions_upto

HALF = Fraction(1, 2)


def qz(*triples):
    return BiLaurent({(q, z): c for q, z, c in triples})


# -- arithmetic basics ------------------------------------------------------


def test_add_cancellation():
    assert qz((0, 0, 1), (1, 0, 1)) + qz((0, 0, -1), (1, 0, 1)) == qz((1, 0, 2))


def test_add_identity():
    p = qz((HALF, -2, 3), (1, 0, -1))
    assert p + BiLaurent.zero() == p
    assert p + 0 == p


def test_add_half_exponents_merge():
    assert qz((HALF, 0, 1)) + qz((HALF, 0, 1)) == qz((HALF, 0, 2))


def test_mul_difference_of_squares():
    one_plus = qz((0, 0, 1), (1, 0, 1))
    one_minus = qz((0, 0, 1), (1, 0, -1))
    assert one_plus * one_minus == qz((0, 0, 1), (2, 0, -1))


def test_mul_exponent_addition():
    a = qz((HALF, 1, 1))
    b = qz((HALF, -1, 1))
    assert a * b == qz((1, 0, 1))


def test_mul_identity():
    p = qz((Fraction(3, 2), 2, 5), (0, -1, 1))
    assert p * BiLaurent.one() == p
    assert 1 * p == p


def test_pow_matches_repeated_mul():
    p = qz((0, 0, 1), (1, 1, -2))
    assert p ** 3 == p * p * p
    assert p ** 0 == BiLaurent.one()


# -- specializations -----------------------------------------------------------


def test_substitute_z_shifts_q():
    assert qz((1, 2, 1)).substitute_z(1) == qz((3, 2, 1))
    assert qz((0, -1, 1)).substitute_z(3) == qz((-3, -1, 1))
    p = qz((HALF, 2, 3), (0, 0, 1))
    assert p.substitute_z(0) == p


def test_substitute_z_composes():
    p = qz((1, 2, 1), (0, -1, 4))
    assert p.substitute_z(HALF).substitute_z(HALF) == p.substitute_z(1)


def test_at_q1_z1():
    assert qz((0, 0, 1), (1, 0, 1), (2, 0, 2)).at_q1_z1() == 4
    assert qz((0, 1, 1), (0, -1, -1)).at_q1_z1() == 0
    assert BiLaurent.zero().at_q1_z1() == 0


def test_truncate_q():
    p = qz((0, 0, 1), (1, 0, 1), (4, 0, 1))
    assert p.truncate_q(2) == qz((0, 0, 1), (1, 0, 1))
    assert p.truncate_q(None) == p
    assert qz((Fraction(3, 2), 0, 1)).truncate_q(1) == BiLaurent.zero()


def test_clip_z():
    p = qz((0, -3, 1), (0, 0, 1), (0, 2, 1))
    assert p.clip_z(2) == qz((0, 0, 1), (0, 2, 1))
    assert p.clip_z(None) == p


# -- cyclotomic projection ---------------------------------------------------------


def test_cyclotomic_projection():
    p = qz((0, -1, 1), (0, 0, 1), (0, 1, 1))
    assert p.cyclotomic(2) == CyclotomicVector(2, (1, 2))
    assert BiLaurent.one().cyclotomic(3) == CyclotomicVector(3, (1, 0, 0))
    assert qz((0, 3, 1)).cyclotomic(3) == CyclotomicVector(3, (1, 0, 0))


def test_cyclotomic_rejects_q_terms():
    with pytest.raises(ValueError):
        qz((HALF, 0, 1)).cyclotomic(2)


def test_cyclotomic_unit_and_product():
    u = CyclotomicVector.unit(3)
    v = CyclotomicVector(3, (1, 2, 0))
    assert u * v == v
    assert v * CyclotomicVector(3, (0, 1, 0)) == CyclotomicVector(3, (0, 1, 2))


# -- partition series ----------------------------------------------------------------


def test_partition_series_values():
    assert partition_series(0) == BiLaurent.one()
    assert partition_series(3) == qz((0, 0, 1), (1, 0, 1), (2, 0, 2), (3, 0, 3))
    assert partition_series(5) == qz(
        (0, 0, 1), (1, 0, 1), (2, 0, 2), (3, 0, 3), (4, 0, 5), (5, 0, 7)
    )


def test_partition_series_against_enumeration():
    expected = partitions_upto(9)
    counts = bounded_partition_counts(9, 9)
    assert list(counts) == expected


def test_partition_series_inverts_pochhammer():
    for deg in (0, 1, 4, 7):
        product = partition_series(deg) * qpochhammer(deg)
        assert product.truncate_q(deg) == BiLaurent.one()


# -- exact division ----------------------------------------------------------------


def test_divide_exact_roundtrip():
    a = qz((0, 0, 1), (1, 0, -2), (3, 0, 1))
    b = qz((-1, 0, 3), (2, 0, -1))
    assert (a * b).divide_exact(b) == a


def test_divide_exact_rejects_remainder():
    with pytest.raises(ValueError):
        qz((1, 0, 1), (0, 0, 1)).divide_exact(qz((0, 0, 2)))
    with pytest.raises(ValueError):
        qz((2, 0, 1)).divide_exact(qz((1, 0, 1), (0, 0, 1)))


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        BiLaurent.one().divide_exact(BiLaurent.zero())


# -- serialization ----------------------------------------------------------------


def test_json_roundtrip_and_shape():
    p = qz((Fraction(3, 2), -1, 12), (2, 0, -5), (0, 0, 1))
    obj = p.to_json_obj()
    assert obj == {
        "terms": [
            {"q": "0", "z": 0, "c": "1"},
            {"q": "3/2", "z": -1, "c": "12"},
            {"q": "2", "z": 0, "c": "-5"},
        ]
    }
    assert BiLaurent.from_json_obj(json.loads(json.dumps(obj))) == p


def test_json_integral_fraction_exponent_is_plain():
    p = qz((Fraction(1, 2), 0, 1)) * qz((Fraction(1, 2), 0, 1))
    assert p.to_json_obj()["terms"][0]["q"] == "1"


def test_str_rendering():
    assert str(BiLaurent.zero()) == "0"
    assert str(qz((0, 0, -1), (HALF, -1, 3))) == "-1 + 3*q^(1/2)*z^(-1)"


# -- ring laws (property-based) -----------------------------------------------------


exponents = st.one_of(
    st.integers(-4, 4),
    st.builds(Fraction, st.integers(-6, 6), st.sampled_from([2, 3])),
)
polys = st.dictionaries(
    st.tuples(exponents, st.integers(-3, 3)),
    st.integers(-9, 9),
    max_size=5,
).map(BiLaurent)


@settings(max_examples=80, deadline=None, derandomize=True)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


shifts = st.one_of(
    st.integers(-3, 3), st.builds(Fraction, st.integers(-5, 5), st.just(2))
)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(polys, shifts, shifts)
def test_substitute_z_is_additive_in_shift(p, c1, c2):
    assert p.substitute_z(c1).substitute_z(c2) == p.substitute_z(c1 + c2)


zpolys = st.dictionaries(
    st.tuples(st.just(0), st.integers(-6, 6)), st.integers(-9, 9), max_size=5
).map(BiLaurent)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(zpolys, zpolys, st.integers(1, 5))
def test_cyclotomic_is_ring_homomorphism(a, b, p):
    assert (a * b).cyclotomic(p) == a.cyclotomic(p) * b.cyclotomic(p)


def test_cyclic_convolve_basic():
    assert cyclic_convolve((1, 1), (1, 1)) == (2, 2)
