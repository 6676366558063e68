"""Coupling matrices, support boxes, lattice sums, Gordon series."""

import pytest

from qchar.laurent import BiLaurent
from qchar.fermionic import (
    NonFiniteSupportError,
    QuadraticData,
    coupling_matrix,
    fermionic_sum,
    gordon_series,
    lattice_sum,
    lattice_support,
    standard_flow_vector,
    support_box,
    _budget,
)
from qchar.supernomial import SiteVector


def qz(*triples):
    return BiLaurent({(q, z): c for q, z, c in triples})


def test_coupling_matrix_p2_d0():
    assert coupling_matrix(2, 0) == ((2, -1), (-1, 2))


def test_coupling_matrix_p3_d2():
    assert coupling_matrix(3, 2) == (
        (3, 0, 1, 2),
        (0, 3, 1, 2),
        (1, 1, 2, 2),
        (2, 2, 2, 4),
    )


def test_coupling_matrix_symmetry():
    for p in range(2, 7):
        for d in range(0, 2 * p - 2):
            a = coupling_matrix(p, d)
            size = d + 2
            assert all(a[i][j] == a[j][i] for i in range(size) for j in range(size))


def test_coupling_matrix_range_checks():
    with pytest.raises(ValueError):
        coupling_matrix(2, 2)
    with pytest.raises(ValueError):
        coupling_matrix(1, 0)
    with pytest.raises(ValueError):
        coupling_matrix(3, -1)


def test_quadratic_data_validation():
    with pytest.raises(ValueError):
        QuadraticData(((1, 2), (3, 1)), (1, -1))
    with pytest.raises(ValueError):
        QuadraticData(((2,),), (1, 0))


def test_support_box_contains_small_square():
    box = support_box(SiteVector(2, 1, 1))
    (lo_p, hi_p), (lo_m, hi_m) = box
    assert lo_p <= 0 and lo_m <= 0
    assert hi_p >= 1 and hi_m >= 1


def test_support_box_collapses_to_origin():
    box = support_box(SiteVector(3, 0, 0, (0,)))
    assert box == [(0, 0), (0, 0), (0, 0)]


def test_support_box_rejects_negative_multiplicity():
    # levels exceeding the total force a negative multiplicity entry
    with pytest.raises(NonFiniteSupportError) as info:
        support_box(SiteVector(2, 0, 0, (1,)))
    assert info.value.index >= 1


def test_support_box_is_complete():
    # enlarging the certified box by a margin must expose no new summands
    for p, comps in [(2, (2, 1, 2)), (3, (2, 2, 2)), (2, (3, 0)), (3, (0, 3, 2))]:
        site = SiteVector(p, comps[0], comps[1], comps[2:])
        data = QuadraticData(
            coupling_matrix(p, site.d), standard_flow_vector(site.d + 2)
        )
        box = support_box(site)
        bigger = [(lo - 2, hi + 2) for lo, hi in box]
        inside = set(lattice_support(data, comps, box))
        outside = set(lattice_support(data, comps, bigger))
        assert outside == inside


def test_fermionic_sum_small_values():
    assert fermionic_sum(SiteVector(2, 1, 0)) == BiLaurent.one()
    assert fermionic_sum(SiteVector(2, 1, 1)) == qz((0, 0, 1), (1, 0, 1))
    assert fermionic_sum(SiteVector(2, 0, 0)) == BiLaurent.one()


def test_lattice_sum_one_by_one():
    data = QuadraticData(((2,),), (1,))
    assert lattice_sum(data, (2,), [(-4, 4)]) == qz((0, 0, 1), (1, 1, 1))


def test_lattice_sum_agrees_with_fermionic_wrapper():
    for p, d, comps in [
        (2, 0, (2, 1)),
        (2, 1, (1, 1, 1)),
        (3, 1, (2, 2, 2)),
    ]:
        site = SiteVector(p, comps[0], comps[1], comps[2:])
        data = QuadraticData(
            coupling_matrix(p, d), standard_flow_vector(d + 2), (), ()
        )
        direct = lattice_sum(
            data, comps, support_box(site), budget=_budget(site)
        )
        assert direct == fermionic_sum(site)


def test_lattice_sum_recurrence_instance():
    # one cutoff step at the minus coordinate, p=2, d=0, N=(1,1)
    data = QuadraticData(coupling_matrix(2, 0), (1, -1))

    def chi(comps):
        site = SiteVector(2, comps[0], comps[1])
        return lattice_sum(data, comps, support_box(site), budget=_budget(site))

    lhs = chi((1, 1))
    rhs = chi((1, 0)) + BiLaurent.term(1, 0, -1) * chi((2, -1))
    assert lhs == rhs == qz((0, 0, 1), (1, 0, 1))


def test_lattice_sum_truncation_is_exact():
    site = SiteVector(3, 3, 3, (2, 4))
    full = fermionic_sum(site)
    cut = fermionic_sum(site, qmax=3, zwin=1)
    assert cut == full.truncate_q(3).clip_z(1)


def test_lattice_sum_truncation_with_negative_cutoffs():
    # negative sign cutoffs route through the negative-exponent branch of
    # the extended binomials; the truncation bookkeeping must stay exact
    site = SiteVector(2, -1, 4, (2,))
    assert support_box(site)[0][0] < 0  # the box reaches negative vectors
    full = fermionic_sum(site)
    for qmax in (-1, 0, 2):
        cut = fermionic_sum(site, qmax=qmax, zwin=2)
        assert cut == full.truncate_q(qmax).clip_z(2)


def test_fermionic_sum_cutoff_shift_matches_shifted_site():
    # the shift w enters only through the binomial tops, so it is the same
    # as evaluating the plain sum at the shifted site
    site = SiteVector(2, 2, 1, (2,))
    for w in [(1, -1, 0), (0, 1, 1), (2, -2, 0)]:
        assert fermionic_sum(site, w) == fermionic_sum(site.shifted_by(w))


def test_lattice_support_nonnegative_under_balance():
    site = SiteVector(2, 2, 2, (2,))
    data = QuadraticData(coupling_matrix(2, 1), (1, -1, 0))
    vectors = lattice_support(
        data, site.components(), support_box(site), budget=_budget(site)
    )
    assert vectors
    assert all(min(v) >= 0 for v in vectors)


def test_gordon_series_p2_value():
    expected = qz(
        (0, 0, 1), (1, 0, 1), (2, 0, 2),
        (1, 1, 1), (2, 1, 1), (1, -1, 1), (2, -1, 1),
    )
    assert gordon_series(2, 0, 0, 2, 1) == expected


def test_gordon_series_d_independent():
    for p in (2, 3):
        for r in range(p):
            base = gordon_series(p, 0, r, 4, 2)
            for d in range(1, p):
                assert gordon_series(p, d, r, 4, 2) == base


def test_gordon_series_vacuum_cutoff():
    for p in (2, 3, 5):
        assert gordon_series(p, 0, 0, 0, 0) == BiLaurent.one()


def test_gordon_series_validation():
    with pytest.raises(ValueError):
        gordon_series(2, 2, 0, 2, 1)
    with pytest.raises(ValueError):
        gordon_series(2, 0, 2, 2, 1)
    with pytest.raises(ValueError):
        gordon_series(2, 0, 0, -1, 1)
