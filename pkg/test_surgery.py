"""
Surgery slopes, fibre distances, base orbifolds and the correspondence table.
"""
from math import gcd

import pytest

from models.errors import SlopeError
from models.surgery import SurgerySlope, FibreSlope, OrbifoldBase
from surgery import slope_distance, fibre_slope, h1_order, base_orbifold, correspondence_row, surgery_table


@pytest.mark.parametrize('alpha,phi,expected', [
    ((1, 1), (10, 1), 9),
    ((-1, 2), (10, 1), 21),
    ((10, 1), (10, 1), 0),
])
def test_slope_distance(alpha, phi, expected):
    a = SurgerySlope(mu_coeff=alpha[0], lambda_coeff=alpha[1])
    f = FibreSlope(mu_coeff=phi[0], lambda_coeff=phi[1])
    assert slope_distance(a, f) == expected


def test_slopes_are_reduced():
    slope = SurgerySlope(mu_coeff=-2, lambda_coeff=-4)
    assert (slope.mu_coeff, slope.lambda_coeff) == (1, 2)
    assert str(SurgerySlope(mu_coeff=3, lambda_coeff=0)) == '1/0'
    with pytest.raises(ValueError):
        SurgerySlope(mu_coeff=0, lambda_coeff=0)


def test_fibre_slope():
    assert fibre_slope(2, 5) == FibreSlope(mu_coeff=10, lambda_coeff=1)


@pytest.mark.parametrize('r,s,expected', [(0, 1, 0), (1, 1, 1), (1, 7, 1), (5, 2, 5), (-3, 4, 3)])
def test_h1_order(r, s, expected):
    assert h1_order(SurgerySlope(mu_coeff=r, lambda_coeff=s)) == expected


@pytest.mark.parametrize('args,orders', [
    ((2, 5, 1, '+'), [2, 5, 9]),
    ((2, 5, 2, '-'), [2, 5, 21]),
    ((3, 4, 1, '+'), [3, 4, 11]),
])
def test_base_orbifold(args, orders):
    assert base_orbifold(*args).cone_orders == orders


def test_base_orbifold_agrees_with_formula_everywhere():
    for q in range(2, 26):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            for n in range(1, 11):
                for sign in (1, -1):
                    orbifold = base_orbifold(p, q, n, sign)
                    assert orbifold == OrbifoldBase(cone_orders=[p, q, p * q * n - sign])


@pytest.mark.parametrize('args', [(2, 4, 1, 1), (5, 3, 1, 1), (2, 5, 0, 1), (2, 5, 1, 0)])
def test_base_orbifold_rejects_bad_input(args):
    with pytest.raises(SlopeError):
        base_orbifold(*args)


def test_orbifold_is_unordered():
    assert OrbifoldBase(cone_orders=[9, 2, 5]) == OrbifoldBase(cone_orders=[2, 5, 9])
    assert str(OrbifoldBase(cone_orders=[9, 2, 5])) == 'S2(2,5,9)'
    assert OrbifoldBase(cone_orders=[1, 2, 3]).cone_orders == [1, 2, 3]
    with pytest.raises(ValueError):
        OrbifoldBase(cone_orders=[0, 2, 3])


@pytest.mark.parametrize('args,orbifold,branch,slope', [
    ((5, 1, '+'), 'S2(2,5,9)', 'T(5,9)', '+1/1'),
    ((5, 2, '-'), 'S2(2,5,21)', 'T(5,21)', '-1/2'),
    ((3, 1, '+'), 'S2(2,3,5)', 'T(3,5)', '+1/1'),
])
def test_correspondence_row(args, orbifold, branch, slope):
    row = correspondence_row(*args)
    assert str(row.orbifold) == orbifold
    assert row.torus_branch_set == branch
    assert row.tau_slope == slope
    assert row.expected_determinant == 1


@pytest.mark.parametrize('args', [(4, 1, '+'), (1, 1, '+'), (5, 0, '+'), (5, 1, '*')])
def test_correspondence_row_rejects_bad_input(args):
    with pytest.raises(SlopeError):
        correspondence_row(*args)


def test_surgery_table():
    rows = surgery_table(5, 2)
    assert [r.torus_branch_set for r in rows] == ['T(5,9)', 'T(5,11)', 'T(5,19)', 'T(5,21)']
    assert rows[1].to_dict()['sign'] == '-'
    assert rows[0].to_dict()['torusParameters'] == [5, 9]
