"""
Surgery arithmetic on torus-knot exteriors.

Slopes are written r*mu + s*lambda. For T(p,q) the regular Seifert fibre
has slope pq*mu + lambda, and filling along a slope at distance d from it
leaves a Seifert fibred space over S2(p, q, d).
"""
import logging
from math import gcd

from models.errors import SlopeError
from models.surgery import SurgerySlope, FibreSlope, OrbifoldBase, CorrespondenceRow
from models.tangle import Slope

logger = logging.getLogger(__name__)


def _sign_value(sign):
    if sign in (1, '+', '+1', 'plus'):
        return 1
    if sign in (-1, '-', '-1', 'minus'):
        return -1
    raise SlopeError(f'Sign must be + or -, got {sign!r}')


def _positive_int(value, label):
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise SlopeError(f'{label} must be a positive integer, got {value!r}')
    return value


def slope_distance(a, f):
    """Minimal geometric intersection number of two slopes"""
    return abs(a.mu_coeff * f.lambda_coeff - a.lambda_coeff * f.mu_coeff)


def fibre_slope(p, q):
    return FibreSlope(mu_coeff=p * q, lambda_coeff=1)


def h1_order(slope):
    """|H1| of the filling of a knot exterior along slope; 0 stands for infinite"""
    return abs(slope.mu_coeff)


def base_orbifold(p, q, n, sign):
    """Base orbifold of +-1/n surgery on T(p,q)"""
    _positive_int(p, 'p')
    _positive_int(q, 'q')
    _positive_int(n, 'n')
    sign = _sign_value(sign)
    if not p < q or gcd(p, q) != 1:
        raise SlopeError(f'Need coprime 0 < p < q, got p={p}, q={q}')

    alpha = SurgerySlope(mu_coeff=sign, lambda_coeff=n)
    distance = slope_distance(alpha, fibre_slope(p, q))
    if distance == 0:
        raise SlopeError(f'Surgery slope {alpha} is the fibre slope of T({p},{q})')
    formula = p * q * n - sign
    if distance != formula:
        raise AssertionError(f'Fibre distance {distance} disagrees with pqn-+1 = {formula}')
    return OrbifoldBase(cone_orders=[p, q, distance])


def correspondence_row(q, n, sign):
    """
    The two branch sets of +-1/n surgery on T(2,q): the torus knot
    T(q, 2qn -+ 1) and the template closure tau(+-1/n).
    """
    sign = _sign_value(sign)
    if isinstance(q, bool) or not isinstance(q, int) or q <= 1 or q % 2 == 0:
        raise SlopeError(f'q must be an odd integer > 1, got {q!r}')
    _positive_int(n, 'n')

    orbifold = base_orbifold(2, q, n, sign)
    third = 2 * q * n - sign
    slope = Slope(sign, n)
    return CorrespondenceRow(
        q=q,
        n=n,
        sign=sign,
        orbifold=orbifold,
        torus_branch_set=f'T({q},{third})',
        torus_parameters=[q, third],
        tau_slope=f'{"+" if sign > 0 else "-"}1/{n}',
        tau_fraction=[slope.r, slope.s],
        expected_determinant=h1_order(SurgerySlope(mu_coeff=sign, lambda_coeff=n)),
    )


def surgery_table(q, n_max):
    """Rows for n = 1..n_max, positive surgery first"""
    _positive_int(n_max, 'n_max')
    rows = [correspondence_row(q, n, sign) for n in range(1, n_max + 1) for sign in (1, -1)]
    logger.debug(f'Surgery table for T(2,{q}) up to n={n_max}: {len(rows)} rows')
    return rows
