"""
Tangle templates and the branch-set families built from them.

The cinqfoil template is the outside of a slot in the Montesinos-type diagram

    N( R(-1/2) + R(2/5) + rot(slot + [-10]) )

Its denominator filling is an unknot, its numerator filling has determinant 0,
and filling the slot with R(r/s) gives a link of determinant |r|.
"""
import logging
from functools import lru_cache

from models.tangle import Slope
from models.errors import GeneratorError, TemplateError
from generators.tangles import (
    infinity_tangle, slot_tangle, tangle_sum, rotate, twist_horizontal,
    twist_vertical, close_around_slot, template_from_tangle, attach,
    numerator_template, denominator_template
)
from generators.rational import rational_tangle
from generators.torus import torus_knot

logger = logging.getLogger(__name__)

CINQFOIL_SLOT_TWISTS = -10


@lru_cache(maxsize=1)
def cinqfoil_template():
    """Outside of the quotient tangle for the (2,5) torus knot, 16 crossings"""
    minus_half = twist_vertical(infinity_tangle(), -2)
    two_fifths = rational_tangle(Slope(2, 5))
    slot_region = rotate(twist_horizontal(slot_tangle(), CINQFOIL_SLOT_TWISTS))
    body = tangle_sum(tangle_sum(minus_half, two_fifths), slot_region)
    closed = close_around_slot(body, [('NW', 'NE'), ('SW', 'SE')])
    template = template_from_tangle(closed, 'cinqfoil')
    logger.debug(f'Cinqfoil template assembled with {template.crossing_count} crossings')
    return template


def attach_rational(template, slope, name=None):
    """
    Fill the template's slot with R(slope).

    0/1 gives the numerator closure and 1/0 the denominator closure.
    """
    if not isinstance(slope, Slope):
        slope = Slope.parse(slope)
    if name is None:
        name = f'{template.name}({slope})'
    return attach(template, rational_tangle(slope), name=name)


def tau(slope):
    """tau(r/s): the cinqfoil template filled with R(r/s)"""
    if not isinstance(slope, Slope):
        slope = Slope.parse(slope)
    return attach_rational(cinqfoil_template(), slope, name=f'tau({slope})')


def numerator_closure_of(template):
    return attach_rational(template, Slope(0, 1))


def denominator_closure_of(template):
    return attach_rational(template, Slope(1, 0))


def seifert_branch_set(q, n, sign):
    """
    Branch set of the Seifert involution on +-1/n surgery along T(2,q):
    the torus knot T(q, 2qn -+ 1).
    """
    sign = _sign_value(sign)
    if not isinstance(q, int) or q <= 1 or q % 2 == 0:
        raise GeneratorError(f'q must be an odd integer > 1, got {q}')
    if not isinstance(n, int) or n <= 0:
        raise GeneratorError(f'n must be a positive integer, got {n}')
    return torus_knot(q, 2 * q * n - sign)


def _sign_value(sign):
    if sign in (1, '+', '+1', 'plus'):
        return 1
    if sign in (-1, '-', '-1', 'minus'):
        return -1
    raise GeneratorError(f'Sign must be + or -, got {sign!r}')


def template_by_name(name):
    templates = {
        'cinqfoil': cinqfoil_template,
        'numerator': numerator_template,
        'denominator': denominator_template,
    }
    if name not in templates:
        raise TemplateError(f'Unknown template {name!r}; choose from {sorted(templates)}')
    return templates[name]()
