"""
Kauffman bracket and Jones polynomial.

States are summed with a frontier recursion: crossings are added in a
narrow-boundary order and partial states with the same boundary pairing are
merged, so the work follows the boundary width rather than 2^n.
"""
import logging

import sympy as sp

from config import get_setting
from models.polynomial import LaurentPoly
from models.errors import CrossingLimitError
from diagrams.operations import oriented, writhe
from khovanov.scanner import CrossingStep, ZERO_SMOOTHING, ONE_SMOOTHING, scan_order

logger = logging.getLogger(__name__)

A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
LOOP = LaurentPoly({2: -1, -2: -1})


def _check_guard(diagram):
    limit = get_setting('BRACKET_MAX_CROSSINGS')
    if diagram.crossing_count > limit:
        raise CrossingLimitError(diagram.crossing_count, limit, 'Kauffman bracket')


def kauffman_bracket(diagram):
    """Bracket in A, normalised so the crossingless unknot is 1"""
    _check_guard(diagram)
    if not diagram.crossings:
        return LOOP ** (diagram.loop_count - 1)

    tuples = diagram.pd_tuples()
    states = {frozenset(): LaurentPoly.one()}
    ports = frozenset()
    for ci in scan_order(tuples, 0):
        step = CrossingStep(ports, tuples[ci])
        merged = {}
        for matching, weight in states.items():
            for smoothing, factor in ((ZERO_SMOOTHING, A), (ONE_SMOOTHING, A_INV)):
                glued, circles = step.glue(matching, smoothing)
                term = weight * factor * (LOOP ** len(circles))
                merged[glued] = merged.get(glued, LaurentPoly()) + term
        states = {m: w for m, w in merged.items() if w}
        ports = step.new_ports
        logger.debug(f'bracket frontier: {len(ports)} ports, {len(states)} states')

    total = sum(states.values(), LaurentPoly())
    # the last gluing closes every remaining component; one of them is the normalising loop
    bracket = total.exact_quotient(LOOP)
    return bracket * LOOP ** diagram.free_loops


def jones_polynomial(diagram):
    """Jones polynomial in q with t = q^2"""
    diagram = oriented(diagram)
    w = writhe(diagram)
    normalised = kauffman_bracket(diagram) * LaurentPoly.monomial(-3 * w, (-1) ** (w % 2))
    return normalised.substitute_power(sp.Rational(-1, 2))


def jones_determinant(diagram):
    """|V(-1)|, evaluated at q = i"""
    value = jones_polynomial(diagram).evaluate(sp.I)
    return int(sp.Abs(value))
