"""
Rational tangles from slopes.

A slope p/q is expanded by the Euclidean algorithm into a twist word
[a_k, ..., a_1]. The tangle is grown from the innermost coefficient outward,
alternating horizontal and vertical twisting so that the last operation is
always horizontal.
"""
import logging

from models.tangle import Slope, TwistWord
from generators.tangles import (
    zero_tangle, infinity_tangle, twist_horizontal, twist_vertical,
    numerator_closure, denominator_closure
)

logger = logging.getLogger(__name__)


def continued_fraction(slope):
    """
    Twist word of a slope by Euclid's algorithm; 1/0 gives the empty word.

    Negative slopes take the negated word of |r|/s so every twist region has
    the same handedness and the tangle stays alternating.
    """
    if not isinstance(slope, Slope):
        slope = Slope.parse(slope)
    if slope.r < 0:
        positive = continued_fraction(Slope(-slope.r, slope.s))
        return TwistWord(tuple(-a for a in positive.coefficients))
    r, s = slope.r, slope.s
    coefficients = []
    while s != 0:
        a = r // s
        coefficients.append(a)
        r, s = s, r - a * s
    return TwistWord(tuple(coefficients))


def evaluate_twist_word(word):
    """Fold a twist word back to its slope, treating 1/0 projectively"""
    p, q = 1, 0
    for a in reversed(tuple(word)):
        p, q = a * p + q, p
    return Slope(p, q)


def rational_tangle(slope):
    """The rational tangle whose fraction is the given slope"""
    word = continued_fraction(slope)
    inner_first = list(reversed(word.coefficients))
    if not inner_first:
        return infinity_tangle()

    if len(inner_first) % 2 == 1:
        tangle = zero_tangle()
        horizontal = True
    else:
        tangle = infinity_tangle()
        horizontal = False
    for a in inner_first:
        tangle = twist_horizontal(tangle, a) if horizontal else twist_vertical(tangle, a)
        horizontal = not horizontal

    logger.debug(f'Rational tangle {slope} from word {list(word.coefficients)}: '
                 f'{tangle.crossing_count} crossings')
    return tangle


def rational_knot(slope, closure='numerator'):
    """Numerator (two-bridge knot or link) or denominator closure of R(slope)"""
    if not isinstance(slope, Slope):
        slope = Slope.parse(slope)
    tangle = rational_tangle(slope)
    name = f'{closure[0].upper()}(R({slope}))'
    if closure == 'denominator':
        return denominator_closure(tangle, name=name)
    return numerator_closure(tangle, name=name)
