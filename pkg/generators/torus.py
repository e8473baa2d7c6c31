"""
Positive torus knots as closures of the braid (s_1 s_2 ... s_{p-1})^q.
"""
import logging
from math import gcd

from models.errors import GeneratorError
from diagrams.orientation import from_unoriented

logger = logging.getLogger(__name__)


def braid_closure(strands, word, name=None):
    """
    Close a braid word given as signed generator indices (1-based).

    Each generator adds one crossing between positions i and i+1. For a
    positive generator the strand coming from position i+1 passes under on
    its way to position i.
    """
    if strands < 1:
        raise GeneratorError('A braid needs at least one strand')
    current = list(range(1, strands + 1))
    next_label = strands + 1
    tuples = []
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise GeneratorError(f'Generator {letter} does not act on {strands} strands')
        in_left, in_right = current[i], current[i + 1]
        out_left, out_right = next_label, next_label + 1
        next_label += 2
        if letter > 0:
            tuples.append((in_right, out_right, out_left, in_left))
        else:
            tuples.append((in_left, in_right, out_right, out_left))
        current[i], current[i + 1] = out_left, out_right

    closing = {top: bottom for top, bottom in zip(current, range(1, strands + 1))}
    tuples = [tuple(closing.get(e, e) for e in t) for t in tuples]
    # strands never touched by a crossing close up into separate loops
    untouched = {e for e in range(1, strands + 1)} - {e for t in tuples for e in t}
    diagram, _ = from_unoriented(tuples, free_loops=len(untouched), name=name)
    return diagram


def torus_knot(p, q):
    """The positive (p, q) torus knot with q(p-1) crossings"""
    if not (isinstance(p, int) and isinstance(q, int)):
        raise GeneratorError('Torus knot parameters must be integers')
    if p < 2 or q <= p:
        raise GeneratorError(f'Torus knot needs 2 <= p < q, got ({p}, {q})')
    if gcd(p, q) != 1:
        raise GeneratorError(f'T({p},{q}) is a link: gcd({p},{q}) = {gcd(p, q)}')

    word = list(range(1, p)) * q
    diagram = braid_closure(p, word, name=f'T({p},{q})')
    logger.debug(f'Generated T({p},{q}) with {diagram.crossing_count} crossings')
    return diagram
