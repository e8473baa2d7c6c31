"""
PD text format: parsing, rendering and validation.

    X(1,4,2,3) X(3,6,4,5) X(5,2,6,1) bp=1

Square brackets and the ``X_1,4,2,3`` shorthand are accepted on input; render
always emits the parenthesised form. Crossingless unlinks are written with a
``loops=<k>`` suffix.
"""
import re
import logging
from collections import Counter

from models.diagram import Crossing, Diagram, ValidationReport
from models.errors import PDParseError, DiagramValidationError, OrientationError
from diagrams.orientation import orient

logger = logging.getLogger(__name__)

_TUPLE_RE = re.compile(r'X\s*(?:[\(\[]\s*([^\)\]]*?)\s*[\)\]]|_\s*([\d,\s]+?)(?=\s|$))')
_BASEPOINT_RE = re.compile(r'\bbp\s*=\s*(-?\d+)')
_LOOPS_RE = re.compile(r'\bloops\s*=\s*(-?\d+)')
_WRAPPER_RE = re.compile(r'^\s*PD\s*[\(\[](.*)[\)\]]\s*$', re.S)


def _parse_tuple(body):
    parts = [p.strip() for p in body.split(',') if p.strip()]
    if len(parts) != 4:
        raise PDParseError(f'Crossing X({body}) has {len(parts)} entries, expected 4')
    try:
        edges = tuple(int(p) for p in parts)
    except ValueError:
        raise PDParseError(f'Crossing X({body}) contains a non-integer edge label')
    if any(e <= 0 for e in edges):
        raise PDParseError(f'Crossing X({body}) contains a non-positive edge label')
    return edges


def parse_pd(text, name=None):
    """
    Parse PD text into a validated Diagram.

    edge_count is the largest edge label. Signs are attached when the
    orientation can be traced, otherwise left pending.
    """
    if text is None or not text.strip():
        raise PDParseError('Empty PD input')

    body = text.strip()
    basepoint = None
    free_loops = 0

    match = _BASEPOINT_RE.search(body)
    if match:
        basepoint = int(match.group(1))
        body = body[:match.start()] + body[match.end():]
    match = _LOOPS_RE.search(body)
    if match:
        free_loops = int(match.group(1))
        if free_loops < 0:
            raise PDParseError('loops must be non-negative')
        body = body[:match.start()] + body[match.end():]

    wrapped = _WRAPPER_RE.match(body)
    if wrapped:
        body = wrapped.group(1)

    tuples = []
    consumed = []
    for m in _TUPLE_RE.finditer(body):
        tuples.append(_parse_tuple(m.group(1) if m.group(1) is not None else m.group(2)))
        consumed.append((m.start(), m.end()))

    leftover = body
    for start, end in reversed(consumed):
        leftover = leftover[:start] + leftover[end:]
    if leftover.strip(' \t\r\n,;'):
        raise PDParseError(f'Unrecognised PD text: {leftover.strip()[:40]!r}')
    if not tuples and free_loops == 0:
        raise PDParseError('PD input contains no crossings')

    edge_count = max((max(t) for t in tuples), default=0)
    try:
        crossings = orient(tuples)
    except (OrientationError, DiagramValidationError):
        crossings = tuple(Crossing(t) for t in tuples)

    diagram = Diagram(crossings, edge_count, basepoint, name, free_loops)
    report = validate(diagram)
    if not report.passed:
        raise DiagramValidationError('; '.join(report.problems), report.problems)
    return diagram


def validate(diagram):
    """Check edge degrees and basepoint validity; never raises"""
    report = ValidationReport()
    counts = Counter(e for c in diagram.crossings for e in c.edges)

    for edge in range(1, diagram.edge_count + 1):
        seen = counts.get(edge, 0)
        if seen != 2:
            report.problems.append(f'edge {edge} appears {seen} times, expected 2')
    for edge in sorted(counts):
        if edge < 1 or edge > diagram.edge_count:
            report.problems.append(f'edge {edge} is outside 1..{diagram.edge_count}')

    if diagram.basepoint is not None and not 1 <= diagram.basepoint <= diagram.edge_count:
        report.problems.append(f'basepoint {diagram.basepoint} is not an edge of the diagram')
    if diagram.free_loops < 0:
        report.problems.append('free loop count is negative')

    if diagram.is_crossingless:
        report.notes.append(f'crossingless unlink with {diagram.loop_count} component(s)')
    return report


def render(diagram):
    """Emit the PD text that parse_pd reads back to the same diagram"""
    parts = [str(c) for c in diagram.crossings]
    if not diagram.crossings:
        parts.append(f'loops={diagram.loop_count}')
    elif diagram.free_loops:
        parts.append(f'loops={diagram.free_loops}')
    if diagram.basepoint is not None:
        parts.append(f'bp={diagram.basepoint}')
    return ' '.join(parts)
