"""
Elementary operations on oriented diagrams: mirror, writhe, component count
and the canonical digest used as a cache key.
"""
import hashlib
import logging

from models.diagram import Crossing, Diagram
from models.errors import OrientationError
from diagrams.orientation import orient, trace_components

logger = logging.getLogger(__name__)


def oriented(diagram):
    """Return the diagram with every crossing sign filled in"""
    if all(c.sign is not None for c in diagram.crossings):
        return diagram
    crossings = orient(diagram.pd_tuples())
    return Diagram(crossings, diagram.edge_count, diagram.basepoint, diagram.name, diagram.free_loops)


def signed_counts(diagram):
    """(n_plus, n_minus) for the oriented diagram"""
    signs = [c.sign for c in oriented(diagram).crossings]
    return signs.count(1), signs.count(-1)


def writhe(diagram):
    n_plus, n_minus = signed_counts(diagram)
    return n_plus - n_minus


def mirror(diagram):
    """Switch every crossing; the rotated tuple keeps the incoming under-strand first"""
    diagram = oriented(diagram)
    crossings = []
    for c in diagram.crossings:
        a, b, cc, d = c.edges
        if c.sign == 1:
            # old over-strand ran d -> b and becomes the under-strand
            crossings.append(Crossing((d, a, b, cc), -1))
        else:
            crossings.append(Crossing((b, cc, d, a), 1))
    name = diagram.name
    if name:
        name = name[len('mirror '):] if name.startswith('mirror ') else f'mirror {name}'
    return Diagram(tuple(crossings), diagram.edge_count, diagram.basepoint, name, diagram.free_loops)


def component_count(diagram):
    """Link components traced through the crossings plus free loops"""
    if not diagram.crossings:
        return diagram.loop_count
    return len(trace_components(diagram.pd_tuples())) + diagram.free_loops


def _successors(crossings):
    """Map each edge to the edge that follows it in the orientation"""
    following = {}
    for c in crossings:
        a, b, cc, d = c.edges
        following[a] = cc
        if c.sign == 1:
            following[d] = b
        else:
            following[b] = d
    return following


def _ends(crossings):
    """Slots where each edge ends (head) and starts (tail), as (crossing index, position)"""
    head, tail = {}, {}
    for ci, c in enumerate(crossings):
        incoming = (0, 3) if c.sign == 1 else (0, 1)
        for pos, edge in enumerate(c.edges):
            (head if pos in incoming else tail)[edge] = (ci, pos)
    return head, tail


def _relabelled(crossings, following, ends, start):
    """
    Number edges along the orientation from start. Each further component is
    entered through the first unlabelled edge met around the head and then the
    tail crossing of the lowest labelled edge, counterclockwise from its slot,
    so the result depends only on the diagram and the start edge.
    """
    head, tail = ends
    labels = {}
    order = []

    def walk(edge):
        while edge not in labels:
            labels[edge] = len(order) + 1
            order.append(edge)
            edge = following[edge]

    walk(start)
    cursor = 0
    while len(labels) < len(following) and cursor < len(order):
        edge = order[cursor]
        entry = None
        for ci, pos in (head[edge], tail[edge]):
            edges = crossings[ci].edges
            entry = next((edges[(pos + k) % 4] for k in (1, 2, 3) if edges[(pos + k) % 4] not in labels), None)
            if entry is not None:
                break
        if entry is None:
            cursor += 1
        else:
            walk(entry)
    return labels


def _pieces(crossings):
    """Group crossings into connected pieces of the diagram"""
    parent = list(range(len(crossings)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    seen = {}
    for ci, c in enumerate(crossings):
        for edge in c.edges:
            if edge in seen:
                parent[find(ci)] = find(seen[edge])
            else:
                seen[edge] = ci
    groups = {}
    for ci, c in enumerate(crossings):
        groups.setdefault(find(ci), []).append(c)
    return list(groups.values())


def _piece_form(crossings, basepoint):
    """Smallest (tuples, basepoint label) over every start edge and both directions"""
    backward = [Crossing(c.edges[2:] + c.edges[:2], c.sign) for c in crossings]
    best = None
    for oriented_crossings in (crossings, backward):
        following = _successors(oriented_crossings)
        ends = _ends(oriented_crossings)
        for start in following:
            labels = _relabelled(oriented_crossings, following, ends, start)
            tuples = tuple(sorted(tuple(labels[e] for e in c.edges) for c in oriented_crossings))
            candidate = (tuples, labels.get(basepoint, 0))
            if best is None or candidate < best:
                best = candidate
    return best


def canonical_form(diagram):
    """
    Relabelling that ignores crossing order and edge names: each connected
    piece takes its lexicographically smallest form over every start edge
    and both traversal directions, and pieces are concatenated with the one
    holding the basepoint first. Returns (tuples, basepoint label, free loops).
    """
    try:
        diagram = oriented(diagram)
    except OrientationError:
        logger.debug('Digest of an unorientable PD falls back to its literal tuples')
        return tuple(sorted(diagram.pd_tuples())), diagram.basepoint or 0, diagram.free_loops

    if not diagram.crossings:
        return (), 0, diagram.loop_count

    forms = sorted(
        (_piece_form(piece, diagram.basepoint) for piece in _pieces(list(diagram.crossings))),
        key=lambda form: (form[1] == 0, form[0]),
    )
    tuples, bp, offset = [], 0, 0
    for piece_tuples, piece_bp in forms:
        tuples.extend(tuple(e + offset for e in t) for t in piece_tuples)
        if piece_bp:
            bp = piece_bp + offset
        offset += 2 * len(piece_tuples)
    return tuple(sorted(tuples)), bp, diagram.free_loops


def diagram_digest(diagram):
    """Deterministic SHA-256 digest of the canonical PD encoding plus basepoint"""
    tuples, bp, loops = canonical_form(diagram)
    text = ' '.join(f'X({a},{b},{c},{d})' for a, b, c, d in tuples)
    text += f'|loops={loops}|bp={bp}'
    return hashlib.sha256(text.encode('utf-8')).hexdigest()
