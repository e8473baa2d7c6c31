"""
Strand tracing for PD tuples.

Slots are (crossing index, position) pairs. A strand enters a crossing at one
slot and leaves through the opposite slot; an edge label joins its two slots.
"""
import logging
from collections import defaultdict

from models.diagram import Crossing, Diagram
from models.errors import OrientationError, DiagramValidationError

logger = logging.getLogger(__name__)


def slot_occurrences(tuples):
    """Map each edge label to the list of slots it occupies"""
    occurrences = defaultdict(list)
    for i, edges in enumerate(tuples):
        for k, edge in enumerate(edges):
            occurrences[edge].append((i, k))
    return occurrences


def other_slot(occurrences, edge, slot):
    """The slot at the far end of an edge"""
    slots = occurrences[edge]
    if len(slots) != 2:
        raise DiagramValidationError(f'Edge {edge} appears {len(slots)} times', [edge])
    return slots[1] if slots[0] == slot else slots[0]


def trace_components(tuples):
    """
    Split the strands of a diagram into closed components.

    Returns a list of components; each component is the list of
    (edge, crossing index, entry position) passages in traversal order,
    where edge is the edge along which the crossing is entered.
    """
    occurrences = slot_occurrences(tuples)
    visited = set()
    components = []
    for i, edges in enumerate(tuples):
        for k in range(4):
            if (i, k) in visited:
                continue
            component = []
            slot = (i, k)
            while slot not in visited:
                ci, ck = slot
                visited.add(slot)
                exit_pos = (ck + 2) % 4
                visited.add((ci, exit_pos))
                component.append((tuples[ci][ck], ci, ck))
                out_edge = tuples[ci][exit_pos]
                slot = other_slot(occurrences, out_edge, (ci, exit_pos))
            components.append(component)
    return components


def _over_default_forward(edges):
    """Label convention for strands that never pass under: over goes d -> b when b follows d"""
    _, b, _, d = edges
    return b - d == 1 or d - b > 1


def orient(tuples):
    """
    Attach signs to PD tuples whose first entry is the incoming under-strand.

    Raises OrientationError when a component would have to traverse some
    under-strand against the PD convention.
    """
    tuples = [tuple(t) for t in tuples]
    signs = [None] * len(tuples)
    for component in trace_components(tuples):
        under_entries = [pos for _, _, pos in component if pos in (0, 2)]
        if under_entries:
            forward = under_entries[0] == 0
            if any((pos == 0) != forward for pos in under_entries):
                raise OrientationError(
                    f'Strand through edge {component[0][0]} passes under-crossings in both directions'
                )
        else:
            _, ci, pos = component[0]
            forward = _over_default_forward(tuples[ci]) == (pos == 3)
        for _, ci, pos in component:
            entry = pos if forward else (pos + 2) % 4
            if entry == 3:
                signs[ci] = 1
            elif entry == 1:
                signs[ci] = -1
    return tuple(Crossing(t, s) for t, s in zip(tuples, signs))


def from_unoriented(tuples, free_loops=0, basepoint=None, name=None):
    """
    Build a Diagram from tuples that list under-strand slots at positions 0
    and 2 (counterclockwise) but carry no orientation.

    Components are oriented in discovery order, edges relabelled 1..2n along
    the traversal and each tuple rotated so its incoming under-strand comes first.
    Returns (diagram, relabel) where relabel maps old edge labels to new ones.
    """
    tuples = [tuple(t) for t in tuples]
    if not tuples:
        return Diagram((), 0, None, name, free_loops), {}

    components = trace_components(tuples)
    relabel = {}
    rotate = [False] * len(tuples)
    label = 1
    for component in components:
        for edge, ci, pos in component:
            # a repeated label inside one crossing (a kink) gets one new label per passage
            relabel[(edge, ci, pos)] = label
            label += 1
            if pos == 2:
                rotate[ci] = True

    new_tuples = [[None] * 4 for _ in tuples]
    occurrences = slot_occurrences(tuples)
    edge_map = {}
    for component in components:
        for edge, ci, pos in component:
            new_label = relabel[(edge, ci, pos)]
            new_tuples[ci][pos] = new_label
            far = other_slot(occurrences, edge, (ci, pos))
            new_tuples[far[0]][far[1]] = new_label
            edge_map.setdefault(edge, new_label)

    oriented = []
    for ci, t in enumerate(new_tuples):
        if rotate[ci]:
            t = t[2:] + t[:2]
        oriented.append(tuple(t))

    crossings = orient(oriented)
    new_basepoint = edge_map.get(basepoint) if basepoint is not None else None
    diagram = Diagram(crossings, label - 1, new_basepoint, name, free_loops)
    return diagram, edge_map
