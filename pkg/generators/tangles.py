"""
Four-ended tangle algebra.

Every operation works on unoriented crossing tuples (under-strand at positions
0 and 2) and joins tangles by identifying end edges. Edge identification is a
union-find over labels; negative labels mark the corners of an open slot and
always survive as representatives, which is how a template keeps track of
where an attached tangle will go.
"""
import logging

from models.tangle import Tangle, TangleTemplate, CORNERS
from models.errors import TemplateError
from diagrams.orientation import from_unoriented

logger = logging.getLogger(__name__)

SLOT_LABELS = {'NW': -1, 'NE': -2, 'SW': -3, 'SE': -4}


class _EdgeUnion:
    """Union-find over edge labels preferring negative, then smaller, labels"""

    def __init__(self):
        self.parent = {}

    def find(self, label):
        root = label
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while self.parent.get(label, label) != root:
            self.parent[label], label = root, self.parent[label]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        keep, drop = (ra, rb) if (ra < 0, -abs(ra)) > (rb < 0, -abs(rb)) else (rb, ra)
        self.parent[drop] = keep


def _join(crossings, ends, free_loops, pairs):
    """
    Identify the end edges named in pairs.

    ends lists the (corner, edge) references that remain open afterwards.
    Groups left with no crossing and no open end are closed loops.
    """
    union = _EdgeUnion()
    for a, b in pairs:
        union.union(a, b)

    new_crossings = tuple(tuple(union.find(e) for e in c) for c in crossings)
    new_ends = {corner: union.find(e) for corner, e in ends.items()}

    touched = {union.find(e) for pair in pairs for e in pair}
    used = {e for c in new_crossings for e in c} | set(new_ends.values())
    loops = free_loops + len(touched - used)
    return new_crossings, new_ends, loops


def _shift(tangle, offset):
    def move(e):
        return e + offset if e > 0 else e
    return Tangle(
        tuple(tuple(move(e) for e in c) for c in tangle.crossings),
        {corner: move(e) for corner, e in tangle.ends.items()},
        tangle.free_loops
    )


def _positive_max(tangle):
    return max([e for c in tangle.crossings for e in c if e > 0]
               + [e for e in tangle.ends.values() if e > 0], default=0)


def crossing_tangle(sign=1):
    """
    Single crossing. The +1 crossing has its SW-NE strand over, so that one
    horizontal or one vertical half-twist both have fraction +1.
    """
    nw, ne, sw, se = 1, 2, 3, 4
    if sign > 0:
        crossing = (nw, sw, se, ne)
    else:
        crossing = (sw, se, ne, nw)
    return Tangle((crossing,), {'NW': nw, 'NE': ne, 'SW': sw, 'SE': se})


def zero_tangle():
    """Two horizontal arcs"""
    return Tangle((), {'NW': 1, 'NE': 1, 'SW': 2, 'SE': 2})


def infinity_tangle():
    """Two vertical arcs"""
    return Tangle((), {'NW': 1, 'SW': 1, 'NE': 2, 'SE': 2})


def slot_tangle():
    """An empty slot whose four corners are still unattached"""
    return Tangle((), dict(SLOT_LABELS))


def tangle_sum(left, right):
    """Horizontal sum: left's east corners meet right's west corners"""
    right = _shift(right, _positive_max(left))
    pairs = [(left.ends['NE'], right.ends['NW']), (left.ends['SE'], right.ends['SW'])]
    ends = {'NW': left.ends['NW'], 'SW': left.ends['SW'],
            'NE': right.ends['NE'], 'SE': right.ends['SE']}
    crossings, ends, loops = _join(left.crossings + right.crossings, ends,
                                   left.free_loops + right.free_loops, pairs)
    return Tangle(crossings, ends, loops)


def tangle_product(top, bottom):
    """Vertical product: top's south corners meet bottom's north corners"""
    bottom = _shift(bottom, _positive_max(top))
    pairs = [(top.ends['SW'], bottom.ends['NW']), (top.ends['SE'], bottom.ends['NE'])]
    ends = {'NW': top.ends['NW'], 'NE': top.ends['NE'],
            'SW': bottom.ends['SW'], 'SE': bottom.ends['SE']}
    crossings, ends, loops = _join(top.crossings + bottom.crossings, ends,
                                   top.free_loops + bottom.free_loops, pairs)
    return Tangle(crossings, ends, loops)


def rotate(tangle):
    """Quarter turn counterclockwise; a rational fraction F becomes -1/F"""
    e = tangle.ends
    return Tangle(tangle.crossings,
                  {'NW': e['NE'], 'SW': e['NW'], 'SE': e['SW'], 'NE': e['SE']},
                  tangle.free_loops)


def mirror_tangle(tangle):
    """Switch every crossing"""
    return Tangle(tuple(c[1:] + c[:1] for c in tangle.crossings), tangle.ends, tangle.free_loops)


def twist_horizontal(tangle, count):
    """Add |count| half-twists on the east side, handedness from the sign"""
    sign = 1 if count > 0 else -1
    for _ in range(abs(count)):
        tangle = tangle_sum(tangle, crossing_tangle(sign))
    return tangle


def twist_vertical(tangle, count):
    """Add |count| half-twists on the south side"""
    sign = 1 if count > 0 else -1
    for _ in range(abs(count)):
        tangle = tangle_product(tangle, crossing_tangle(sign))
    return tangle


def _close(tangle, pairs, name=None):
    crossings, _, loops = _join(tangle.crossings, {}, tangle.free_loops, pairs)
    diagram, _ = from_unoriented(crossings, free_loops=loops, name=name)
    return diagram


def numerator_closure(tangle, name=None):
    """N(T): join NW to NE and SW to SE"""
    e = tangle.ends
    return _close(tangle, [(e['NW'], e['NE']), (e['SW'], e['SE'])], name)


def denominator_closure(tangle, name=None):
    """D(T): join NW to SW and NE to SE"""
    e = tangle.ends
    return _close(tangle, [(e['NW'], e['SW']), (e['NE'], e['SE'])], name)


def template_from_tangle(tangle, name):
    """
    Turn a closed construction that still contains an open slot into a template.

    Each slot corner must reach a crossing of the construction. Slot corners
    are renumbered 1..4 and the remaining labels follow from 5.
    """
    if tangle.ends:
        raise TemplateError('Template constructions must be closed off around the slot')
    labels = sorted({e for c in tangle.crossings for e in c}, key=lambda e: (e > 0, abs(e)))
    missing = [corner for corner, label in SLOT_LABELS.items() if label not in labels]
    if missing:
        raise TemplateError(f'Slot corners {missing} are not connected to the template')
    positive = [e for e in labels if e > 0]
    renumber = {e: i for i, e in enumerate(positive, start=5)}
    renumber.update({label: i for i, label in enumerate(SLOT_LABELS.values(), start=1)})
    interior = tuple(tuple(renumber[e] for e in c) for c in tangle.crossings)
    ends = {corner: renumber[label] for corner, label in SLOT_LABELS.items()}
    return TangleTemplate(interior, ends, name, tangle.free_loops)


def close_around_slot(tangle, pairs_by_corner):
    """Close a construction containing a slot; pairs name the corners to join"""
    e = tangle.ends
    pairs = [(e[a], e[b]) for a, b in pairs_by_corner]
    crossings, _, loops = _join(tangle.crossings, {}, tangle.free_loops, pairs)
    return Tangle(crossings, {}, loops)


def attach(template, tangle, name=None):
    """
    Fill the template's slot with a tangle and return the closed Diagram.
    Corner labels of the two pieces must match exactly.
    """
    if set(template.ends) != set(CORNERS) or set(tangle.ends) != set(CORNERS):
        raise TemplateError(
            f'End labels {sorted(template.ends)} and {sorted(tangle.ends)} do not match NW/NE/SW/SE'
        )
    offset = max([e for c in template.interior for e in c] + list(template.ends.values()), default=0)
    tangle = _shift(tangle, offset)
    pairs = [(template.ends[corner], tangle.ends[corner]) for corner in CORNERS]
    crossings, _, loops = _join(template.interior + tangle.crossings, {},
                                template.free_loops + tangle.free_loops, pairs)
    diagram, _ = from_unoriented(crossings, free_loops=loops, name=name)
    return diagram


def numerator_template():
    """The trivial outside whose attachment is the numerator closure"""
    return TangleTemplate((), {'NW': 1, 'NE': 1, 'SW': 2, 'SE': 2}, 'numerator')


def denominator_template():
    """The trivial outside whose attachment is the denominator closure"""
    return TangleTemplate((), {'NW': 1, 'SW': 1, 'NE': 2, 'SE': 2}, 'denominator')
