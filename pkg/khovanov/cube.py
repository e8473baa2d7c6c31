"""
Full cube of resolutions with the Frobenius algebra F2[x]/(x^2).

This is the reference construction: exponential in the crossing count and
guarded accordingly, used to check the scanning engine on small diagrams.
"""
import logging
from functools import lru_cache

import numpy as np

from config import get_setting
from models.homology import GradedComplex
from models.errors import CrossingLimitError, DiagramValidationError
from diagrams.operations import oriented, signed_counts

logger = logging.getLogger(__name__)


def resolution_circles(tuples, state):
    """
    Circles of the resolution selected by state (bit k set = 1-smoothing of
    crossing k). Returns (edge -> circle index, circle count).
    """
    parent = {}

    def find(e):
        while parent.setdefault(e, e) != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def join(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for k, (a, b, c, d) in enumerate(tuples):
        if state >> k & 1:
            join(a, d)
            join(b, c)
        else:
            join(a, b)
            join(c, d)

    roots = sorted({find(e) for e in parent})
    index = {root: i for i, root in enumerate(roots)}
    return {e: index[find(e)] for e in parent}, len(roots)


@lru_cache(maxsize=None)
def _label_masks(total, marked):
    """
    Label bitmasks of one resolution in generator order: bit m is the label of
    circle m (0 for 1, 1 for x). A marked circle is pinned to x.
    """
    if marked < 0:
        masks = np.arange(1 << total, dtype=np.int64)
    else:
        compressed = np.arange(1 << (total - 1), dtype=np.int64)
        masks = ((compressed >> marked) << (marked + 1)) | (compressed & ((1 << marked) - 1)) | (1 << marked)
    masks.flags.writeable = False
    return masks


def _compress(masks, marked):
    """Position of each mask among the generators of its resolution"""
    if marked < 0:
        return masks
    return ((masks >> (marked + 1)) << marked) | (masks & ((1 << marked) - 1))


def _popcount(masks, width):
    count = np.zeros_like(masks)
    for bit in range(width):
        count += (masks >> bit) & 1
    return count


def cube_complex(diagram, reduced=True):
    """
    The cube complex of a diagram, shifted so the reduced unknot sits at (0, 0).

    In the reduced flavor the circle through the basepoint (edge 1 by default)
    is pinned to x. Each resolution keeps only its circle of every edge;
    generators are numbered arithmetically by a per-resolution offset plus the
    position of their label mask.
    """
    limit = get_setting('KH_ORACLE_MAX_CROSSINGS')
    if diagram.crossing_count > limit:
        raise CrossingLimitError(diagram.crossing_count, limit, 'cube complex')

    diagram = oriented(diagram)
    tuples = diagram.pd_tuples()
    n = len(tuples)
    n_plus, n_minus = signed_counts(diagram)
    loops = diagram.loop_count if n == 0 else diagram.free_loops

    edges = sorted({e for t in tuples for e in t})
    slot = {e: p for p, e in enumerate(edges)}
    basepoint = None
    if reduced and n:
        basepoint = diagram.basepoint if diagram.basepoint is not None else 1
        if basepoint not in slot:
            raise DiagramValidationError(f'Basepoint {basepoint} is not an edge', [basepoint])

    states = 1 << n
    circle_of = []
    traced = np.zeros(states, dtype=np.int64)
    marked = np.full(states, -1, dtype=np.int64)
    for state in range(states):
        circles, count = resolution_circles(tuples, state) if n else ({}, 0)
        circle_of.append(bytes(circles[e] for e in edges))
        traced[state] = count
        if reduced:
            # the marked circle is circle 0 for crossingless diagrams
            marked[state] = circles[basepoint] if n else 0
    total = traced + loops
    weight = np.array([bin(state).count('1') for state in range(states)], dtype=np.int64)
    shift = n_plus - 2 * n_minus + (1 if reduced else 0)

    offset = np.zeros(states, dtype=np.int64)
    filled = {}
    grading_parts = {}
    for state in range(states):
        r = int(weight[state])
        masks = _label_masks(int(total[state]), int(marked[state]))
        offset[state] = filled.get(r, 0)
        filled[r] = offset[state] + len(masks)
        x_count = _popcount(masks, int(total[state]))
        grading_parts.setdefault(r - n_minus, []).append(total[state] - 2 * x_count + r + shift)
    gradings = {i: np.concatenate(parts) for i, parts in grading_parts.items()}

    sources, targets = {}, {}
    for state in range(states):
        i = int(weight[state]) - n_minus
        masks = _label_masks(int(total[state]), int(marked[state]))
        for k in range(n):
            if state >> k & 1:
                continue
            target = state | (1 << k)
            origin, image = _edge_images(masks, circle_of[state], circle_of[target], int(traced[state]),
                                         int(traced[target]), loops, tuples[k], slot)
            pinned = int(marked[target])
            if pinned >= 0:
                kept = (image >> pinned) & 1 == 1
                origin, image = origin[kept], image[kept]
            sources.setdefault(i, []).append(offset[state] + _compress(origin, int(marked[state])))
            targets.setdefault(i, []).append(offset[target] + _compress(image, pinned))

    pairs = {i: (np.concatenate(sources[i]), np.concatenate(targets[i])) for i in sources}
    complex_ = GradedComplex.from_pairs(gradings, pairs)
    logger.debug(f'Cube complex of {n} crossings: {complex_.generator_count()} generators, '
                 f'{complex_.entry_count()} matrix entries')
    return complex_


def _edge_images(masks, circles, t_circles, traced, t_traced, loops, crossing, slot):
    """
    Images of every labelled resolution under the edge map at a crossing, as
    parallel arrays (source mask, image mask).
    """
    a, b, c, _ = crossing
    source_a, source_c = circles[slot[a]], circles[slot[c]]
    carried = [-1] * (traced + loops)
    for p, k in enumerate(circles):
        if carried[k] < 0:
            carried[k] = t_circles[p]
    # free loops keep their position after the traced circles
    for f in range(loops):
        carried[traced + f] = t_traced + f

    base = np.zeros_like(masks)
    for k, moved in enumerate(carried):
        if k not in (source_a, source_c):
            base |= ((masks >> k) & 1) << moved

    label_a = (masks >> source_a) & 1
    if source_a != source_c:
        label_c = (masks >> source_c) & 1
        # x * x = 0
        kept = (label_a & label_c) == 0
        merged = t_circles[slot[a]]
        return masks[kept], base[kept] | ((label_a | label_c)[kept] << merged)

    # x -> x(x)x, 1 -> 1(x)x + x(x)1
    first, second = t_circles[slot[a]], t_circles[slot[b]]
    is_x = label_a == 1
    is_one = ~is_x
    origin = np.concatenate([masks[is_x], masks[is_one], masks[is_one]])
    image = np.concatenate([
        base[is_x] | (1 << first) | (1 << second),
        base[is_one] | (1 << second),
        base[is_one] | (1 << first),
    ])
    return origin, image
