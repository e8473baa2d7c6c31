"""
Scanning computation of Khovanov homology over F2.

The diagram is cut open at its basepoint and crossings are added one at a
time. After each crossing the complex of crossingless matchings is delooped
(closed circles become pairs of shifted copies) and every identity entry is
cancelled by Gaussian elimination, so the working size follows the width of
the partial tangle rather than the size of the cube.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import product

from config import get_setting
from models.homology import KhRanks
from models.errors import ResourceLimitError, DiagramValidationError
from diagrams.operations import oriented, signed_counts
from khovanov.cobordisms import (
    IDENTITY, ZERO, SurfaceLayout, circle_keys, compose, glue_objects, factor_pieces
)
from khovanov.gf2 import rank_of_rows

logger = logging.getLogger(__name__)

# slot k of the crossing being added is node -(k + 1)
SLOTS = (-1, -2, -3, -4)
ZERO_SMOOTHING = frozenset({(-2, -1), (-4, -3)})
ONE_SMOOTHING = frozenset({(-4, -1), (-3, -2)})


class ScanComplex:
    """Complex over one partial tangle: generators with matchings and sparse F2 entries"""

    def __init__(self, ports=frozenset()):
        self.ports = frozenset(ports)
        self.gens = {}
        self.out = {}
        self.inn = {}
        self._next = 0

    def add_generator(self, matching, i, j):
        gid = self._next
        self._next += 1
        self.gens[gid] = (matching, i, j)
        self.out[gid] = {}
        self.inn[gid] = {}
        return gid

    def toggle(self, source, target, morph):
        if not morph:
            return
        value = self.out[source].get(target, ZERO) ^ morph
        if value:
            self.out[source][target] = value
            self.inn[target][source] = value
        else:
            self.out[source].pop(target, None)
            self.inn[target].pop(source, None)

    def remove(self, gid):
        for target in self.out.pop(gid):
            self.inn[target].pop(gid, None)
        for source in self.inn.pop(gid):
            self.out[source].pop(gid, None)
        del self.gens[gid]

    def __len__(self):
        return len(self.gens)

    def cancel(self, b, a):
        """Eliminate the identity entry b -> a"""
        ma = self.gens[a][0]
        sources = [(x, m) for x, m in self.inn[a].items() if x != b]
        targets = [(y, m) for y, m in self.out[b].items() if y != a]
        for x, delta in sources:
            mx = self.gens[x][0]
            for y, gamma in targets:
                self.toggle(x, y, compose(delta, mx, ma, gamma, self.gens[y][0]))
        self.remove(a)
        self.remove(b)

    def cancel_all(self):
        """Cancel identity entries by minimum fill-in until none remain"""
        cancelled = 0
        while True:
            candidates = []
            for b, targets in self.out.items():
                mb, _, jb = self.gens[b]
                for a, morph in targets.items():
                    ma, _, ja = self.gens[a]
                    if morph == IDENTITY and ma == mb and ja == jb:
                        fill = (len(self.inn[a]) - 1) * (len(targets) - 1)
                        candidates.append((fill, b, a))
            if not candidates:
                return cancelled
            candidates.sort()
            for _, b, a in candidates:
                if b in self.gens and a in self.gens and self.out[b].get(a) == IDENTITY:
                    self.cancel(b, a)
                    cancelled += 1


class CrossingStep:
    """Geometry of attaching one crossing to the current boundary"""

    def __init__(self, ports, edges):
        self.edges = edges
        self.links = []
        linked = set()
        for k, e in enumerate(edges):
            if e in ports:
                self.links.append((e, SLOTS[k]))
                linked.add(SLOTS[k])
        for k in range(4):
            for m in range(k + 1, 4):
                if edges[k] == edges[m] and edges[k] not in ports:
                    self.links.append((SLOTS[k], SLOTS[m]))
                    linked.update((SLOTS[k], SLOTS[m]))
        shared = {e for e in edges if e in ports}
        self.port_nodes = {p: p for p in ports if p not in shared}
        for k, node in enumerate(SLOTS):
            if node not in linked:
                self.port_nodes[node] = edges[k]
        self.node_of_label = {label: node for node, label in self.port_nodes.items()}
        self.new_ports = frozenset(self.port_nodes.values())
        self._glued = {}
        self._blocks = {}

    def glue(self, matching, smoothing):
        key = (matching, smoothing)
        if key not in self._glued:
            self._glued[key] = glue_objects(matching, smoothing, self.links, self.port_nodes)
        return self._glued[key]

    def block(self, l_src, l_tgt, l_morph, r_src, r_tgt):
        """
        Entries of (left morphism) tensor (right morphism) between the delooped
        summands. The right factor is the identity or the saddle, both undotted.
        """
        key = (l_src, l_tgt, l_morph, r_src, r_tgt)
        if key in self._blocks:
            return self._blocks[key]

        left, left_index = factor_pieces(l_src, l_tgt, 0)
        right, right_index = factor_pieces(r_src, r_tgt, len(left_index))
        piece = {**left, **right}
        pieces = len(left_index) + len(right_index)
        glues = [(piece[u], piece[v]) for u, v in self.links]

        src_matching, src_circles = self.glue(l_src, r_src)
        tgt_matching, tgt_circles = self.glue(l_tgt, r_tgt)
        caps = [piece[c[0]] for c in src_circles] + [piece[c[0]] for c in tgt_circles]
        final = circle_keys(src_matching, tgt_matching)
        circles = [(k, piece[self.node_of_label[k]]) for k in sorted(set(final.values()))]
        layout = SurfaceLayout(pieces, glues, caps, circles)

        entries = {}
        for dotted in l_morph:
            dots = [0] * pieces
            for k in dotted:
                dots[left_index[k]] = 1
            for src_labels in product((0, 1), repeat=len(src_circles)):
                for tgt_labels in product((0, 1), repeat=len(tgt_circles)):
                    # an x-summand enters through a dotted cup; a 1-summand leaves through a dotted cap
                    cap_dots = list(src_labels) + [1 - t for t in tgt_labels]
                    value = layout.evaluate(dots, cap_dots)
                    if value:
                        slot = (src_labels, tgt_labels)
                        entries[slot] = entries.get(slot, ZERO) ^ value
        entries = {k: v for k, v in entries.items() if v}
        self._blocks[key] = entries
        return entries


def _delooped(step, cx, new, limit):
    """Create the generators of cx tensor crossing; returns the id map"""
    ids = {}
    for gid in sorted(cx.gens):
        matching, i, j = cx.gens[gid]
        for s, (smoothing, height) in enumerate(((ZERO_SMOOTHING, 0), (ONE_SMOOTHING, 1))):
            glued, circles = step.glue(matching, smoothing)
            for labels in product((0, 1), repeat=len(circles)):
                shift = len(circles) - 2 * sum(labels)
                ids[(gid, s, labels)] = new.add_generator(glued, i + height, j + height + shift)
        if len(new) > limit:
            raise ResourceLimitError(len(new), limit)
    return ids


def tensor_crossing(cx, edges, limit):
    """Attach a crossing (PD tuple) to the complex and deloop closed circles"""
    step = CrossingStep(cx.ports, edges)
    new = ScanComplex(step.new_ports)
    ids = _delooped(step, cx, new, limit)

    for gid in sorted(cx.gens):
        matching = cx.gens[gid][0]
        for target, morph in sorted(cx.out[gid].items()):
            target_matching = cx.gens[target][0]
            for s, smoothing in enumerate((ZERO_SMOOTHING, ONE_SMOOTHING)):
                entries = step.block(matching, target_matching, morph, smoothing, smoothing)
                for (sl, tl), value in entries.items():
                    new.toggle(ids[(gid, s, sl)], ids[(target, s, tl)], value)
        entries = step.block(matching, matching, IDENTITY, ZERO_SMOOTHING, ONE_SMOOTHING)
        for (sl, tl), value in entries.items():
            new.toggle(ids[(gid, 0, sl)], ids[(gid, 1, tl)], value)
    return new


def cut_at_basepoint(tuples, basepoint):
    """Relabel the second occurrence of the basepoint edge so the diagram opens into a 1-1 tangle"""
    fresh = max(e for t in tuples for e in t) + 1
    seen = False
    cut = []
    first = None
    for ci, t in enumerate(tuples):
        t = list(t)
        for k, e in enumerate(t):
            if e == basepoint:
                if seen:
                    t[k] = fresh
                else:
                    seen = True
                    first = ci
        cut.append(tuple(t))
    if first is None:
        raise DiagramValidationError(f'Basepoint {basepoint} is not an edge', [basepoint])
    return cut, first


def scan_order(tuples, first):
    """Greedy order keeping the open boundary as small as possible"""
    def after(open_edges, t):
        result = set(open_edges)
        for e in t:
            result ^= {e}
        return result

    order = [first]
    open_edges = after(set(), tuples[first])
    remaining = set(range(len(tuples))) - {first}
    while remaining:
        best = min(
            remaining,
            key=lambda c: (len(after(open_edges, tuples[c])),
                           -sum(e in open_edges for e in tuples[c]), c)
        )
        order.append(best)
        remaining.discard(best)
        open_edges = after(open_edges, tuples[best])
    return order


def _with_free_loops(table, loops):
    """Each split unknot multiplies the Poincare polynomial by q + 1/q"""
    for _ in range(loops):
        grown = {}
        for (i, j), r in table.items():
            for shift in (1, -1):
                grown[(i, j + shift)] = grown.get((i, j + shift), 0) + r
        table = grown
    return table


def _finish_unreduced(cx, threads=1):
    """Close the final arc into a circle, deloop it and take homology"""
    gens = {}
    for gid, (_, i, j) in cx.gens.items():
        gens[(gid, 0)] = (i, j + 1)
        gens[(gid, 1)] = (i, j - 1)
    rows = {key: set() for key in gens}
    for source, targets in cx.out.items():
        for target, morph in targets.items():
            for dotted in morph:
                d = len(dotted)
                for a in (0, 1):
                    for b in (0, 1):
                        if d + a + (1 - b) == 1:
                            rows[(source, a)] ^= {(target, b)}

    by_grading = {}
    for key, (i, j) in gens.items():
        by_grading.setdefault((i, j), []).append(key)

    def grading_rank(grading):
        i, j = grading
        targets = by_grading.get((i + 1, j), [])
        column = {key: c for c, key in enumerate(sorted(targets))}
        matrix = [{column[t] for t in rows[key] if t in column} for key in sorted(by_grading[grading])]
        return rank_of_rows(matrix, len(column))

    gradings = sorted(by_grading)
    if threads > 1 and len(gradings) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            ranks = dict(zip(gradings, pool.map(grading_rank, gradings)))
    else:
        ranks = {grading: grading_rank(grading) for grading in gradings}
    table = {}
    for (i, j), keys in by_grading.items():
        value = len(keys) - ranks[(i, j)] - ranks.get((i - 1, j), 0)
        if value:
            table[(i, j)] = value
    return table


def scan_ranks(diagram, reduced=True, max_generators=None, threads=None):
    """Khovanov ranks by scanning; same contract as the cube construction"""
    limit = max_generators or get_setting('KH_MAX_GENERATORS')
    flavor = 'reduced' if reduced else 'unreduced'

    if not diagram.crossings:
        loops = diagram.loop_count
        base = {(0, 0): 1} if reduced else {(0, 1): 1, (0, -1): 1}
        table = _with_free_loops(base, loops - 1)
        return KhRanks(table=table, flavor=flavor)

    diagram = oriented(diagram)
    n_plus, n_minus = signed_counts(diagram)
    tuples = diagram.pd_tuples()
    basepoint = diagram.basepoint if diagram.basepoint is not None else 1
    cut, first = cut_at_basepoint(tuples, basepoint)
    order = scan_order(cut, first)

    cx = ScanComplex()
    cx.add_generator(frozenset(), 0, 0)
    peak = 1
    for step, ci in enumerate(order, start=1):
        cx = tensor_crossing(cx, cut[ci], limit)
        before = len(cx)
        cx.cancel_all()
        peak = max(peak, before)
        logger.debug(f'crossing {step}/{len(order)}: width {len(cx.ports)}, '
                     f'{before} -> {len(cx)} generators')

    if reduced:
        table = {}
        for _, i, j in cx.gens.values():
            table[(i, j)] = table.get((i, j), 0) + 1
    else:
        table = _finish_unreduced(cx, threads or get_setting('KH_THREADS'))

    table = _with_free_loops(table, diagram.free_loops)
    table = {(i - n_minus, j + n_plus - 2 * n_minus): r for (i, j), r in table.items()}
    logger.info(f'Scanned {len(order)} crossings ({flavor}), peak {peak} generators')
    return KhRanks(table=table, flavor=flavor)
