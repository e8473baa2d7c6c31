"""
Dotted cobordisms between crossingless matchings over F2.

An object is a crossingless matching: a frozenset of sorted port pairs.
A morphism M1 -> M2 is an F2-linear combination of basis surfaces; every
basis surface is a disjoint union of disks, one per circle of M1 and the
mirror of M2 glued along the ports, and is recorded by the set of dotted
circles. A circle is named by its smallest port. Morphisms are frozensets of
such dot-sets, so addition is symmetric difference.

Surfaces built by gluing basis pieces are reduced back to the disk basis by
neck cutting with x^2 = 0 and 2 = 0: a component with genus or two dots
vanishes, a closed component survives only as a once-dotted sphere, a
dotted component dots every boundary circle, and an undotted component
becomes the sum over its boundary circles of "dot all the others".
"""
from functools import lru_cache
from itertools import product

IDENTITY = frozenset({frozenset()})
ZERO = frozenset()


def add(a, b):
    return a ^ b


class _Union:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@lru_cache(maxsize=200_000)
def circle_keys(m1, m2):
    """Map every port of M1 and M2 to the smallest port of its circle"""
    union = _Union()
    for a, b in m1:
        union.union(a, b)
    for a, b in m2:
        union.union(a, b)
    ports = {p for arc in m1 for p in arc} | {p for arc in m2 for p in arc}
    return {p: union.find(p) for p in ports}


class SurfaceLayout:
    """
    A glued surface: disk pieces joined along intervals, some boundary
    circles capped by disks, the rest named as boundary circles.

    pieces   number of disk pieces
    glues    (piece, piece) per interval gluing
    caps     piece touched by each capped circle
    circles  (key, piece) per remaining boundary circle
    """

    def __init__(self, pieces, glues, caps, circles):
        union = _Union()
        for p in range(pieces):
            union.find(p)
        for a, b in glues:
            union.union(a, b)
        for p in caps:
            union.find(p)
        roots = sorted({union.find(p) for p in range(pieces)})
        slot = {root: k for k, root in enumerate(roots)}

        self.component_of_piece = [slot[union.find(p)] for p in range(pieces)]
        self.component_of_cap = [slot[union.find(p)] for p in caps]
        count = len(roots)
        euler = [0] * count
        boundary = [[] for _ in range(count)]
        for c in self.component_of_piece:
            euler[c] += 1
        for c in self.component_of_cap:
            euler[c] += 1
        for a, _ in glues:
            euler[self.component_of_piece[a]] -= 1
        for key, piece in circles:
            boundary[self.component_of_piece[piece]].append(key)

        self.components = []
        for c in range(count):
            handles = 2 - len(boundary[c]) - euler[c]
            self.components.append((handles, tuple(sorted(boundary[c]))))

    def evaluate(self, piece_dots, cap_dots):
        """
        Reduce to the disk basis. piece_dots and cap_dots give the number of
        dots on every piece and cap. Returns a morphism (set of dot-sets).
        """
        dots = [0] * len(self.components)
        for piece, d in enumerate(piece_dots):
            if d:
                dots[self.component_of_piece[piece]] += d
        for cap, d in enumerate(cap_dots):
            if d:
                dots[self.component_of_cap[cap]] += d

        options = []
        for (handles, keys), d in zip(self.components, dots):
            if handles > 0 or d > 1:
                return ZERO
            if not keys:
                if d != 1:
                    return ZERO
                continue
            if d == 1:
                options.append((frozenset(keys),))
            else:
                everything = frozenset(keys)
                options.append(tuple(everything - {k} for k in keys))

        result = set()
        for choice in product(*options):
            term = frozenset().union(*choice) if choice else frozenset()
            result ^= {term}
        return frozenset(result)


def factor_pieces(src, tgt, offset):
    """Pieces of a morphism src -> tgt: one per circle, indexed from offset"""
    keys = circle_keys(src, tgt)
    order = sorted(set(keys.values()))
    index = {key: offset + k for k, key in enumerate(order)}
    return {p: index[key] for p, key in keys.items()}, index


@lru_cache(maxsize=200_000)
def _composition_layout(m1, m2, m3):
    left, left_index = factor_pieces(m1, m2, 0)
    right, right_index = factor_pieces(m2, m3, len(left_index))
    glues = [(left[a], right[a]) for a, _ in m2]
    final = circle_keys(m1, m3)
    circles = [(key, left[key]) for key in sorted(set(final.values()))]
    layout = SurfaceLayout(len(left_index) + len(right_index), glues, [], circles)
    return layout, left_index, right_index


def compose(alpha, m1, m2, beta, m3):
    """beta o alpha for alpha: m1 -> m2 and beta: m2 -> m3"""
    if not alpha or not beta:
        return ZERO
    layout, left_index, right_index = _composition_layout(m1, m2, m3)
    pieces = len(left_index) + len(right_index)
    result = set()
    for a in alpha:
        for b in beta:
            dots = [0] * pieces
            for key in a:
                dots[left_index[key]] = 1
            for key in b:
                dots[right_index[key]] = 1
            result ^= layout.evaluate(dots, ())
    return frozenset(result)


def glue_objects(left_arcs, right_arcs, links, ports):
    """
    Glue two matchings along links between their endpoints.

    ports maps every endpoint left open to its port label. Returns
    (matching on port labels, closed circles as sorted node tuples).
    """
    segments = list(left_arcs) + list(right_arcs) + list(links)
    incident = {}
    for k, (a, b) in enumerate(segments):
        incident.setdefault(a, []).append(k)
        incident.setdefault(b, []).append(k)

    used = set()

    def walk(node):
        visited = [node]
        while True:
            free = [k for k in incident[node] if k not in used]
            if not free:
                return visited
            k = free[0]
            used.add(k)
            a, b = segments[k]
            node = b if a == node else a
            if node == visited[0] and node not in ports:
                return visited
            visited.append(node)
            if node in ports:
                return visited

    arcs = []
    for start in sorted(ports):
        if all(k in used for k in incident.get(start, [])):
            continue
        path = walk(start)
        a, b = ports[path[0]], ports[path[-1]]
        arcs.append((min(a, b), max(a, b)))

    circles = []
    for k in range(len(segments)):
        if k in used:
            continue
        circles.append(tuple(sorted(set(walk(segments[k][0])))))
    return frozenset(arcs), tuple(sorted(circles))
