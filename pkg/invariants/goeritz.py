"""
Link determinant from the Goeritz matrix of a checkerboard shading.

Faces are traced from corners: corner (c, k) is the region between edges k
and k+1 of crossing c (counterclockwise). Leaving c along edge k+1 and
arriving at slot m of the next crossing keeps the face in corner m there.
"""
import logging
from collections import deque

import sympy as sp

from models.polynomial import GoeritzMatrix
from diagrams.orientation import slot_occurrences, other_slot

logger = logging.getLogger(__name__)


def trace_faces(tuples):
    """Partition the corners into faces; returns (face of corner, faces as corner lists)"""
    occurrences = slot_occurrences(tuples)
    face_of = {}
    faces = []
    for ci in range(len(tuples)):
        for k in range(4):
            if (ci, k) in face_of:
                continue
            face = []
            corner = (ci, k)
            while corner not in face_of:
                face_of[corner] = len(faces)
                face.append(corner)
                c, pos = corner
                nxt = (pos + 1) % 4
                corner = other_slot(occurrences, tuples[c][nxt], (c, nxt))
            faces.append(face)
    return face_of, faces


def checkerboard(tuples, face_of, faces):
    """Two-colour the faces so the corners around every crossing alternate"""
    neighbours = [set() for _ in faces]
    for ci in range(len(tuples)):
        for k in range(4):
            a, b = face_of[(ci, k)], face_of[(ci, (k + 1) % 4)]
            neighbours[a].add(b)
            neighbours[b].add(a)
    colour = [None] * len(faces)
    for start in range(len(faces)):
        if colour[start] is not None:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g in neighbours[f]:
                if colour[g] is None:
                    colour[g] = 1 - colour[f]
                    queue.append(g)
    return colour


def crossing_components(tuples):
    """Number of connected pieces of the diagram's 4-valent graph"""
    occurrences = slot_occurrences(tuples)
    parent = list(range(len(tuples)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for slots in occurrences.values():
        if len(slots) == 2:
            a, b = find(slots[0][0]), find(slots[1][0])
            parent[a] = b
    return len({find(c) for c in range(len(tuples))})


def is_split_diagram(diagram):
    """Disconnected diagrams and diagrams with extra loops are split"""
    if not diagram.crossings:
        return diagram.loop_count > 1
    return diagram.free_loops > 0 or crossing_components(diagram.pd_tuples()) > 1


def goeritz_matrix(diagram, shading=0):
    """
    Unreduced Goeritz matrix on the faces of one colour.

    The pivot row is the shaded face touching edge 1.
    """
    tuples = diagram.pd_tuples()
    face_of, faces = trace_faces(tuples)
    colour = checkerboard(tuples, face_of, faces)
    shaded = [f for f in range(len(faces)) if colour[f] == shading]
    row = {f: r for r, f in enumerate(shaded)}
    size = len(shaded)
    entries = [[0] * size for _ in range(size)]

    for ci in range(len(tuples)):
        corners = [k for k in range(4) if colour[face_of[(ci, k)]] == shading]
        eta = 1 if set(corners) == {0, 2} else -1
        f, g = face_of[(ci, corners[0])], face_of[(ci, corners[1])]
        if f == g:
            continue
        entries[row[f]][row[g]] -= eta
        entries[row[g]][row[f]] -= eta
    for r in range(size):
        entries[r][r] = -sum(entries[r][c] for c in range(size) if c != r)

    pivot = 0
    for (ci, k), f in sorted(face_of.items()):
        edges = (tuples[ci][k], tuples[ci][(k + 1) % 4])
        if colour[f] == shading and 1 in edges:
            pivot = row[f]
            break

    boundaries = tuple(
        tuple(sorted({tuples[c][k] for c, k in faces[f]} | {tuples[c][(k + 1) % 4] for c, k in faces[f]}))
        for f in shaded
    )
    return GoeritzMatrix(tuple(tuple(r) for r in entries), shading, boundaries, pivot)


def determinant(diagram, shading=0):
    """|det| of the reduced Goeritz matrix; 0 means the double branched cover has b1 > 0"""
    if not diagram.crossings:
        return 1 if diagram.loop_count == 1 else 0
    if is_split_diagram(diagram):
        logger.debug(f'{diagram.name or "diagram"} is split: determinant 0')
        return 0
    matrix = goeritz_matrix(diagram, shading)
    if matrix.size <= 1:
        return 1
    value = matrix.reduced().det(method='bareiss')
    return abs(int(value))
