"""
Planar diagram value types.

A Diagram is a PD code: each crossing lists its four incident edges
counterclockwise starting from the incoming under-strand. Values are frozen
and safe to share between threads and processes.
"""
from dataclasses import dataclass, field, replace
from typing import Optional, Tuple, List


@dataclass(frozen=True)
class Crossing:
    """A single crossing: four edge labels plus its sign once orientations are traced"""
    edges: Tuple[int, int, int, int]
    sign: Optional[int] = None  # +1, -1 or None while pending

    def __post_init__(self):
        object.__setattr__(self, 'edges', tuple(int(e) for e in self.edges))

    @property
    def under(self):
        """Under-strand edges (incoming, outgoing)"""
        return self.edges[0], self.edges[2]

    @property
    def over(self):
        return self.edges[1], self.edges[3]

    def smoothing(self, which):
        """Arcs of the 0- or 1-resolution as pairs of slot indices"""
        if which == 0:
            return ((0, 1), (2, 3))
        return ((0, 3), (1, 2))

    def __str__(self):
        a, b, c, d = self.edges
        return f'X({a},{b},{c},{d})'


@dataclass(frozen=True)
class Diagram:
    """
    Link diagram in PD notation.

    free_loops counts crossingless split unknot components. A diagram with no
    crossings and no loops is read as the crossingless unknot.
    """
    crossings: Tuple[Crossing, ...]
    edge_count: int
    basepoint: Optional[int] = None
    name: Optional[str] = field(default=None, compare=False)
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'crossings', tuple(self.crossings))

    @property
    def crossing_count(self):
        return len(self.crossings)

    @property
    def is_crossingless(self):
        return not self.crossings

    @property
    def loop_count(self):
        """Closed crossingless components, with the empty diagram counted as one"""
        if not self.crossings and self.free_loops == 0:
            return 1
        return self.free_loops

    def pd_tuples(self):
        return [c.edges for c in self.crossings]

    def with_basepoint(self, edge):
        return replace(self, basepoint=edge)

    def with_name(self, name):
        return replace(self, name=name)

    def __repr__(self):
        label = f' {self.name}' if self.name else ''
        return f'<Diagram{label} ({self.crossing_count} crossings, {self.edge_count} edges)>'


@dataclass
class ValidationReport:
    """Outcome of validate(): passes when problems is empty"""
    problems: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return not self.problems

    def to_dict(self):
        return {
            'passed': self.passed,
            'problems': list(self.problems),
            'notes': list(self.notes)
        }
