"""
Slopes, twist words and four-ended tangles.

A Tangle stores unoriented crossings: each tuple lists its four edges
counterclockwise with the under-strand in positions 0 and 2. The four ends
name the edges leaving through the NW, NE, SW and SE corners. A crossingless
arc is a single edge naming two ends.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Tuple

from models.errors import SlopeError

CORNERS = ('NW', 'NE', 'SW', 'SE')


@dataclass(frozen=True, order=True)
class Slope:
    """Reduced fraction r/s with s >= 0; 1/0 is the infinity slope"""
    r: int
    s: int = 1

    def __post_init__(self):
        r, s = int(self.r), int(self.s)
        if r == 0 and s == 0:
            raise SlopeError('0/0 is not a slope')
        if s < 0:
            r, s = -r, -s
        g = gcd(r, s)
        r, s = r // g, s // g
        if s == 0:
            r = 1
        object.__setattr__(self, 'r', r)
        object.__setattr__(self, 's', s)

    @classmethod
    def parse(cls, text):
        """Read 'r/s', 'r' or 'inf'"""
        text = str(text).strip()
        if text.lower() in ('inf', 'infinity', '1/0'):
            return cls(1, 0)
        try:
            if '/' in text:
                r, s = text.split('/', 1)
                return cls(int(r), int(s))
            return cls(int(text), 1)
        except ValueError:
            raise SlopeError(f'Cannot read slope {text!r}')

    @property
    def is_infinite(self):
        return self.s == 0

    def as_fraction(self):
        if self.is_infinite:
            raise SlopeError('1/0 has no finite value')
        return Fraction(self.r, self.s)

    def __str__(self):
        if self.s == 1:
            return str(self.r)
        return f'{self.r}/{self.s}'


@dataclass(frozen=True)
class TwistWord:
    """
    Continued-fraction coefficients [a_k, ..., a_1] evaluating to
    a_k + 1/(a_{k-1} + 1/(... + 1/a_1)); the empty word is 1/0.
    """
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(int(a) for a in self.coefficients))

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


@dataclass(frozen=True)
class Tangle:
    """Four-ended tangle diagram with unoriented crossings"""
    crossings: Tuple[Tuple[int, int, int, int], ...]
    ends: Dict[str, int] = field(hash=False)
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'crossings', tuple(tuple(c) for c in self.crossings))
        object.__setattr__(self, 'ends', dict(self.ends))

    @property
    def crossing_count(self):
        return len(self.crossings)

    def max_edge(self):
        labels = [e for c in self.crossings for e in c] + list(self.ends.values())
        return max(labels, default=0)


@dataclass(frozen=True)
class TangleTemplate:
    """
    The outside of a rational-tangle slot.

    interior holds the template's crossings; ends name the edges that meet the
    slot at its NW, NE, SW and SE corners. An attached tangle's corner edges
    are identified with these.
    """
    interior: Tuple[Tuple[int, int, int, int], ...]
    ends: Dict[str, int] = field(hash=False)
    name: str = 'template'
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'interior', tuple(tuple(c) for c in self.interior))
        object.__setattr__(self, 'ends', dict(self.ends))

    @property
    def crossing_count(self):
        return len(self.interior)
