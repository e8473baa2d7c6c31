"""
Graded chain complexes over F2 and the bigraded rank tables computed from them.
"""
import json
from dataclasses import dataclass, field
from typing import Dict, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator

from models.errors import ComplexError

# source rows checked per pass of the d∘d test
D_SQUARED_CHUNK = 50_000

_EMPTY = np.zeros(0, dtype=np.int64)


def gather_rows(indptr, indices, rows):
    """
    Entries of the given CSR rows as (position of the row in rows, column),
    concatenated in row order.
    """
    rows = np.asarray(rows, dtype=np.int64)
    starts = indptr[rows]
    lengths = indptr[rows + 1] - starts
    total = int(lengths.sum())
    if total == 0:
        return _EMPTY, _EMPTY
    row_ids = np.repeat(np.arange(len(rows), dtype=np.int64), lengths)
    run_starts = np.repeat(np.cumsum(lengths) - lengths, lengths)
    offsets = np.repeat(starts, lengths) + (np.arange(total, dtype=np.int64) - run_starts)
    return row_ids, indices[offsets]


@dataclass
class GradedComplex:
    """
    Cochain complex over F2 in compressed sparse row form.

    gradings[i][k] is the quantum grading of generator k in homological
    degree i. differentials[i] is a pair (indptr, indices): generator k of
    degree i maps to indices[indptr[k]:indptr[k + 1]] in degree i + 1.
    """
    gradings: Dict[int, np.ndarray] = field(default_factory=dict)
    differentials: Dict[int, Tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, gradings, pairs):
        """
        Build from {i: (sources, targets)} arrays of matrix entries; an entry
        listed twice cancels.
        """
        gradings = {i: np.asarray(g, dtype=np.int64) for i, g in gradings.items()}
        differentials = {}
        for i, (sources, targets) in pairs.items():
            n_source = len(gradings.get(i, _EMPTY))
            n_target = max(len(gradings.get(i + 1, _EMPTY)), 1)
            keys = np.asarray(sources, dtype=np.int64) * n_target + np.asarray(targets, dtype=np.int64)
            keys, counts = np.unique(keys, return_counts=True)
            keys = keys[counts % 2 == 1]
            indptr = np.zeros(n_source + 1, dtype=np.int64)
            np.cumsum(np.bincount(keys // n_target, minlength=n_source), out=indptr[1:])
            differentials[i] = (indptr, keys % n_target)
        return cls(gradings, differentials)

    @property
    def degrees(self):
        return sorted(self.gradings)

    def generator_count(self):
        return sum(len(g) for g in self.gradings.values())

    def entry_count(self):
        return sum(len(indices) for _, indices in self.differentials.values())

    def targets(self, i, k):
        """Degree-(i+1) generators that generator k of degree i maps to"""
        if i not in self.differentials:
            return _EMPTY
        indptr, indices = self.differentials[i]
        return indices[indptr[k]:indptr[k + 1]]

    def gather(self, i, rows):
        """Entries of the differential out of degree i restricted to rows"""
        if i not in self.differentials:
            return _EMPTY, _EMPTY
        indptr, indices = self.differentials[i]
        return gather_rows(indptr, indices, rows)

    def check_d_squared(self):
        """Raise ComplexError unless d∘d = 0 and d preserves the quantum grading"""
        for i, (indptr, indices) in self.differentials.items():
            source = self.gradings.get(i, _EMPTY)
            target = self.gradings.get(i + 1, _EMPTY)
            if len(indices):
                row_of = np.repeat(np.arange(len(source), dtype=np.int64), np.diff(indptr))
                moved = np.nonzero(target[indices] != source[row_of])[0]
                if moved.size:
                    e = moved[0]
                    raise ComplexError(
                        f'Differential from ({i},{source[row_of[e]]}) hits quantum grading {target[indices[e]]}'
                    )
            if i + 1 not in self.differentials:
                continue
            n_final = max(len(self.gradings.get(i + 2, _EMPTY)), 1)
            for start in range(0, len(source), D_SQUARED_CHUNK):
                rows = np.arange(start, min(start + D_SQUARED_CHUNK, len(source)), dtype=np.int64)
                row_ids, middle = gather_rows(indptr, indices, rows)
                if not len(middle):
                    continue
                hops, finals = self.gather(i + 1, middle)
                keys = row_ids[hops] * n_final + finals
                keys, counts = np.unique(keys, return_counts=True)
                odd = np.nonzero(counts % 2)[0]
                if odd.size:
                    k = start + int(keys[odd[0]] // n_final)
                    raise ComplexError(f'd∘d is non-zero on generator {k} of degree {i}')

    def blocks(self):
        """Split by quantum grading: {j: {i: array of generator indices}}"""
        split = {}
        for i, grades in self.gradings.items():
            for j in np.unique(grades):
                split.setdefault(int(j), {})[i] = np.nonzero(grades == j)[0]
        return split


class KhRanks(BaseModel):
    """
    Bigraded F2 ranks of (reduced or unreduced) Khovanov homology.
    """
    table: Dict[Tuple[int, int], int] = Field(
        default_factory=dict,
        description='Rank per (homological, quantum) grading; zero entries omitted'
    )
    flavor: Literal['reduced', 'unreduced'] = Field(
        default='reduced',
        description='Reduced (basepointed) or unreduced homology'
    )
    diagram: Optional[str] = Field(
        default=None,
        description='Digest of the diagram the ranks belong to'
    )

    @field_validator('table')
    @classmethod
    def drop_zero_entries(cls, table):
        for key, rank in table.items():
            if rank < 0:
                raise ValueError(f'Negative rank {rank} at {key}')
        return {key: rank for key, rank in table.items() if rank}

    @property
    def total(self):
        return sum(self.table.values())

    def rank(self, i, j):
        return self.table.get((i, j), 0)

    def entries(self):
        """[[i, j, rank], ...] sorted by (i, j)"""
        return [[i, j, self.table[(i, j)]] for i, j in sorted(self.table)]

    def mirrored(self):
        return KhRanks(table={(-i, -j): r for (i, j), r in self.table.items()},
                       flavor=self.flavor, diagram=None)

    def to_dict(self):
        return {
            'table': self.entries(),
            'total': self.total,
            'diagram': self.diagram,
            'flavor': self.flavor,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        table = {(int(i), int(j)): int(r) for i, j, r in data.get('table', [])}
        ranks = cls(table=table, flavor=data.get('flavor', 'reduced'), diagram=data.get('diagram'))
        if 'total' in data and int(data['total']) != ranks.total:
            raise ValueError(f'Stored total {data["total"]} disagrees with table total {ranks.total}')
        return ranks

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))
