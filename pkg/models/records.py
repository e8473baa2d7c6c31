"""
Verification claims and cache entries.
"""
from datetime import datetime
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from models.homology import KhRanks


class ClaimStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


class ClaimRelation(str, Enum):
    """eq: computed must equal expected; distinct: two computed values must differ"""
    EQ = 'eq'
    DISTINCT = 'distinct'


class ClaimRecord(BaseModel):
    """
    One numeric claim with the value actually computed.

    Distinct-relation claims store expected=1 and computed=1 when the two
    compared values differ. A skipped claim carries the reason in note.
    """
    description: str
    expected: int
    computed: Optional[int] = None
    tier: int = Field(ge=1, le=3)
    relation: ClaimRelation = ClaimRelation.EQ
    status: ClaimStatus = ClaimStatus.FAIL
    note: Optional[str] = None
    seconds: float = 0.0

    @model_validator(mode='after')
    def status_follows_values(self):
        if self.status == ClaimStatus.SKIPPED and self.computed is None:
            return self
        passed = self.computed is not None and self.computed == self.expected
        self.__dict__['status'] = ClaimStatus.PASS if passed else ClaimStatus.FAIL
        return self

    @property
    def passed(self):
        return self.status == ClaimStatus.PASS

    def line(self):
        label = self.status.value.upper()
        value = '-' if self.computed is None else self.computed
        text = f'{label:7} [tier {self.tier}] {self.description}: expected {self.expected}, computed {value}'
        if self.note:
            text += f' ({self.note})'
        return text

    def to_dict(self):
        return {
            'description': self.description,
            'expected': self.expected,
            'computed': self.computed,
            'status': self.status.value,
            'tier': self.tier,
            'relation': self.relation.value,
            'note': self.note,
            'seconds': round(self.seconds, 3),
        }


class CacheEntry(BaseModel):
    """A stored Khovanov rank table keyed by diagram digest and flavor"""
    digest: str
    flavor: str
    ranks: KhRanks
    engine_version: str
    wall_time: float = 0.0
    created_at: datetime = Field(default_factory=datetime.utcnow)

    def to_dict(self):
        return {
            'digest': self.digest,
            'flavor': self.flavor,
            'ranks': self.ranks.to_dict(),
            'engineVersion': self.engine_version,
            'wallTime': self.wall_time,
            'createdAt': self.created_at.isoformat() + 'Z',
        }

    @classmethod
    def from_dict(cls, data):
        created = data.get('createdAt')
        return cls(
            digest=data['digest'],
            flavor=data['flavor'],
            ranks=KhRanks.from_dict(data['ranks']),
            engine_version=data['engineVersion'],
            wall_time=float(data.get('wallTime', 0.0)),
            created_at=datetime.fromisoformat(created.rstrip('Z')) if created else datetime.utcnow(),
        )


class LesBoundRow(BaseModel):
    """
    One n of the inductive rank bound for tau(+-1/n).

    n = 1 is the anchor of the induction and carries no recursive bound.
    """
    n: int
    sign: int
    rank: int
    previous_rank: Optional[int] = None
    tau_zero_rank: int
    recursive_bound: Optional[int] = None
    closed_bound: int
    anchor: bool = False

    @property
    def recursive_holds(self):
        return self.recursive_bound is None or self.rank <= self.recursive_bound

    @property
    def closed_holds(self):
        return self.rank <= self.closed_bound

    @property
    def equality(self):
        return self.rank == self.closed_bound

    def to_dict(self):
        return {
            'n': self.n,
            'sign': '+' if self.sign > 0 else '-',
            'rank': self.rank,
            'previousRank': self.previous_rank,
            'tauZeroRank': self.tau_zero_rank,
            'recursiveBound': self.recursive_bound,
            'closedBound': self.closed_bound,
            'recursiveHolds': self.recursive_holds,
            'closedHolds': self.closed_holds,
            'equality': self.equality,
            'anchor': self.anchor,
        }


class LesReport(BaseModel):
    rows: List[LesBoundRow] = Field(default_factory=list)

    @property
    def passed(self):
        return all(r.recursive_holds and r.closed_holds for r in self.rows)

    def to_dict(self):
        return {'passed': self.passed, 'rows': [r.to_dict() for r in self.rows]}


class SkeinTriple(BaseModel):
    """A diagram, its two resolutions at one crossing, and their determinants"""
    diagram: str
    zero_resolution: str
    one_resolution: str
    determinants: List[int] = Field(min_length=3, max_length=3)

    @property
    def holds(self):
        d, d0, d1 = self.determinants
        return d in (d0 + d1, abs(d0 - d1))

    def to_dict(self):
        return {
            'diagram': self.diagram,
            'resolutions': [self.zero_resolution, self.one_resolution],
            'determinants': list(self.determinants),
            'holds': self.holds,
        }


class GrowthPoint(BaseModel):
    q: int
    rank: Optional[int] = None
    note: Optional[str] = None
    seconds: float = 0.0


class GrowthReport(BaseModel):
    """Observed ranks of T(p, q) over q; carries no pass/fail"""
    p: int
    points: List[GrowthPoint] = Field(default_factory=list)

    @property
    def differences(self):
        known = [pt for pt in self.points if pt.rank is not None]
        return [
            {'from': a.q, 'to': b.q, 'delta': b.rank - a.rank}
            for a, b in zip(known, known[1:])
        ]

    def to_dict(self):
        return {
            'p': self.p,
            'points': [
                {'q': pt.q, 'rank': pt.rank, 'note': pt.note, 'seconds': round(pt.seconds, 3)}
                for pt in self.points
            ],
            'differences': self.differences,
        }
