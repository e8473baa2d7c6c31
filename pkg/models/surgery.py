"""
Surgery slopes, fibre slopes and Seifert base orbifolds.
"""
from math import gcd
from typing import List

from pydantic import BaseModel, Field, field_validator, model_validator


class SurgerySlope(BaseModel):
    """The boundary curve r*mu + s*lambda, stored reduced with s >= 0"""
    mu_coeff: int = Field(description='Meridian coefficient r')
    lambda_coeff: int = Field(description='Longitude coefficient s')

    @model_validator(mode='before')
    @classmethod
    def normalise(cls, data):
        if isinstance(data, dict):
            r, s = int(data.get('mu_coeff', 0)), int(data.get('lambda_coeff', 0))
            if r == 0 and s == 0:
                raise ValueError('A slope cannot have both coefficients zero')
            if s < 0 or (s == 0 and r < 0):
                r, s = -r, -s
            g = gcd(r, s)
            data = {**data, 'mu_coeff': r // g, 'lambda_coeff': s // g}
        return data

    def __str__(self):
        return f'{self.mu_coeff}/{self.lambda_coeff}'


class FibreSlope(BaseModel):
    """Slope of a regular Seifert fibre on the boundary of a torus-knot exterior"""
    mu_coeff: int
    lambda_coeff: int = 1


class OrbifoldBase(BaseModel):
    """S^2 with three cone points; the cone orders form an unordered multiset"""
    cone_orders: List[int] = Field(min_length=3, max_length=3)

    @field_validator('cone_orders')
    @classmethod
    def positive_sorted(cls, orders):
        if any(o < 1 for o in orders):
            raise ValueError(f'Cone orders must be positive, got {orders}')
        return sorted(orders)

    def __eq__(self, other):
        if isinstance(other, OrbifoldBase):
            return self.cone_orders == other.cone_orders
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.cone_orders))

    def __str__(self):
        return 'S2(' + ','.join(str(o) for o in self.cone_orders) + ')'


class CorrespondenceRow(BaseModel):
    """One surgery with its two branch sets"""
    q: int
    n: int
    sign: int
    orbifold: OrbifoldBase
    torus_branch_set: str = Field(description='Name of the Seifert-involution branch set')
    torus_parameters: List[int] = Field(description='(p, q) of the torus knot branch set')
    tau_slope: str = Field(description='Slope of the rational filling of the quotient tangle')
    tau_fraction: List[int] = Field(description='(r, s) of that slope')
    expected_determinant: int = 1

    def to_dict(self):
        return {
            'q': self.q,
            'n': self.n,
            'sign': '+' if self.sign > 0 else '-',
            'orbifold': str(self.orbifold),
            'torusBranchSet': self.torus_branch_set,
            'torusParameters': list(self.torus_parameters),
            'tauSlope': self.tau_slope,
            'expectedDeterminant': self.expected_determinant,
        }
