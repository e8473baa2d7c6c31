"""
Laurent polynomials with integer coefficients and Goeritz matrices.
"""
from dataclasses import dataclass
from typing import Dict, Tuple

import sympy as sp


class LaurentPoly:
    """Sparse exponent -> coefficient map; zero coefficients are never stored"""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        if isinstance(terms, LaurentPoly):
            terms = terms.terms
        self.terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def one(cls):
        return cls({0: 1})

    def __add__(self, other):
        other = _coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            if len(self.terms) != 1:
                raise ValueError('Only monomials have Laurent inverses')
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError('Monomial inverse needs a unit coefficient')
            return LaurentPoly({-e * -power: c ** -power})
        result = LaurentPoly.one()
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def shifted(self, symbol='x'):
        """(sympy Poly of x^-low * self, low) with low the smallest exponent"""
        x = sp.Symbol(symbol)
        low = min(self.terms, default=0)
        poly = sp.Poly.from_dict({(e - low,): c for e, c in self.terms.items()} or {(0,): 0}, x, domain='ZZ')
        return poly, low

    @classmethod
    def from_shifted(cls, poly, low):
        return cls({e + low: int(c) for (e,), c in poly.terms() if c})

    def exact_quotient(self, divisor):
        """self / divisor; ValueError unless the division leaves no remainder"""
        divisor = _coerce(divisor)
        if not divisor:
            raise ZeroDivisionError('Division by the zero Laurent polynomial')
        numerator, low = self.shifted()
        denominator, divisor_low = divisor.shifted()
        quotient, remainder = sp.div(numerator, denominator)
        if not remainder.is_zero:
            raise ValueError(f'{self!r} is not divisible by {divisor!r}')
        return LaurentPoly.from_shifted(quotient, low - divisor_low)

    def substitute_power(self, factor):
        """x -> x^factor; factor may be a fraction when every exponent divides"""
        x = sp.Symbol('x', positive=True)
        image = sp.expand(self.to_sympy('x').subs(sp.Symbol('x'), x ** sp.sympify(factor)))
        terms = {}
        for term in sp.Add.make_args(image):
            if term == 0:
                continue
            coefficient, exponent = term.as_coeff_exponent(x)
            if not exponent.is_integer:
                raise ValueError(f'Exponent {exponent} after x -> x^{factor} is not an integer')
            terms[int(exponent)] = terms.get(int(exponent), 0) + int(coefficient)
        return LaurentPoly(terms)

    def evaluate(self, value):
        """Exact value at a sympy number (e.g. sp.I)"""
        return sp.expand(sp.Add(*[sp.Integer(c) * value ** e for e, c in self.terms.items()]))

    def coefficients(self):
        """Sorted [[exponent, coefficient], ...]"""
        return [[e, self.terms[e]] for e in sorted(self.terms)]

    def to_sympy(self, symbol='q'):
        x = sp.Symbol(symbol)
        return sp.Add(*[c * x ** e for e, c in self.terms.items()])

    def format(self, symbol='q'):
        if not self.terms:
            return '0'
        return str(self.to_sympy(symbol))

    def __repr__(self):
        return f'LaurentPoly({self.coefficients()})'


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly({0: int(value)})


@dataclass(frozen=True)
class GoeritzMatrix:
    """
    Unreduced Goeritz matrix of one checkerboard colour class.

    faces lists, for every row, the edge labels bounding that face; pivot is
    the row deleted before taking the determinant.
    """
    entries: Tuple[Tuple[int, ...], ...]
    shading: int
    faces: Tuple[Tuple[int, ...], ...] = ()
    pivot: int = 0

    @property
    def size(self):
        return len(self.entries)

    def reduced(self):
        keep = [i for i in range(self.size) if i != self.pivot]
        return sp.Matrix([[self.entries[i][j] for j in keep] for i in keep])

    def to_dict(self):
        return {
            'entries': [list(row) for row in self.entries],
            'shading': self.shading,
            'pivot': self.pivot,
        }
