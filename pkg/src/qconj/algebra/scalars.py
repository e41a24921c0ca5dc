'''
    Exact arithmetic in the field Q(q) of rational functions in one
    indeterminate ``q``.

    Scalars are elements of the sympy fraction field ``QQ(q)``; they are
    immutable, hashable and compare structurally, so they can be used
    directly as ``DomainMatrix`` entries. ``LaurentPoly`` is the canonical
    textual carrier used in certificates::

        >>> format_scalar(q_int(2))
        '1*q^-1 + 1*q^1 / 1*q^0'

'''
import functools
import operator
from fractions import Fraction

import sympy
from sympy import QQ

#: the indeterminate
q_symbol = sympy.Symbol('q')

#: the coefficient domain ``QQ(q)``
FIELD = QQ.frac_field(q_symbol)

q = FIELD.gens[0]
ZERO = FIELD.zero
ONE = FIELD.one

_ops = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv
}


def _to_fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def to_scalar(value):
    '''
        Converts ``int``, ``Fraction``, ``str`` (certificate format) or a
        field element to a field element

    '''
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, Fraction):
        return FIELD(QQ(value.numerator, value.denominator))
    return FIELD(value)


def field_arith(a, b, op):
    '''
        Exact ``a <op> b`` with ``op`` one of ``'add'``, ``'sub'``,
        ``'mul'``, ``'div'``. Division by zero raises ``ZeroDivisionError``.

    '''
    if op not in _ops:
        raise ValueError(f'Unknown field operation {op!r}')
    a, b = to_scalar(a), to_scalar(b)
    if op == 'div' and not b:
        raise ZeroDivisionError(f'Division of {format_scalar(a)} by zero')
    return _ops[op](a, b)


@functools.lru_cache(maxsize=None)
def q_pow(z):
    ''' The monomial ``q^z`` '''
    return q ** int(z)


@functools.lru_cache(maxsize=None)
def q_int(z):
    ''' The q-integer ``[z]_q = (q^z - q^-z) / (q - q^-1)`` '''
    z = int(z)
    return (q_pow(z) - q_pow(-z)) / (q - q_pow(-1))


class LaurentPoly(object):
    '''
        Finite map from integer exponent to non-zero rational coefficient.

        Equality is equality of the coefficient maps. Rendered as a sum of
        ``c*q^e`` terms in ascending exponent order.

    '''

    def __init__(self, coeffs=None):
        coeffs = dict() if coeffs is None else coeffs
        self._coeffs = tuple(sorted(
            (int(e), Fraction(c)) for e, c in coeffs.items() if Fraction(c) != 0))

    @classmethod
    def from_poly(cls, poly, shift=0, scale=1):
        ''' Builds ``scale * q^-shift * poly`` from a polynomial in ``q`` '''
        return cls({e - shift: _to_fraction(c) * scale for (e,), c in poly.terms()})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def lowest(self):
        return self._coeffs[0][0] if self._coeffs else 0

    def leading(self):
        return self._coeffs[-1][1] if self._coeffs else Fraction(0)

    def to_scalar(self):
        s = ZERO
        for e, c in self._coeffs:
            s += to_scalar(c) * q_pow(e)
        return s

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f'LaurentPoly({self.coeffs!r})'

    def __str__(self):
        if not self._coeffs:
            return '0'
        return ' + '.join(f'{c}*q^{e}' for e, c in self._coeffs)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == '0':
            return cls()
        coeffs = dict()
        for term in text.split(' + '):
            c, e = term.strip().split('*q^')
            coeffs[int(e)] = coeffs.get(int(e), 0) + Fraction(c)
        return cls(coeffs)


def canonical_pair(s):
    '''
        Canonical ``(numerator, denominator)`` ``LaurentPoly`` pair of a
        scalar: coprime, denominator with lowest exponent 0 and leading
        coefficient 1.

    '''
    s = to_scalar(s)
    if not s:
        return LaurentPoly(), LaurentPoly({0: 1})
    numer, denom = s.numer, s.denom
    shift = min(e for (e,) in denom.monoms())
    lc = _to_fraction(denom.LC)
    return (LaurentPoly.from_poly(numer, shift, 1 / lc),
            LaurentPoly.from_poly(denom, shift, 1 / lc))


def canonical(s):
    ''' Round trip through the canonical pair; idempotent '''
    numer, denom = canonical_pair(s)
    return numer.to_scalar() / denom.to_scalar()


def format_scalar(s):
    numer, denom = canonical_pair(s)
    return f'{numer} / {denom}'


def parse_scalar(text):
    numer, _, denom = text.partition(' / ')
    numer = LaurentPoly.parse(numer).to_scalar()
    return numer / LaurentPoly.parse(denom).to_scalar() if denom else numer


def monomial_exponent(s):
    '''
        Returns ``e`` if ``s == c*q^e`` for a non-zero rational ``c``,
        ``None`` otherwise

    '''
    numer, denom = canonical_pair(s)
    if len(numer.coeffs) != 1 or denom != LaurentPoly({0: 1}):
        return None
    return numer.lowest()
