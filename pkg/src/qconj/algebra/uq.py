'''
    Symbolic elements of U_q(gl(n)).

    An element is a finite linear combination of monomials
    ``X_1 ... X_r K_mu`` with letters ``X`` in ``E_i``, ``F_i`` and a single
    Cartan letter ``K_mu = q^{h_mu}`` (``mu`` in ``Z^n``) gathered rightmost
    with the exact rules::

        K_mu E_j = q^{(mu, alpha_j)} E_j K_mu
        K_mu F_j = q^{-(mu, alpha_j)} F_j K_mu

    Equality of elements is structural (same monomials, same
    coefficients). No straightening of mixed ``E``/``F`` words is
    attempted, so two elements that are equal in the algebra may compare
    unequal; claims about elements are checked through their action on
    modules.

'''
import numpy as np
from sympy.polys.matrices import DomainMatrix

from .scalars import FIELD, ZERO, ONE, q_pow, to_scalar, format_scalar
from .rootdata import root_system

E = 'E'
F = 'F'


def letter_weight(letter, n):
    kind, i = letter
    alpha = root_system(n).root_vector((i, i + 1))
    return alpha if kind == E else -alpha


def word_weight(word, n):
    wt = np.zeros(n, dtype='i8')
    for letter in word:
        wt += letter_weight(letter, n)
    return wt


def _pair(mu, wt):
    return int(np.dot(mu, wt))


def _mono_mul(m1, m2, n):
    ''' ``(w1 K_mu)(w2 K_nu) = q^{(mu, wt w2)} w1 w2 K_{mu+nu}`` '''
    (w1, mu), (w2, nu) = m1, m2
    factor = _pair(mu, word_weight(w2, n)) if any(mu) and w2 else 0
    return factor, (w1 + w2, tuple(a + b for a, b in zip(mu, nu)))


def _format_mono(mono):
    word, mu = mono
    parts = [f'{kind}{i + 1}' for kind, i in word]
    if any(mu):
        parts.append('K(' + ','.join(str(m) for m in mu) + ')')
    return ' '.join(parts) if parts else '1'


class UqElement(object):
    '''
        Linear combination over ``QQ(q)`` of normal-ordered monomials.

        Monomials are keys ``(word, mu)`` with ``word`` a tuple of letters
        ``('E', i)`` / ``('F', i)`` (0-based ``i``) and ``mu`` a length-``n``
        integer tuple.

    '''

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = dict()
        for mono, c in (terms or dict()).items():
            c = to_scalar(c)
            if c:
                self.terms[mono] = c

    # --- constructors

    @classmethod
    def one(cls, n):
        return cls(n, {((), (0,) * n): ONE})

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def scalar(cls, n, c):
        return cls(n, {((), (0,) * n): c})

    @classmethod
    def e(cls, n, i):
        return cls(n, {(((E, i),), (0,) * n): ONE})

    @classmethod
    def f(cls, n, i):
        return cls(n, {(((F, i),), (0,) * n): ONE})

    @classmethod
    def k(cls, n, mu):
        mu = tuple(int(m) for m in mu)
        if len(mu) != n:
            raise ValueError(f'Cartan exponent {mu} does not have length {n}')
        return cls(n, {((), mu): ONE})

    @classmethod
    def q_bracket(cls, n, beta, shift):
        '''
            ``[h_beta + shift]_q = (q^shift K_beta - q^-shift K_-beta) / (q - q^-1)``
            for an integer vector ``beta``

        '''
        beta = tuple(int(b) for b in beta)
        neg = tuple(-b for b in beta)
        denom = q_pow(1) - q_pow(-1)
        return cls(n, {((), beta): q_pow(shift) / denom, ((), neg): -q_pow(-shift) / denom}) \
            if any(beta) else cls.scalar(n, (q_pow(shift) - q_pow(-shift)) / denom)

    @classmethod
    def from_sequence(cls, n, letters, coeff=ONE, gather='left'):
        '''
            Normal-orders an arbitrary product of letters, where a letter is
            ``('E', i)``, ``('F', i)`` or ``('K', mu)``. ``gather`` selects
            whether Cartan letters are pushed right starting from the left
            end or from the right end; both orders give the same result.

        '''
        seq = list(letters)
        if gather == 'right':
            result = cls.scalar(n, coeff)
            for letter in reversed(seq):
                result = cls.letter(n, letter) * result
            return result
        result = cls.scalar(n, coeff)
        for letter in seq:
            result = result * cls.letter(n, letter)
        return result

    @classmethod
    def letter(cls, n, letter):
        kind, arg = letter
        if kind == 'K':
            return cls.k(n, arg)
        return cls(n, {(((kind, arg),), (0,) * n): ONE})

    # --- arithmetic

    def _check(self, other):
        if other.n != self.n:
            raise ValueError(f'Cannot combine elements of U_q(gl({self.n})) and U_q(gl({other.n}))')

    def _coerce(self, other):
        if isinstance(other, UqElement):
            self._check(other)
            return other
        return UqElement.scalar(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, ZERO) + c
        return UqElement(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return UqElement(self.n, {mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UqElement):
            c = to_scalar(other)
            return UqElement(self.n, {mono: coeff * c for mono, coeff in self.terms.items()})
        self._check(other)
        terms = dict()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                factor, mono = _mono_mul(m1, m2, self.n)
                terms[mono] = terms.get(mono, ZERO) + c1 * c2 * q_pow(factor)
        return UqElement(self.n, terms)

    def __rmul__(self, other):
        c = to_scalar(other)
        return UqElement(self.n, {mono: coeff * c for mono, coeff in self.terms.items()})

    def __pow__(self, m):
        result = UqElement.one(self.n)
        for _ in range(m):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, UqElement):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f'UqElement({self.n}, <{len(self.terms)} monomials>)'

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(f'({format_scalar(c)}) * {_format_mono(mono)}'
                          for mono, c in sorted(self.terms.items(), key=lambda t: _sort_key(t[0])))

    # --- queries

    def monomials(self):
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    def weight(self):
        ''' Weight of a homogeneous element (``None`` for zero) '''
        weights = {tuple(word_weight(word, self.n)) for word, _ in self.terms}
        if len(weights) > 1:
            raise ValueError(f'Element is not homogeneous, weights {sorted(weights)}')
        return np.array(weights.pop(), dtype='i8') if weights else None

    def specialize(self, lam):
        '''
            Substitutes ``K_mu -> q^{(mu, lam)}`` in the (already
            right-gathered) Cartan part, leaving words in ``E``, ``F``

        '''
        zero = (0,) * self.n
        terms = dict()
        for (word, mu), c in self.terms.items():
            key = (word, zero)
            terms[key] = terms.get(key, ZERO) + c * q_pow(_pair(mu, lam))
        return UqElement(self.n, terms)


def _sort_key(mono):
    word, mu = mono
    return (len(word), word, mu)


class TensorElement(object):
    ''' Linear combination of pairs of monomials, ``sum c (m1 (x) m2)`` '''

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {key: c for key, c in (terms or dict()).items() if c}

    @classmethod
    def pure(cls, x, y):
        terms = dict()
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                terms[(m1, m2)] = terms.get((m1, m2), ZERO) + c1 * c2
        return cls(x.n, terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, ZERO) + c
        return TensorElement(self.n, terms)

    def __mul__(self, other):
        terms = dict()
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                f1, m1 = _mono_mul(a1, b1, self.n)
                f2, m2 = _mono_mul(a2, b2, self.n)
                terms[(m1, m2)] = terms.get((m1, m2), ZERO) + c * d * q_pow(f1 + f2)
        return TensorElement(self.n, terms)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __str__(self):
        return ' + '.join(f'({format_scalar(c)}) * {_format_mono(m1)} (x) {_format_mono(m2)}'
                          for (m1, m2), c in sorted(self.terms.items(),
                                                    key=lambda t: (_sort_key(t[0][0]), _sort_key(t[0][1]))))

    def pairs(self):
        ''' ``(coeff, UqElement, UqElement)`` triples '''
        return [(c, UqElement(self.n, {m1: ONE}), UqElement(self.n, {m2: ONE}))
                for (m1, m2), c in self.terms.items()]


def _generator_coproduct(n, letter):
    kind, i = letter
    alpha = tuple(int(a) for a in root_system(n).root_vector((i, i + 1)))
    x = UqElement.letter(n, letter)
    one = UqElement.one(n)
    if kind == E:
        return TensorElement.pure(x, one) + TensorElement.pure(UqElement.k(n, alpha), x)
    return TensorElement.pure(one, x) + TensorElement.pure(x, UqElement.k(n, tuple(-a for a in alpha)))


def coproduct(x):
    '''
        Algebra-map extension of ``Delta(E) = E (x) 1 + K_alpha (x) E``,
        ``Delta(F) = 1 (x) F + F (x) K_-alpha``, ``Delta(K) = K (x) K``

    '''
    n = x.n
    result = TensorElement(n)
    for (word, mu), c in x.terms.items():
        term = TensorElement(n, {(((), (0,) * n), ((), (0,) * n)): c})
        for letter in word:
            term = term * _generator_coproduct(n, letter)
        term = term * TensorElement.pure(UqElement.k(n, mu), UqElement.k(n, mu))
        result = result + term
    return result


def antipode(x):
    '''
        Anti-algebra map with ``gamma(K_mu) = K_-mu``,
        ``gamma(E_i) = -K_-alpha_i E_i``, ``gamma(F_i) = -F_i K_alpha_i``

    '''
    n = x.n
    result = UqElement.zero(n)
    for (word, mu), c in x.terms.items():
        term = UqElement.k(n, tuple(-m for m in mu)) * c
        for kind, i in reversed(word):
            alpha = root_system(n).root_vector((i, i + 1))
            if kind == E:
                image = -(UqElement.k(n, -alpha) * UqElement.e(n, i))
            else:
                image = -(UqElement.f(n, i) * UqElement.k(n, alpha))
            term = term * image
        result = result + term
    return result


def counit(x):
    return sum((c for (word, _), c in x.terms.items() if not word), ZERO)


def natural_rep(x):
    ''' ``pi(E_i) = e_{i,i+1}``, ``pi(F_i) = e_{i+1,i}``, ``pi(K_mu) = diag(q^mu_j)`` '''
    n = x.n
    result = DomainMatrix.zeros((n, n), FIELD)
    for (word, mu), c in x.terms.items():
        term = DomainMatrix.eye(n, FIELD) * c
        for kind, i in word:
            unit = [[ZERO] * n for _ in range(n)]
            if kind == E:
                unit[i][i + 1] = ONE
            else:
                unit[i + 1][i] = ONE
            term = term * DomainMatrix(unit, (n, n), FIELD)
        diag = DomainMatrix.diag([q_pow(m) for m in mu], FIELD, (n, n))
        result = result + term * diag
    return result
