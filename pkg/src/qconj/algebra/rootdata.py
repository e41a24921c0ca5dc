'''
    Root data of gl(n): weights in the orthonormal basis ``eps_1..eps_n``,
    positive roots ``eps_i - eps_j`` (``i < j``), the integral ``rho`` with
    ``rho_i = n - i``, block structures, and admissible permutations.

    Indices are 0-based internally; everything user facing (permutation
    images, root labels) is 1-based.

'''
import functools
import itertools
import math

import numpy as np

from .scalars import q_pow


class RootSystem(object):
    '''
        Root system of gl(n). Roots are identified by index pairs ``(i, j)``
        meaning ``eps_i - eps_j``; ``(i, i)`` is the zero root and ``i > j``
        a negative root.

    '''

    def __init__(self, n):
        if n < 1:
            raise ValueError(f'Rank must be positive, got n={n}')
        self.n = n
        self.rho = np.arange(n - 1, -1, -1, dtype='i8')
        self.simple_roots = [(i, i + 1) for i in range(n - 1)]
        self.positive_roots = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def __repr__(self):
        return f'RootSystem({self.n})'

    def eps(self, i):
        v = np.zeros(self.n, dtype='i8')
        v[i] = 1
        return v

    def root_vector(self, root):
        i, j = root
        return self.eps(i) - self.eps(j)

    @staticmethod
    def pairing(a, b):
        return int(np.dot(np.asarray(a, dtype='i8'), np.asarray(b, dtype='i8')))

    def content(self, vec):
        '''
            Coefficients of a root-lattice vector in the simple roots,
            ``c_k = v_1 + ... + v_k``

        '''
        vec = np.asarray(vec, dtype='i8')
        if vec.sum() != 0:
            raise ValueError(f'{tuple(vec)} is not in the root lattice')
        return tuple(int(c) for c in np.cumsum(vec)[:-1])

    def root_content(self, root):
        i, j = root
        return tuple(1 if i <= k < j else 0 for k in range(self.n - 1))

    def height(self, root):
        return root[1] - root[0]

    def shift(self, i):
        ''' Content of ``eps_1 - eps_i``, i.e. ``alpha_1 + ... + alpha_{i-1}`` '''
        return tuple(1 if k < i else 0 for k in range(self.n - 1))


@functools.lru_cache(maxsize=None)
def root_system(n):
    return RootSystem(n)


class BlockStructure(object):
    '''
        Multiplicities ``(n_1, ..., n_k)`` of the diagonal blocks, ``k`` in
        ``[2, n]``.

    '''

    def __init__(self, mult, allow_trivial=False):
        self.mult = tuple(int(m) for m in mult)
        if any(m < 1 for m in self.mult):
            raise ValueError(f'Block multiplicities must be positive, got {self.mult}')
        self.n = sum(self.mult)
        self.k = len(self.mult)
        if not allow_trivial and not 2 <= self.k <= self.n:
            raise ValueError(f'Number of blocks must lie in [2, n], got k={self.k}, n={self.n}')
        self.block_starts = tuple(int(s) for s in np.cumsum((0,) + self.mult[:-1]))
        self._block_of = tuple(b for b, m in enumerate(self.mult) for _ in range(m))

    def __repr__(self):
        return f'BlockStructure({self.mult})'

    def __eq__(self, other):
        return isinstance(other, BlockStructure) and self.mult == other.mult

    def __hash__(self):
        return hash(self.mult)

    def block_of(self, i):
        return self._block_of[i]

    def precedes(self, i, j):
        return i < j and self._block_of[i] == self._block_of[j]

    @property
    def levi_simple_roots(self):
        return [(i, i + 1) for i in range(self.n - 1) if self.precedes(i, i + 1)]

    @property
    def levi_positive_roots(self):
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.precedes(i, j)]

    @property
    def complement_starts(self):
        return tuple(i for i in range(self.n) if i not in self.block_starts)


class Permutation(object):
    '''
        Bijection of ``{0..n-1}`` stored as an image tuple. ``str`` and
        ``one_based`` give the 1-based image array used on the command line
        and in certificates.

    '''

    def __init__(self, images):
        self.images = tuple(int(i) for i in images)
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f'Not a permutation: {self.images}')
        self.n = len(self.images)

    @classmethod
    def from_one_based(cls, images):
        return cls([i - 1 for i in images])

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @property
    def one_based(self):
        return [i + 1 for i in self.images]

    def __call__(self, i):
        return self.images[i]

    def inverse(self):
        inv = [0] * self.n
        for i, s in enumerate(self.images):
            inv[s] = i
        return Permutation(inv)

    def __mul__(self, other):
        return Permutation([self.images[other.images[i]] for i in range(self.n)])

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f'Permutation.from_one_based({self.one_based})'

    def __str__(self):
        return ','.join(str(i) for i in self.one_based)

    def apply_root(self, root):
        return (self.images[root[0]], self.images[root[1]])

    def is_identity(self):
        return self.images == tuple(range(self.n))


def _check_size(sigma, blocks):
    if sigma.n != blocks.n:
        raise ValueError(f'Permutation of {sigma.n} letters does not act on blocks {blocks.mult}')


def is_admissible(sigma, blocks):
    '''
        ``True`` iff ``sigma(i) < sigma(j)`` whenever ``i`` precedes ``j``
        in the same block. Cross-checked against ``sigma(R+_l) in R+``.

    '''
    _check_size(sigma, blocks)
    by_order = all(sigma(i) < sigma(j) for i in range(blocks.n) for j in range(i + 1, blocks.n)
                   if blocks.precedes(i, j))
    by_roots = all(a < b for a, b in map(sigma.apply_root, blocks.levi_positive_roots))
    if by_order != by_roots:
        raise RuntimeError(f'Admissibility characterizations disagree for {sigma}')
    return by_order


def enumerate_admissible(blocks):
    ''' Admissible permutations in lexicographic order of image tuples '''
    sigmas = [Permutation(images) for images in itertools.permutations(range(blocks.n))]
    sigmas = [s for s in sigmas if is_admissible(s, blocks)]
    expected = math.factorial(blocks.n) // math.prod(math.factorial(m) for m in blocks.mult)
    if len(sigmas) != expected:
        raise RuntimeError(f'Found {len(sigmas)} admissible permutations for {blocks.mult}, expected {expected}')
    return sigmas


def is_levi(sigma, blocks):
    ''' ``sigma(Pi+_l)`` consists of simple roots '''
    return all(b == a + 1 for a, b in map(sigma.apply_root, blocks.levi_simple_roots))


def shifted_action(sigma, lam):
    ''' ``sigma . lam = sigma(lam + rho) - rho`` '''
    lam = tuple(int(x) for x in lam)
    if len(lam) != sigma.n:
        raise ValueError(f'Weight {lam} and permutation {sigma} have different sizes')
    rho = root_system(sigma.n).rho
    inv = sigma.inverse()
    return tuple(int(lam[inv(i)] + rho[inv(i)] - rho[i]) for i in range(sigma.n))


def apply_linear(sigma, lam):
    ''' ``(sigma lam)_i = lam_{sigma^-1(i)}`` '''
    inv = sigma.inverse()
    return tuple(lam[inv(i)] for i in range(sigma.n))


def x_hat_exponent(lam, i):
    ''' Exponent of ``x-hat_i = q^{2(lam_i - i + 1)}`` (``i`` 0-based) '''
    return 2 * (int(lam[i]) - i)


def x_hat(lam, i):
    return q_pow(x_hat_exponent(lam, i))


def is_block_constant(lam, blocks):
    return all(lam[i] == lam[j] for i in range(blocks.n) for j in range(blocks.n)
               if blocks.precedes(i, j))


def is_levi_regular(lam, blocks):
    values = [lam[m] for m in blocks.block_starts]
    return is_block_constant(lam, blocks) and len(set(values)) == len(values)


def is_orbit_regular(lam, blocks):
    shifted = [lam[m] - m for m in blocks.block_starts]
    return is_levi_regular(lam, blocks) and len(set(shifted)) == len(shifted)


def m_sigma(sigma, blocks):
    ''' ``m_1^sigma < ... < m_k^sigma``: the sorted image of the block starts '''
    return tuple(sorted(sigma(m) for m in blocks.block_starts))


def sigma_exponents(lam, sigma, blocks):
    ''' Exponents of ``x_i^sigma = x-hat_{m_i^sigma}(sigma . lam)``, ``i = 1..k`` '''
    mu = shifted_action(sigma, lam)
    return [x_hat_exponent(mu, m) for m in m_sigma(sigma, blocks)]


def regular_decompositions(sigma, lam, blocks):
    '''
        For every ``alpha`` in ``Pi+_l`` and every splitting
        ``sigma(alpha) = mu + nu`` into positive roots, checks
        ``(sigma(lam), mu) != 0 != (sigma(lam), nu)``. Returns the list of
        offending ``(alpha, mu, nu)``.

    '''
    slam = apply_linear(sigma, lam)
    bad = list()
    for alpha in blocks.levi_simple_roots:
        a, b = sigma.apply_root(alpha)
        for c in range(a + 1, b):
            if slam[a] - slam[c] == 0 or slam[c] - slam[b] == 0:
                bad.append((alpha, (a, c), (c, b)))
    return bad


def kostant_partition_count(n, content, roots=None):
    '''
        Number of multisets of positive roots (optionally restricted to
        ``roots``) summing to ``sum_i content_i alpha_i``

    '''
    rs = root_system(n)
    roots = rs.positive_roots if roots is None else list(roots)
    vectors = tuple(rs.root_content(r) for r in roots)
    return _partitions(tuple(int(c) for c in content), vectors)


@functools.lru_cache(maxsize=None)
def _partitions(content, vectors):
    if not any(content):
        return 1
    if not vectors:
        return 0
    head, rest = vectors[0], vectors[1:]
    total = 0
    remaining = content
    while all(c >= 0 for c in remaining):
        total += _partitions(remaining, rest)
        remaining = tuple(c - h for c, h in zip(remaining, head))
    return total
