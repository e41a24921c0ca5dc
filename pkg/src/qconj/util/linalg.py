'''
    Exact linear algebra over ``QQ(q)`` on top of sympy's ``DomainMatrix``:
    column vectors, spans in reduced echelon form, kernels and joint
    minimal polynomials.

'''
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring

from ..algebra.scalars import FIELD, ZERO, ONE

#: polynomial ring ``QQ(q)[X]`` for minimal polynomials
POLY_RING, X = ring('X', FIELD)


def column(values):
    values = list(values)
    return DomainMatrix([[v] for v in values], (len(values), 1), FIELD).to_sparse()


def zero_column(dim):
    return DomainMatrix.zeros((dim, 1), FIELD)


def unit_column(dim, i):
    values = [ZERO] * dim
    values[i] = ONE
    return column(values)


def entries(col):
    ''' Flat list of the entries of a column '''
    return [row[0] for row in col.to_list()]


def entry(mat, i, j):
    return mat.rep.getitem(i, j)


def is_zero(mat):
    return mat.is_zero_matrix


def hstack(cols, dim):
    ''' ``dim x len(cols)`` matrix with the given columns '''
    if not cols:
        return DomainMatrix.zeros((dim, 0), FIELD)
    return DomainMatrix.hstack(*cols).to_sparse()


def vstack(blocks, width):
    if not blocks:
        return DomainMatrix.zeros((0, width), FIELD)
    return DomainMatrix.vstack(*blocks).to_sparse()


def kron(a, b):
    ''' Kronecker product, rows of ``a`` outermost '''
    ra, ca = a.shape
    rb, cb = b.shape
    la, lb = a.to_list(), b.to_list()
    rows = [[la[i // rb][j // cb] * lb[i % rb][j % cb] for j in range(ca * cb)] for i in range(ra * rb)]
    return DomainMatrix(rows, (ra * rb, ca * cb), FIELD)


def block_matrix(blocks, row_dims, col_dims):
    '''
        Assembles a matrix from a dict ``{(r, c): block}``; missing blocks
        are zero

    '''
    rows = list()
    for r, rd in enumerate(row_dims):
        row = [blocks.get((r, c), DomainMatrix.zeros((rd, cd), FIELD)) for c, cd in enumerate(col_dims)]
        rows.append(DomainMatrix.hstack(*row) if row else DomainMatrix.zeros((rd, 0), FIELD))
    if not rows:
        return DomainMatrix.zeros((0, sum(col_dims)), FIELD)
    return DomainMatrix.vstack(*rows).to_sparse()


def kernel(mat):
    ''' Basis of the right kernel as a list of columns '''
    if mat.shape[1] == 0:
        return list()
    if mat.shape[0] == 0:
        return [unit_column(mat.shape[1], i) for i in range(mat.shape[1])]
    null = mat.to_dense().nullspace()
    return [null[i:i + 1, :].transpose().to_sparse() for i in range(null.shape[0])]


class Subspace(object):
    '''
        Span of column vectors in ``QQ(q)^dim``, kept as the non-zero rows of
        a reduced row echelon form.

    '''

    def __init__(self, dim, vectors=()):
        self.dim = dim
        vectors = [v for v in vectors if not v.is_zero_matrix]
        if vectors:
            rref, pivots = hstack(vectors, dim).transpose().to_dense().rref()
            self.rows = rref[:len(pivots), :].to_sparse()
            self.pivots = tuple(pivots)
        else:
            self.rows = DomainMatrix.zeros((0, dim), FIELD)
            self.pivots = tuple()

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self):
        return len(self.pivots)

    def basis(self):
        return [self.rows[r:r + 1, :].transpose() for r in range(self.rank)]

    def reduce(self, vec):
        ''' Remainder of ``vec`` after eliminating the pivot coordinates '''
        values = entries(vec)
        rows = self.rows.to_list()
        for r, p in enumerate(self.pivots):
            c = values[p]
            if c:
                values = [v - c * x for v, x in zip(values, rows[r])]
        return column(values)

    def contains(self, vec):
        return self.reduce(vec).is_zero_matrix

    def contains_all(self, other):
        return all(self.contains(v) for v in other.basis())

    def __add__(self, other):
        return Subspace(self.dim, self.basis() + other.basis())

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.dim == other.dim \
            and self.rank == other.rank and self.contains_all(other)

    def __repr__(self):
        return f'Subspace(rank={self.rank}, dim={self.dim})'

    def complement_indices(self):
        return [i for i in range(self.dim) if i not in self.pivots]


def joint_min_poly(mats):
    '''
        Monic minimal polynomial of the block-diagonal operator made of the
        square matrices ``mats``, i.e. the lcm of their minimal polynomials.
        Computed by Krylov iteration on the concatenated flattened powers.

    '''
    mats = [m for m in mats if m.shape[0] > 0]
    if not mats:
        return POLY_RING.one
    powers = [DomainMatrix.eye(m.shape[0], FIELD) for m in mats]

    def flat(ps):
        values = list()
        for p in ps:
            values.extend(v for row in p.to_list() for v in row)
        return column(values)

    krylov = [flat(powers)]
    span = Subspace(krylov[0].shape[0], krylov)
    while True:
        powers = [p * m for p, m in zip(powers, mats)]
        vec = flat(powers)
        if span.contains(vec):
            break
        krylov.append(vec)
        span = span + Subspace(vec.shape[0], [vec])
    relation = kernel(hstack(krylov + [vec], vec.shape[0]))
    if len(relation) != 1:
        raise RuntimeError(f'Krylov relation is not unique ({len(relation)} solutions)')
    coeffs = entries(relation[0])
    lead = coeffs[-1]
    return sum((POLY_RING(c / lead) * X ** i for i, c in enumerate(coeffs)), POLY_RING.zero)


def poly_from_roots(roots):
    result = POLY_RING.one
    for r in roots:
        result = result * (X - POLY_RING(r))
    return result


def poly_coeffs(poly):
    ''' Coefficients in ascending degree order '''
    return [poly.get((i,), ZERO) for i in range(max(poly.degree(), 0) + 1)]


def evaluate_poly(poly, mat):
    ''' ``p(A)`` for a square matrix ``A`` '''
    dim = mat.shape[0]
    result = DomainMatrix.zeros((dim, dim), FIELD)
    power = DomainMatrix.eye(dim, FIELD)
    for c in poly_coeffs(poly):
        if c:
            result = result + power * c
        power = power * mat
    return result


def equal(a, b):
    ''' Entry-wise equality, independent of sparse or dense storage '''
    return a.shape == b.shape and (a - b).is_zero_matrix
