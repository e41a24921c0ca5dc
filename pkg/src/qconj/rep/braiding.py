'''
    Hecke braid matrix ``S``, the L-operators ``L+ = (pi (x) id)(R_21)``
    and ``L- = (pi (x) id)(R)``, and the quantum coordinate matrix
    ``Q = L+ L-`` acting on ``C^n (x) M``.

    With the coproduct of ``qconj.algebra.uq``, ``L-`` is lower triangular
    with entries built from ``E`` and ``L+`` is upper triangular with entries
    built from ``F``; both have ``K_{eps_a}`` on the diagonal::

        L-_{i+1,i} = (q - q^-1) K_{eps_{i+1}} E_i
        L-_{a,i}   = E_i L-_{a,i+1} - q^-1 L-_{a,i+1} E_i          (a > i + 1)
        L+_{i,i+1} = (1 - q^-2) F_i K_{eps_i}
        L+_{a,i+1} = F_i L+_{a,i} - q^-1 L+_{a,i} F_i              (a < i)

    ``Q`` acts on ``C^n (x) M`` by ``Q (w_j (x) u) = sum_i w_i (x) Q_ij u``.

'''
import functools
import logging
import weakref

from sympy.polys.matrices import DomainMatrix

from ..algebra.scalars import FIELD, ZERO, ONE, q_pow, format_scalar
from ..algebra.rootdata import root_system, x_hat
from ..algebra.uq import UqElement, natural_rep
from ..util.linalg import block_matrix, joint_min_poly, equal, kron
from .module import CutoffExceeded, ModuleVector
from .verma import VermaModule, contents_up_to
from .tensor import TensorModule, top_vector, filtration_V


class ConventionError(RuntimeError):
    ''' A build-time validation pin of the braiding conventions failed '''
    pass


ORIENTATIONS = ('PR', 'RP')


def hecke_S(n, orientation='PR'):
    '''
        ``n^2 x n^2`` braid matrix, basis ``w_x (x) w_y`` at index ``x*n + y``.
        With ``R (w_x (x) w_y) = q^{delta_xy} w_x (x) w_y + [x < y](q - q^-1) w_y (x) w_x``,
        ``'PR'`` gives ``S (w_x (x) w_y) = q^{delta_xy} w_y (x) w_x + [x < y](q - q^-1) w_x (x) w_y``
        and ``'RP'`` the transposed pattern.

    '''
    if orientation not in ORIENTATIONS:
        raise ValueError(f'Unknown orientation {orientation!r}, expected one of {ORIENTATIONS}')
    size = n * n
    rows = [[ZERO] * size for _ in range(size)]
    gap = q_pow(1) - q_pow(-1)
    for x in range(n):
        for y in range(n):
            col = x * n + y
            rows[y * n + x][col] += q_pow(1) if x == y else ONE
            if (x < y and orientation == 'PR') or (x > y and orientation == 'RP'):
                rows[col][col] += gap
    return DomainMatrix(rows, (size, size), FIELD).to_sparse()


def braid_relation_holds(S, n):
    s12 = kron(S.to_dense(), DomainMatrix.eye(n, FIELD).to_dense())
    s23 = kron(DomainMatrix.eye(n, FIELD).to_dense(), S.to_dense())
    return equal(s12 * s23 * s12, s23 * s12 * s23)


def hecke_holds(S, n):
    eye = DomainMatrix.eye(n * n, FIELD)
    return ((S - eye * q_pow(1)) * (S + eye * q_pow(-1))).is_zero_matrix


class QMatrix(object):
    '''
        The matrix ``Q = L+ L-`` with ``UqElement`` entries, together with
        the braid matrix ``S`` whose orientation satisfies
        ``S^2 = (pi (x) pi)(Q)``.

        Parameters:
         - ``n`` : ``int``
         - ``validate`` : ``bool``, run the validation pins (default ``True``)

        Validation pins:
         - ``'S-squared'``: ``(pi (x) pi)(Q)`` equals ``S^2`` for one orientation
         - ``'equivariance'``: ``Q`` commutes with ``E_i``, ``F_i`` on a small tensor module
         - ``'spectrum'``: ``Q (w_1 (x) v) = q^{2 lam_1} w_1 (x) v``

    '''
    class_version = '0.1.0'

    def __init__(self, n, validate=True):
        self.n = n
        self.lminus = self._lminus(n)
        self.lplus = self._lplus(n)
        self.entries = [[sum((self.lplus[i][c] * self.lminus[c][j] for c in range(n)), UqElement.zero(n))
                         for j in range(n)] for i in range(n)]
        self.orientation = self._select_orientation()
        self.S = hecke_S(n, self.orientation)
        self._operators = weakref.WeakKeyDictionary()
        if validate:
            self.validate()

    def __repr__(self):
        return f'QMatrix({self.n}, orientation={self.orientation!r})'

    @staticmethod
    def _lminus(n):
        eps = root_system(n).eps
        L = [[UqElement.zero(n) for _ in range(n)] for _ in range(n)]
        for a in range(n):
            L[a][a] = UqElement.k(n, eps(a))
        for i in range(n - 2, -1, -1):
            L[i + 1][i] = UqElement.k(n, eps(i + 1)) * UqElement.e(n, i) * (q_pow(1) - q_pow(-1))
            for a in range(i + 2, n):
                e_i = UqElement.e(n, i)
                L[a][i] = e_i * L[a][i + 1] - L[a][i + 1] * e_i * q_pow(-1)
        return L

    @staticmethod
    def _lplus(n):
        eps = root_system(n).eps
        L = [[UqElement.zero(n) for _ in range(n)] for _ in range(n)]
        for a in range(n):
            L[a][a] = UqElement.k(n, eps(a))
        for i in range(n - 1):
            L[i][i + 1] = UqElement.f(n, i) * UqElement.k(n, eps(i)) * (1 - q_pow(-2))
            for a in range(i):
                f_i = UqElement.f(n, i)
                L[a][i + 1] = f_i * L[a][i] - L[a][i] * f_i * q_pow(-1)
        return L

    def natural_image(self):
        ''' ``(pi (x) pi)(Q)``: entry ``((a, b), (c, d))`` is ``pi(Q_ac)_bd`` '''
        n = self.n
        images = [[natural_rep(self.entries[a][c]).to_list() for c in range(n)] for a in range(n)]
        rows = [[images[a][c][b][d] for c in range(n) for d in range(n)] for a in range(n) for b in range(n)]
        return DomainMatrix(rows, (n * n, n * n), FIELD).to_sparse()

    def _select_orientation(self):
        image = self.natural_image()
        for orientation in ORIENTATIONS:
            S = hecke_S(self.n, orientation)
            if equal(S * S, image):
                logging.info(f'Braid matrix orientation {orientation} satisfies S^2 = (pi x pi)(Q)')
                return orientation
        raise ConventionError(f'S-squared pin failed: no orientation in {ORIENTATIONS} gives S^2 = (pi x pi)(Q)')

    def validate(self, lam=None):
        n = self.n
        lam = tuple(3 * (n - i) + i * i for i in range(n)) if lam is None else tuple(lam)
        T = TensorModule(VermaModule(lam, 2 if n > 1 else 0))
        bad = check_equivariance(self, T, [t for t in T.spaces() if sum(t) <= 1])
        if bad:
            raise ConventionError(f'equivariance pin failed on spaces {bad}')
        w = top_vector(T, 0)
        if q_apply(self, T, w) != w * x_hat(lam, 0):
            raise ConventionError(f'spectrum pin failed: Q (w_1 x v) is not q^{2 * lam[0]} w_1 x v')

    def entry_operator(self, M, a, b, d):
        '''
            ``Q_ab`` on the weight space of content ``d`` of ``M``. Returns
            ``(target, matrix)``; ``matrix`` is ``None`` when the target
            content is negative.

        '''
        cache = self._operators.setdefault(M, dict())
        if (a, b, d) not in cache:
            weight = root_system(self.n).eps(b) - root_system(self.n).eps(a)
            cache[(a, b, d)] = M.operator_matrix(self.entries[a][b], d, weight=weight)
        return cache[(a, b, d)]

    def tensor_matrix(self, T, t):
        ''' Matrix of ``Q`` on the space ``t`` of ``T = C^n (x) M`` '''
        keys = T.space_keys(t)
        index = {k: r for r, k in enumerate(keys)}
        dims = [T.key_dim(k) for k in keys]
        blocks = dict()
        for col, (b, d) in enumerate(keys):
            for a in range(self.n):
                target, mat = self.entry_operator(T.base, a, b, d)
                if mat is None:
                    continue
                if (a, target) not in index:
                    raise RuntimeError(f'Q_{a + 1}{b + 1} maps space {t} outside itself')
                blocks[(index[(a, target)], col)] = mat
        return block_matrix(blocks, dims, dims)


@functools.lru_cache(maxsize=None)
def build_Q(n, validate=True):
    return QMatrix(n, validate=validate)


def q_apply(Q, T, vec):
    ''' ``Q`` applied to a vector of ``T = C^n (x) M`` '''
    result = ModuleVector(T)
    for b in range(Q.n):
        u = T.component(vec, b)
        if u.is_zero():
            continue
        for a in range(Q.n):
            result = result + T.pure(a, T.base.apply(Q.entries[a][b], u))
    return result


def q_action(Q, T, spaces=None):
    ''' ``{t: matrix of Q on space t}`` for all (or the given) spaces of ``T`` '''
    spaces = T.spaces() if spaces is None else spaces
    return {t: Q.tensor_matrix(T, t) for t in spaces if T.space_dim(t) > 0}


def check_equivariance(Q, T, spaces):
    ''' Spaces ``t`` (with the generator) where ``[Q, E_i]`` or ``[Q, F_i]`` is non-zero '''
    bad = list()
    for t in spaces:
        if T.space_dim(t) == 0:
            continue
        q_t = Q.tensor_matrix(T, t)
        for kind in ('E', 'F'):
            for i in range(T.n - 1):
                if kind == 'F' and sum(t) + 1 > T.cutoff:
                    continue
                target, mat = T.letter_matrix((kind, i), t)
                if mat is None:
                    continue
                if not equal(mat * q_t, Q.tensor_matrix(T, target) * mat):
                    bad.append((t, f'{kind}{i + 1}'))
    return bad


def min_poly(ops):
    ''' lcm of the minimal polynomials of the operators ``{space: matrix}`` '''
    return joint_min_poly(list(ops.values()))


def check_graded_spectrum(Q, T):
    '''
        For each ``j``, ``Q (w_j (x) v) - x_j w_j (x) v`` lies in the part of
        the filtration generated by ``w_i (x) v``, ``i < j``. Returns the
        failing 0-based ``j``.

    '''
    bad = list()
    for j in range(T.n):
        t = T.shift(j)
        if sum(t) > T.cutoff:
            continue
        w = top_vector(T, j)
        diff = q_apply(Q, T, w) - w * x_hat(T.lam, j)
        if not filtration_V(T, j, t).contains(T.to_coords(diff, t)):
            bad.append(j)
    return bad


def q_trace_contents(n, cutoff, m):
    '''
        Contents where ``(Q^m)_ii`` stays inside the cutoff for every ``i``.
        For ``m >= 2`` an intermediate ``Q_ai`` with ``a < i`` lowers by the
        height of ``eps_a - eps_i``, at most ``n - 1``.

    '''
    bound = cutoff if m == 1 else cutoff - (n - 1)
    return contents_up_to(n, bound) if bound >= 0 else list()


def q_power_diagonal(Q, M, m, i, d):
    ''' ``(Q^m)_ii`` on the weight space of content ``d`` of ``M`` '''
    dim = M.key_dim(d)
    state = {i: (d, DomainMatrix.eye(dim, FIELD))}
    for step in range(m):
        new = dict()
        rows = [i] if step == m - 1 else range(Q.n)
        for a, (c, mat) in state.items():
            for a2 in rows:
                target, op = Q.entry_operator(M, a2, a, c)
                if op is None:
                    continue
                term = op * mat
                new[a2] = (target, new[a2][1] + term) if a2 in new else (target, term)
        state = new
    if i not in state:
        return DomainMatrix.zeros((dim, dim), FIELD)
    target, mat = state[i]
    if target != d:
        raise RuntimeError(f'(Q^{m})_{i + 1}{i + 1} does not preserve content {d}')
    return mat


def q_trace_power(m, Q, M, contents=None):
    '''
        ``Tr_q(Q^m) = sum_i q^{n+1-2i} (Q^m)_ii`` on ``M`` (1-based ``i``).
        Checks it is scalar on every probed weight space and that the
        scalars agree. Returns ``(scalar, probed contents)``.

    '''
    if m < 1:
        raise ValueError(f'Power must be positive, got m={m}')
    n = Q.n
    contents = q_trace_contents(n, M.cutoff, m) if contents is None else contents
    if not contents:
        raise CutoffExceeded(f'No weight space of cutoff {M.cutoff} admits Tr_q(Q^{m})')
    value = None
    for d in contents:
        dim = M.key_dim(d)
        if dim == 0:
            continue
        total = DomainMatrix.zeros((dim, dim), FIELD)
        for i in range(n):
            total = total + q_power_diagonal(Q, M, m, i, d) * q_pow(n - 1 - 2 * i)
        scalar = total.to_list()[0][0]
        if not equal(total, DomainMatrix.eye(dim, FIELD) * scalar):
            raise RuntimeError(f'Tr_q(Q^{m}) is not scalar on content {d}')
        if value is None:
            value = scalar
        elif value != scalar:
            raise RuntimeError(f'Tr_q(Q^{m}) takes different values on contents {contents[0]} and {d}: '
                               f'{format_scalar(value)} vs {format_scalar(scalar)}')
    return value, list(contents)


class DoubleTensorSpace(object):
    '''
        Weight spaces of ``C^n (x) C^n (x) M``: content ``t`` relative to
        ``lam + 2 eps_1``, components ``(a, b, d)`` with
        ``d = t - shift(a) - shift(b)``.

    '''

    def __init__(self, M):
        self.M = M
        self.n = M.n
        self.rs = root_system(self.n)

    def keys(self, t):
        keys = list()
        for a in range(self.n):
            for b in range(self.n):
                d = tuple(x - y - z for x, y, z in zip(t, self.rs.shift(a), self.rs.shift(b)))
                if all(c >= 0 for c in d) and self.M.key_dim(d) > 0:
                    keys.append((a, b, d))
        return keys

    def labels(self, t):
        return [f'w{a + 1} (x) w{b + 1} (x) {label}' for a, b, d in self.keys(t) for label in self.M.labels(d)]

    def s12(self, S, t):
        n = self.n
        keys = self.keys(t)
        index = {k: r for r, k in enumerate(keys)}
        dims = [self.M.key_dim(k[2]) for k in keys]
        s = S.to_list()
        blocks = dict()
        for col, (a, b, d) in enumerate(keys):
            for x in range(n):
                for y in range(n):
                    c = s[x * n + y][a * n + b]
                    if c:
                        blocks[(index[(x, y, d)], col)] = DomainMatrix.eye(dims[col], FIELD) * c
        return block_matrix(blocks, dims, dims)

    def q2(self, Q, t):
        keys = self.keys(t)
        index = {k: r for r, k in enumerate(keys)}
        dims = [self.M.key_dim(k[2]) for k in keys]
        blocks = dict()
        for col, (a, c, d) in enumerate(keys):
            for b in range(self.n):
                target, mat = Q.entry_operator(self.M, b, c, d)
                if mat is None:
                    continue
                blocks[(index[(a, b, target)], col)] = mat
        return block_matrix(blocks, dims, dims)


def re_check(Q, M, cutoff=None, S=None):
    '''
        ``S_12 Q_2 S_12 Q_2 = Q_2 S_12 Q_2 S_12`` on ``C^n (x) C^n (x) M`` for
        every space with ``|t| <= cutoff`` (default ``min(M.cutoff, 2)``).
        Returns ``(ok, witness)``; the witness names the first differing
        entry.

    '''
    cutoff = min(M.cutoff, 2) if cutoff is None else cutoff
    if cutoff > M.cutoff:
        raise CutoffExceeded(f'Reflection equation cutoff {cutoff} exceeds module cutoff {M.cutoff}')
    S = Q.S if S is None else S
    space = DoubleTensorSpace(M)
    probed = list()
    for t in contents_up_to(Q.n, cutoff):
        if not space.keys(t):
            continue
        s, q2 = space.s12(S, t), space.q2(Q, t)
        lhs = s * q2 * s * q2
        rhs = q2 * s * q2 * s
        probed.append(t)
        if not equal(lhs, rhs):
            labels = space.labels(t)
            lrows, rrows = lhs.to_list(), rhs.to_list()
            for r, (lrow, rrow) in enumerate(zip(lrows, rrows)):
                for c, (x, y) in enumerate(zip(lrow, rrow)):
                    if x != y:
                        return False, dict(space=list(t), row=labels[r], column=labels[c],
                                           lhs=format_scalar(x), rhs=format_scalar(y))
    return True, dict(spaces=[list(t) for t in probed])


def spectrum(Q, T):
    '''
        The predicted eigenvalues ``x_i = q^{2(lam_i - i + 1)}`` that are
        roots of the minimal polynomial of ``Q`` on ``T``, with the
        polynomial itself

    '''
    poly = min_poly(q_action(Q, T))
    roots = [i for i in range(T.n) if not poly(x_hat(T.lam, i))]
    return poly, roots

