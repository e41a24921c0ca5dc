'''
    Verma modules ``M-hat_lam``, their quotients by singular vectors, and the
    dynamical root vectors ``f-check_alpha``.

    Weight spaces are indexed by content ``d`` (``lam - sum d_i alpha_i``)
    and stored up to total degree ``|d| <= cutoff``.

'''
import functools
import itertools
import logging
import warnings

import numpy as np
from sympy.polys.matrices import DomainMatrix

from ..algebra.scalars import FIELD, ONE, q_int
from ..algebra.rootdata import (root_system, kostant_partition_count, shifted_action,
                                is_admissible, is_levi_regular, BlockStructure)
from ..algebra.uq import UqElement
from ..util.linalg import Subspace, column, unit_column, hstack, entries
from .nilpotent import nilpotent_part, format_word, word_content
from .module import (GradedModule, ModuleVector, CutoffExceeded, NotSingularError,
                     singular_space, span_in_space)


def contents_up_to(n, cutoff):
    ''' All contents ``d`` in ``Z_{>=0}^{n-1}`` with ``|d| <= cutoff``, by degree '''
    result = [d for d in itertools.product(range(cutoff + 1), repeat=n - 1) if sum(d) <= cutoff]
    return sorted(result, key=lambda d: (sum(d), d))


def _add(d, i, step=1):
    return tuple(c + step if k == i else c for k, c in enumerate(d))


class HighestWeightModule(GradedModule):
    '''
        Common interface of ``VermaModule`` and ``QuotientModule``. Spaces
        and keys coincide: both are contents.

    '''

    def spaces(self):
        return contents_up_to(self.n, self.cutoff)

    def space_keys(self, s):
        return [tuple(s)] if all(c >= 0 for c in s) else []

    def space_of_key(self, key):
        return key

    def key_weight(self, d):
        return self.weight(d)

    def weight(self, d):
        ''' ``lam - sum_i d_i alpha_i`` in epsilon coordinates '''
        w = np.array(self.lam, dtype='i8')
        for i, c in enumerate(d):
            w[i] -= c
            w[i + 1] += c
        return w

    def content_of_weight(self, mu):
        return root_system(self.n).content(np.array(self.lam) - np.array(mu))

    def highest_vector(self):
        zero = (0,) * (self.n - 1)
        return ModuleVector(self, {zero: column([ONE])})

    def act_letter(self, letter, vec):
        kind, i = letter
        comps = dict()
        for d, col in vec.components.items():
            if kind == 'F':
                target, mat = _add(d, i), self.f_matrix(i, d)
            else:
                target, mat = _add(d, i, -1), self.e_matrix(i, d)
            if mat is None:
                continue
            image = mat * col
            comps[target] = comps[target] + image if target in comps else image
        return ModuleVector(self, comps)

    def character(self):
        ''' ``{content: dimension}`` for every stored weight space '''
        return {d: self.key_dim(d) for d in self.spaces()}

    def f_matrix(self, i, d):
        ''' ``F_i`` from content ``d`` to ``d + delta_i`` '''
        if ('F', i, d) not in self._matrices:
            self._matrices[('F', i, d)] = self._f_matrix(i, d)
        return self._matrices[('F', i, d)]

    def e_matrix(self, i, d):
        ''' ``E_i`` from content ``d`` to ``d - delta_i``; ``None`` if ``d_i = 0`` '''
        if ('E', i, d) not in self._matrices:
            self._matrices[('E', i, d)] = self._e_matrix(i, d)
        return self._matrices[('E', i, d)]

    def _check_f(self, d):
        if sum(d) + 1 > self.cutoff:
            raise CutoffExceeded(f'F applied to content {d} leaves the cutoff {self.cutoff}')


class VermaModule(HighestWeightModule):
    '''
        Verma module ``M-hat_lam = U_q(n-) v_lam`` truncated at ``cutoff``.

        The basis of the weight space of content ``d`` is the set of U_q(n-)
        basis words of that content applied to ``v_lam``. ``E_i`` acts by
        the recursion::

            E_i F_j w = F_j E_i w + delta_ij [(wt w, alpha_i)]_q w,   E_i v_lam = 0

        Parameters:
         - ``lam`` : ``tuple`` of ``int``, highest weight in epsilon coordinates
         - ``cutoff`` : ``int``, maximal total content ``|d|``

    '''
    class_version = '0.1.0'

    def __init__(self, lam, cutoff):
        self.lam = tuple(int(x) for x in lam)
        self.n = len(self.lam)
        if cutoff < 0:
            raise ValueError(f'Cutoff must be non-negative, got {cutoff}')
        self.cutoff = int(cutoff)
        self.nil = nilpotent_part(self.n)
        self.generators = tuple()
        self._e_words = dict()
        self._matrices = dict()

    def __repr__(self):
        return f'VermaModule({self.lam}, cutoff={self.cutoff})'

    def key_dim(self, d):
        if any(c < 0 for c in d):
            return 0
        return self.nil.dim(d)

    def labels(self, d):
        return [f'{format_word(w)} v' for w in self.nil.basis(d)]

    def _f_matrix(self, i, d):
        self._check_f(d)
        space = self.nil.space(_add(d, i))
        cols = [space.reduce({(i,) + w: ONE}) for w in self.nil.basis(d)]
        return hstack(cols, space.dim)

    def _e_matrix(self, i, d):
        if d[i] == 0:
            return None
        target = self.nil.space(_add(d, i, -1))
        cols = list()
        for w in self.nil.basis(d):
            image = self._e_word(i, w)
            cols.append(target.reduce(image) if image else DomainMatrix.zeros((target.dim, 1), FIELD))
        return hstack(cols, target.dim)

    def _e_word(self, i, word):
        ''' ``E_i`` applied to ``word v_lam`` as an unreduced ``{word: coeff}`` '''
        key = (i, word)
        if key not in self._e_words:
            result = dict()
            if word:
                j, rest = word[0], word[1:]
                for w, c in self._e_word(i, rest).items():
                    result[(j,) + w] = result.get((j,) + w, 0) + c
                if i == j:
                    wt = self.weight(word_content(rest, self.n))
                    c = q_int(int(wt[i] - wt[i + 1]))
                    if c:
                        result[rest] = result.get(rest, 0) + c
            self._e_words[key] = {w: c for w, c in result.items() if c}
        return self._e_words[key]

    def word_vector(self, word):
        ''' ``word v_lam`` as a module vector '''
        d = word_content(word, self.n)
        if sum(d) > self.cutoff:
            raise CutoffExceeded(f'Word {format_word(word)} is beyond the cutoff {self.cutoff}')
        return ModuleVector(self, {d: self.nil.reduce({word: ONE})})

    def lift(self, vec):
        return vec


class QuotientModule(HighestWeightModule):
    '''
        Quotient of a Verma module by the submodule generated by singular
        weight vectors. Since the generators are singular, the submodule is
        the span of U_q(n-) basis words applied to them. Each quotient
        weight space keeps the ambient coordinates that are not pivots of the
        submodule's echelon form; ``project`` is the quotient map.

        Parameters:
         - ``ambient`` : ``VermaModule``
         - ``generators`` : ``list`` of ``ModuleVector``, singular weight vectors of ``ambient``

    '''
    class_version = '0.1.0'

    def __init__(self, ambient, generators):
        if not isinstance(ambient, VermaModule):
            raise TypeError(f'Quotients are taken of Verma modules, got {type(ambient).__name__}')
        self.ambient = ambient
        self.lam = ambient.lam
        self.n = ambient.n
        self.cutoff = ambient.cutoff
        self.nil = ambient.nil
        self.generators = tuple(generators)
        for g in self.generators:
            if len(g.components) != 1:
                raise NotSingularError(f'Generator {g} is not a weight vector')
            if not ambient.is_singular(g):
                raise NotSingularError(f'Generator {g} is not singular')
        self.submodule = dict()
        self.free = dict()
        self._matrices = dict()
        for d in self.spaces():
            vectors = list()
            for g in self.generators:
                (c,) = g.components
                rest = tuple(a - b for a, b in zip(d, c))
                for w in self.nil.basis(rest):
                    vectors.append(ambient.to_coords(ambient.apply_word(w, g), d))
            self.submodule[d] = Subspace(ambient.key_dim(d), vectors)
            self.free[d] = self.submodule[d].complement_indices()
        logging.info(f'Quotient of {ambient!r} by {len(self.generators)} generators: '
                     f'{sum(len(f) for f in self.free.values())} basis vectors')

    def __repr__(self):
        return f'QuotientModule({self.ambient!r}, {len(self.generators)} generators)'

    def key_dim(self, d):
        if any(c < 0 for c in d):
            return 0
        if d not in self.free:
            raise CutoffExceeded(f'Content {d} is beyond the cutoff {self.cutoff}')
        return len(self.free[d])

    def labels(self, d):
        ambient = self.ambient.labels(d)
        return [ambient[i] for i in self.free[d]]

    def project_column(self, d, col):
        reduced = entries(self.submodule[d].reduce(col))
        return column([reduced[i] for i in self.free[d]])

    def lift_column(self, d, col):
        values = [FIELD.zero] * self.ambient.key_dim(d)
        for i, c in zip(self.free[d], entries(col)):
            values[i] = c
        return column(values)

    def project(self, vec):
        ''' The quotient map applied to a vector of the ambient Verma module '''
        return ModuleVector(self, {d: self.project_column(d, col) for d, col in vec.components.items()})

    def lift(self, vec):
        return ModuleVector(self.ambient, {d: self.lift_column(d, col) for d, col in vec.components.items()})

    def _induced(self, amb_mat, d, target):
        cols = [self.project_column(target, amb_mat * self.lift_column(d, unit_column(self.key_dim(d), k)))
                for k in range(self.key_dim(d))]
        return hstack(cols, self.key_dim(target))

    def _f_matrix(self, i, d):
        self._check_f(d)
        return self._induced(self.ambient.f_matrix(i, d), d, _add(d, i))

    def _e_matrix(self, i, d):
        amb = self.ambient.e_matrix(i, d)
        if amb is None:
            return None
        return self._induced(amb, d, _add(d, i, -1))

    def check_submodule_closed(self, samples=3, seed=0):
        '''
            Cross-check of the F-span shortcut: ``E_i`` maps the submodule
            at a few seeded random contents into the submodule. Returns the
            list of offending ``(content, i)``.

        '''
        rng = np.random.default_rng(seed)
        candidates = [d for d in self.spaces() if self.submodule[d].rank > 0]
        if not candidates:
            return list()
        picked = [candidates[i] for i in rng.choice(len(candidates), min(samples, len(candidates)), replace=False)]
        bad = list()
        for d in sorted(picked):
            for i in range(self.n - 1):
                amb = self.ambient.e_matrix(i, d)
                if amb is None:
                    continue
                target = self.submodule[_add(d, i, -1)]
                if not all(target.contains(amb * v) for v in self.submodule[d].basis()):
                    bad.append((d, i))
        return bad


def build_verma(lam, cutoff):
    return VermaModule(lam, cutoff)


def quotient_by_singulars(module, generators):
    ''' ``module`` itself for an empty generator list '''
    generators = list(generators)
    if not generators:
        return module
    return QuotientModule(module, generators)


# --- dynamical root vectors

def _root_pair(alpha, n):
    i, j = (int(a) for a in alpha)
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f'Invalid root eps_{i + 1} - eps_{j + 1} for n={n}')
    return i, j


@functools.lru_cache(maxsize=None)
def dyn_root(alpha, n):
    '''
        Symbolic dynamical root vector for ``alpha = eps_i - eps_j``
        (0-based pair). Simple roots give ``F_i``; otherwise, with
        ``beta = alpha - alpha_i``::

            f_alpha = F_i f_beta [h_beta + (rho, beta)]_q - f_beta F_i [h_beta + (rho, beta) - 1]_q

        The zero root gives ``1`` and negative roots give ``0``.

    '''
    i, j = _root_pair(alpha, n)
    if i == j:
        return UqElement.one(n)
    if i > j:
        return UqElement.zero(n)
    if j == i + 1:
        return UqElement.f(n, i)
    beta = (i + 1, j)
    beta_vec = root_system(n).root_vector(beta)
    height = j - i - 1
    f_beta = dyn_root(beta, n)
    f_i = UqElement.f(n, i)
    return f_i * f_beta * UqElement.q_bracket(n, beta_vec, height) \
        - f_beta * f_i * UqElement.q_bracket(n, beta_vec, height - 1)


def dyn_root_at(alpha, lam):
    ''' ``f-check_alpha(lam)`` in U_q(n-): Cartan part evaluated at ``lam`` '''
    return dyn_root(tuple(alpha), len(lam)).specialize(tuple(lam))


def principal_monomial(i, j):
    ''' ``psi_ij = F_i F_{i+1} ... F_{j-1}`` as a word (empty for ``i == j``) '''
    return tuple(range(i, j))


def check_basic_dyn(alpha, m, module):
    '''
        Checks ``E_j f_alpha^m v = delta_ji [m]_q [(lam + rho, alpha) - m]_q f_beta f_alpha^{m-1} v``
        for all simple ``alpha_j`` in ``module`` (a ``VermaModule``), with
        ``alpha = eps_i - eps_k`` and ``beta = alpha - alpha_i``. Returns
        ``(ok, witnesses)`` with one witness dict per failing ``j``.

    '''
    n = module.n
    i, k = _root_pair(alpha, n)
    if not i < k:
        raise ValueError(f'{alpha} is not a positive root')
    if m * (k - i) > module.cutoff:
        raise CutoffExceeded(f'f_alpha^{m} needs cutoff {m * (k - i)}, module has {module.cutoff}')
    lam = module.lam
    rho = root_system(n).rho
    pairing = int(lam[i] + rho[i] - lam[k] - rho[k])
    f_alpha = dyn_root((i, k), n)
    v = module.highest_vector()
    powers = [v]
    for _ in range(m):
        powers.append(module.apply(f_alpha, powers[-1]))
    witnesses = list()
    for j in range(n - 1):
        lhs = module.act_letter(('E', j), powers[m])
        if j == i:
            rhs = module.apply(dyn_root((i + 1, k), n), powers[m - 1]) * (q_int(m) * q_int(pairing - m))
        else:
            rhs = ModuleVector(module)
        if lhs != rhs:
            witnesses.append(dict(j=j + 1, lhs=str(lhs), rhs=str(rhs)))
    return not witnesses, witnesses


def build_M_sigma(lam, sigma, blocks, cutoff):
    '''
        ``M_{sigma.lam}``: the Verma module of highest weight ``sigma.lam``
        modulo the submodule generated by ``f-check_{sigma(alpha)} v`` for
        ``alpha`` in ``Pi+_l``. Generators beyond the cutoff do not affect
        the stored weight spaces and are skipped with a warning.

        Returns ``(module, generators)``.

    '''
    blocks = blocks if isinstance(blocks, BlockStructure) else BlockStructure(blocks)
    if not is_admissible(sigma, blocks):
        raise ValueError(f'Permutation {sigma} is not admissible for blocks {blocks.mult}')
    if not is_levi_regular(lam, blocks):
        raise ValueError(f'Weight {tuple(lam)} is not block-constant with distinct block values')
    mu = shifted_action(sigma, lam)
    verma = VermaModule(mu, cutoff)
    generators = list()
    for alpha in blocks.levi_simple_roots:
        root = sigma.apply_root(alpha)
        if root[1] - root[0] > cutoff:
            warnings.warn(f'Generator for root {root} lies beyond cutoff {cutoff}')
            continue
        g = verma.apply(dyn_root(root, verma.n), verma.highest_vector())
        if g.is_zero():
            raise NotSingularError(f'Generator for root {root} vanishes')
        (d,) = g.components
        if not span_in_space(verma, singular_space(verma, d), d).contains(verma.to_coords(g, d)):
            raise NotSingularError(f'Generator for root {root} is not in the singular space at content {d}')
        generators.append(g)
    return quotient_by_singulars(verma, generators), generators


def parabolic_character(n, cutoff, excluded_roots):
    ''' Partition counts avoiding ``excluded_roots``, per content up to ``cutoff`` '''
    roots = [r for r in root_system(n).positive_roots if r not in set(excluded_roots)]
    return {d: kostant_partition_count(n, d, roots) for d in contents_up_to(n, cutoff)}
