'''
    The tensor product ``C^n (x) M`` of the natural representation with a
    highest-weight module, the singular vectors ``u-hat_l`` and the two
    filtrations ``V`` (generated by ``w_i (x) v``) and ``W`` (generated by
    ``u-hat_i``).

    Spaces of ``C^n (x) M`` are labelled by content ``t`` relative to the top
    weight ``lam + eps_1``; the component ``w_a (x) M_d`` sits in space
    ``t = d + shift(a)`` with ``shift(a)`` the content of ``eps_1 - eps_a``.
    Indices ``a``, ``l`` are 0-based; filtration levels count generators, so
    ``filtration_V(T, j, t)`` uses ``w_0..w_{j-1}``.

'''
import itertools

import numpy as np

from ..algebra.scalars import ONE, q_pow, q_int
from ..algebra.rootdata import root_system
from ..algebra.uq import UqElement, coproduct, natural_rep
from ..util.linalg import Subspace, entry
from .module import GradedModule, ModuleVector, CutoffExceeded
from .verma import contents_up_to, dyn_root, principal_monomial


class TensorModule(GradedModule):
    '''
        ``C^n (x) base`` with the action through the coproduct
        ``Delta(E) = E (x) 1 + K_alpha (x) E``,
        ``Delta(F) = 1 (x) F + F (x) K_-alpha``.

        Parameters:
         - ``base`` : ``HighestWeightModule``

    '''
    class_version = '0.1.0'

    def __init__(self, base):
        self.base = base
        self.n = base.n
        self.cutoff = base.cutoff
        self.lam = base.lam
        self.rs = root_system(self.n)
        self._delta = dict()

    def __repr__(self):
        return f'TensorModule({self.base!r})'

    def shift(self, a):
        return self.rs.shift(a)

    def spaces(self):
        return contents_up_to(self.n, self.cutoff)

    def space_keys(self, t):
        keys = list()
        for a in range(self.n):
            d = tuple(x - y for x, y in zip(t, self.shift(a)))
            if all(c >= 0 for c in d):
                keys.append((a, d))
        return keys

    def key_dim(self, key):
        return self.base.key_dim(key[1])

    def key_weight(self, key):
        a, d = key
        return self.rs.eps(a) + self.base.weight(d)

    def space_of_key(self, key):
        a, d = key
        return tuple(x + y for x, y in zip(d, self.shift(a)))

    def labels(self, key):
        a, d = key
        return [f'w{a + 1} (x) {label}' for label in self.base.labels(d)]

    def content_of_weight(self, mu):
        top = np.array(self.lam, dtype='i8') + self.rs.eps(0)
        return self.rs.content(top - np.array(mu, dtype='i8'))

    def pure(self, a, vec):
        ''' ``w_a (x) vec`` for a vector ``vec`` of the base module '''
        return ModuleVector(self, {(a, d): col for d, col in vec.components.items()})

    def component(self, vec, a):
        ''' The base-module vector multiplying ``w_a`` '''
        return ModuleVector(self.base, {d: col for (b, d), col in vec.components.items() if b == a})

    def _generator_delta(self, letter):
        if letter not in self._delta:
            terms = list()
            for c, x1, x2 in coproduct(UqElement.letter(self.n, letter)).pairs():
                pi = natural_rep(x1)
                nonzero = [(b, a, entry(pi, b, a)) for b in range(self.n) for a in range(self.n)
                           if entry(pi, b, a)]
                terms.append((c, nonzero, x2))
            self._delta[letter] = terms
        return self._delta[letter]

    def act_letter(self, letter, vec):
        result = ModuleVector(self)
        for c, nonzero, x2 in self._generator_delta(letter):
            for a in range(self.n):
                targets = [(b, p) for b, a_, p in nonzero if a_ == a]
                if not targets:
                    continue
                u = self.component(vec, a)
                if u.is_zero():
                    continue
                image = self.base.apply(x2, u)
                for b, p in targets:
                    result = result + self.pure(b, image) * (c * p)
        return result

    def project(self, vec, target):
        '''
            ``(id (x) pi)(vec)`` into ``target``, a ``TensorModule`` over a
            quotient of this module's base

        '''
        if target.base is self.base:
            return ModuleVector(target, vec.components)
        return ModuleVector(target, {(a, d): target.base.project_column(d, col)
                                     for (a, d), col in vec.components.items()})


def build_tensor(base):
    return TensorModule(base)


def u_hat(l, T):
    '''
        Singular vector of weight ``lam + eps_l`` in ``C^n (x) M-hat_lam``::

            u_l = sum_{i <= l} (-q)^i prod_{j < i} [lam_j - lam_l + l - j - 1]_q  w_i (x) f_{eps_i - eps_l} v

        (0-based indices)

    '''
    n = T.n
    if not 0 <= l < n:
        raise ValueError(f'Index {l} out of range for n={n}')
    if l > T.cutoff:
        raise CutoffExceeded(f'u-hat_{l + 1} needs cutoff {l}, module has {T.cutoff}')
    lam = T.lam
    v = T.base.highest_vector()
    result = ModuleVector(T)
    for i in range(l + 1):
        coeff = (-q_pow(1)) ** i
        for j in range(i):
            coeff = coeff * q_int(lam[j] - lam[l] + l - j - 1)
        if not coeff:
            continue
        result = result + T.pure(i, T.base.apply(dyn_root((i, l), n), v)) * coeff
    return result


def c_hat(l, lam):
    ''' ``prod_{j < l} [lam_j - lam_l + l - j]_q`` (0-based) '''
    c = ONE
    for j in range(l):
        c = c * q_int(lam[j] - lam[l] + l - j)
    return c


def top_vector(T, i):
    ''' ``w_i (x) v`` '''
    return T.pure(i, T.base.highest_vector())


def generated_span(T, generators, t):
    vectors = list()
    for g in generators:
        if g.is_zero():
            continue
        (s,) = g.spaces()
        rest = tuple(a - b for a, b in zip(t, s))
        for w in T.base.nil.basis(rest):
            vectors.append(T.to_coords(T.apply_word(w, g), t))
    return Subspace(T.space_dim(t), vectors)


def filtration_V(T, j, t):
    ''' Span in space ``t`` of F-words applied to ``w_i (x) v``, ``i < j`` '''
    return generated_span(T, [top_vector(T, i) for i in range(j)], t)


def filtration_W(T, l, t):
    ''' Span in space ``t`` of F-words applied to ``u-hat_i``, ``i < l`` '''
    return generated_span(T, [u_hat(i, T) for i in range(l)], t)


def principal_relation(T, l, j):
    '''
        For ``l <= j`` (0-based), returns ``(lhs, rhs, t)`` where
        ``lhs = w_l (x) psi_lj v`` and
        ``rhs = (-1)^{j-l} q^{lam_j - lam_l + l - j + 1 - delta_lj} w_j (x) v``;
        they agree modulo ``filtration_V(T, j, t)``.

    '''
    lam = T.lam
    v = T.base.highest_vector()
    lhs = T.pure(l, T.base.apply_word(principal_monomial(l, j), v))
    exponent = lam[j] - lam[l] + l - j + 1 - (1 if l == j else 0)
    rhs = top_vector(T, j) * ((-1) ** (j - l) * q_pow(exponent))
    return lhs, rhs, T.shift(j)


def permuted_monomials(l, j):
    ''' Rearrangements of ``psi_lj`` other than ``psi_lj`` itself '''
    word = principal_monomial(l, j)
    return [w for w in sorted(set(itertools.permutations(word))) if w != word]
