'''
    Common machinery for weight-graded modules truncated at a degree
    cutoff: vectors, action of ``UqElement`` s, operator matrices on weight
    spaces and the singular-vector oracle.

    A module is organized in *spaces* (weight spaces, labelled by their
    content relative to the top weight) which are direct sums of
    *components* (labelled by keys). Vectors store one coordinate column per
    component.

'''
from sympy.polys.matrices import DomainMatrix

from ..algebra.scalars import FIELD, q_pow, format_scalar
from ..algebra.rootdata import root_system
from ..algebra.uq import UqElement, letter_weight
from ..util.linalg import Subspace, hstack, vstack, kernel, unit_column, entries


class CutoffExceeded(RuntimeError):
    ''' An operation would leave the stored weight spaces '''
    pass


class NotSingularError(ValueError):
    ''' A vector expected to be singular is not annihilated by all ``E_i`` '''
    pass


class ModuleVector(object):
    ''' Vector of a graded module, ``{key: coordinate column}`` '''

    def __init__(self, module, components=None):
        self.module = module
        self.components = dict()
        for key, col in (components or dict()).items():
            if not col.is_zero_matrix:
                self.components[key] = col

    def __add__(self, other):
        comps = dict(self.components)
        for key, col in other.components.items():
            comps[key] = comps[key] + col if key in comps else col
        return ModuleVector(self.module, comps)

    def __neg__(self):
        return ModuleVector(self.module, {k: -c for k, c in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return ModuleVector(self.module, {k: col * c for k, col in self.components.items()}) if c \
            else ModuleVector(self.module)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and (self - other).is_zero()

    def is_zero(self):
        return not self.components

    def keys(self):
        return sorted(self.components)

    def spaces(self):
        return sorted({self.module.space_of_key(k) for k in self.components})

    def to_list(self):
        ''' ``(label, scalar)`` pairs in the serialization format '''
        pairs = list()
        for key in self.keys():
            labels = self.module.labels(key)
            for label, c in zip(labels, entries(self.components[key])):
                if c:
                    pairs.append((label, format_scalar(c)))
        return pairs

    def __str__(self):
        pairs = self.to_list()
        return ' + '.join(f'({c}) {label}' for label, c in pairs) if pairs else '0'


class GradedModule(object):
    '''
        Base class. Subclasses provide ``n``, ``cutoff``, ``spaces()``,
        ``space_keys(s)``, ``key_dim(key)``, ``key_weight(key)``,
        ``space_of_key(key)``, ``labels(key)`` and ``act_letter``.

    '''

    def space_dim(self, s):
        return sum(self.key_dim(k) for k in self.space_keys(s))

    def in_range(self, s):
        return all(c >= 0 for c in s) and sum(s) <= self.cutoff

    def act_cartan(self, mu, vec):
        comps = dict()
        for key, col in vec.components.items():
            e = root_system(self.n).pairing(mu, self.key_weight(key))
            comps[key] = col * q_pow(e)
        return ModuleVector(self, comps)

    def apply(self, g, vec):
        ''' Action of a ``UqElement`` on a vector, linear in both '''
        result = ModuleVector(self)
        for (word, mu), c in g.monomials():
            v = self.act_cartan(mu, vec) if any(mu) else vec
            for letter in reversed(word):
                if v.is_zero():
                    break
                v = self.act_letter(letter, v)
            result = result + v * c
        return result

    def apply_word(self, word, vec):
        ''' ``F_{i_1} ... F_{i_r}`` applied to ``vec`` (rightmost first) '''
        for i in reversed(word):
            vec = self.act_letter(('F', i), vec)
        return vec

    def to_coords(self, vec, s):
        cols = list()
        for key in self.space_keys(s):
            dim = self.key_dim(key)
            cols.append(vec.components.get(key, DomainMatrix.zeros((dim, 1), FIELD)))
        extra = [k for k in vec.components if self.space_of_key(k) != s]
        if extra:
            raise ValueError(f'Vector has components {extra} outside space {s}')
        return vstack(cols, 1)

    def from_coords(self, col, s):
        comps = dict()
        offset = 0
        for key in self.space_keys(s):
            dim = self.key_dim(key)
            comps[key] = col[offset:offset + dim, :]
            offset += dim
        return ModuleVector(self, comps)

    def basis_vectors(self, s):
        dim = self.space_dim(s)
        return [self.from_coords(unit_column(dim, i), s) for i in range(dim)]

    def target_space(self, s, weight_shift):
        ''' Space reached from ``s`` by an operator of weight ``weight_shift`` '''
        shift = root_system(self.n).content(weight_shift)
        return tuple(a - b for a, b in zip(s, shift))

    def operator_matrix(self, g, s, weight=None):
        '''
            Matrix of a homogeneous element ``g`` from space ``s`` to its
            image space. Returns ``(target, matrix)``; ``matrix`` is ``None``
            if the target lies below the top weight (the action is zero).

        '''
        weight = g.weight() if weight is None else weight
        target = self.target_space(s, weight)
        if any(c < 0 for c in target) or self.space_dim(target) == 0:
            return target, None
        if sum(target) > self.cutoff:
            raise CutoffExceeded(f'Space {target} is beyond the cutoff {self.cutoff}')
        cols = [self.to_coords(self.apply(g, v), target) for v in self.basis_vectors(s)]
        return target, hstack(cols, self.space_dim(target))

    def letter_matrix(self, letter, s):
        return self.operator_matrix(UqElement.letter(self.n, letter), s,
                                    weight=letter_weight(letter, self.n))

    def e_stack(self, s):
        ''' Stacked matrices of ``E_1..E_{n-1}`` on space ``s`` '''
        blocks = list()
        for i in range(self.n - 1):
            _, mat = self.letter_matrix(('E', i), s)
            if mat is not None:
                blocks.append(mat)
        return vstack(blocks, self.space_dim(s))

    def is_singular(self, vec):
        for i in range(self.n - 1):
            if not self.act_letter(('E', i), vec).is_zero():
                return False
        return True


def singular_space(module, s):
    '''
        Basis of the singular vectors in space ``s``: the exact kernel of
        the stacked ``E_i`` matrices

    '''
    dim = module.space_dim(s)
    if dim == 0:
        return list()
    return [module.from_coords(col, s) for col in kernel(module.e_stack(s))]


def span_in_space(module, vectors, s):
    return Subspace(module.space_dim(s), [module.to_coords(v, s) for v in vectors])

