'''
    Weight spaces of the lower nilpotent subalgebra U_q(n-) of U_q(gl(n)).

    A weight space is indexed by its content ``d`` (multiplicity of each
    simple root). It is spanned by all words in ``F_1..F_{n-1}`` of that
    content modulo every two-sided insertion ``w1 r w2`` of a q-Serre or
    commutation relator ``r``. Words are tuples of 0-based letter indices;
    ``(i_1, ..., i_r)`` stands for ``F_{i_1} ... F_{i_r}``.

'''
import functools
import logging

from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import multiset_permutations

from ..algebra.scalars import FIELD, ZERO, ONE, q_int
from ..algebra.rootdata import kostant_partition_count
from ..util.linalg import column


def word_content(word, n):
    content = [0] * (n - 1)
    for i in word:
        content[i] += 1
    return tuple(content)


def format_word(word):
    return ' '.join(f'F{i + 1}' for i in word) if word else '1'


class WordSpace(object):
    '''
        One weight space of U_q(n-): the spanning words, the basis words
        (non-pivot columns of the reduced relator matrix) and the reduction
        map from words to basis coordinates.

    '''

    def __init__(self, content, words, relator_rows):
        self.content = content
        self.words = words
        self.index = {w: c for c, w in enumerate(words)}
        if relator_rows:
            mat = DomainMatrix(relator_rows, (len(relator_rows), len(words)), FIELD)
            rref, pivots = mat.rref()
            rref = rref.to_list()
        else:
            rref, pivots = list(), tuple()
        pivots = tuple(pivots)
        free = [c for c in range(len(words)) if c not in pivots]
        self.basis = [words[c] for c in free]
        position = {c: p for p, c in enumerate(free)}

        # reduction matrix: basis coordinates of every spanning word
        rows = [[ZERO] * len(words) for _ in free]
        for c in free:
            rows[position[c]][c] = ONE
        for r, p in enumerate(pivots):
            for c in free:
                if rref[r][c]:
                    rows[position[c]][p] = -rref[r][c]
        self.reduction = DomainMatrix(rows, (len(free), len(words)), FIELD).to_sparse() if free \
            else DomainMatrix.zeros((0, len(words)), FIELD)

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, combination):
        ''' Basis coordinates of a ``{word: coeff}`` combination '''
        values = [ZERO] * len(self.words)
        for word, c in combination.items():
            values[self.index[word]] += c
        return self.reduction * column(values) if self.words else DomainMatrix.zeros((0, 1), FIELD)


class NilpotentPart(object):
    '''
        Lazily built table of the weight spaces of U_q(n-) for rank ``n``.

        Example::

            >>> nil = nilpotent_part(3)
            >>> nil.dim((1, 1))
            2

    '''

    def __init__(self, n):
        self.n = n
        self._spaces = dict()
        self.relators = self._relators()

    def _relators(self):
        relators = list()
        two = q_int(2)
        for i in range(self.n - 1):
            for j in range(self.n - 1):
                if abs(i - j) == 1:
                    relators.append({(i, i, j): ONE, (i, j, i): -two, (j, i, i): ONE})
                elif j > i + 1:
                    relators.append({(i, j): ONE, (j, i): -ONE})
        return [(word_content(next(iter(r)), self.n), r) for r in relators]

    def words(self, content):
        letters = [i for i, c in enumerate(content) for _ in range(c)]
        return [tuple(w) for w in multiset_permutations(letters)] if letters else [()]

    def space(self, content):
        content = tuple(int(c) for c in content)
        if content not in self._spaces:
            if any(c < 0 for c in content):
                raise ValueError(f'Negative content {content}')
            words = self.words(content)
            index = {w: c for c, w in enumerate(words)}
            rows = list()
            for rel_content, rel in self.relators:
                rest = tuple(c - r for c, r in zip(content, rel_content))
                if any(c < 0 for c in rest):
                    continue
                for u in self.words(rest):
                    for p in range(len(u) + 1):
                        row = [ZERO] * len(words)
                        for w, c in rel.items():
                            row[index[u[:p] + w + u[p:]]] += c
                        rows.append(row)
            self._spaces[content] = WordSpace(content, words, rows)
            logging.debug(f'U_q(n-) weight space {content}: {len(words)} words, '
                          f'{len(rows)} relators, dimension {self._spaces[content].dim}')
        return self._spaces[content]

    def dim(self, content):
        if any(c < 0 for c in content):
            return 0
        return self.space(content).dim

    def basis(self, content):
        if any(c < 0 for c in content):
            return list()
        return self.space(content).basis

    def reduce(self, combination):
        ''' Coordinates of a ``{word: coeff}`` combination of words of equal content '''
        if not combination:
            raise ValueError('Cannot infer the content of an empty combination')
        content = word_content(next(iter(combination)), self.n)
        return self.space(content).reduce(combination)

    def partition_count(self, content):
        return kostant_partition_count(self.n, content)


@functools.lru_cache(maxsize=None)
def nilpotent_part(n):
    return NilpotentPart(n)
