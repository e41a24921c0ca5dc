import numpy as np
import pytest
from sympy.polys.matrices import DomainMatrix

from qconj.algebra.scalars import FIELD, ZERO, ONE, q_pow, q_int
from qconj.algebra.uq import UqElement, coproduct, antipode, counit, natural_rep
from qconj.util.linalg import entry, equal, kron


def test_cartan_commutation():
    n = 3
    mu = (2, -1, 0)
    k = UqElement.k(n, mu)
    # (mu, alpha_1) = 3, (mu, alpha_2) = -1
    assert k * UqElement.e(n, 0) == UqElement.e(n, 0) * k * q_pow(3)
    assert k * UqElement.f(n, 1) == UqElement.f(n, 1) * k * q_pow(1)
    assert k * UqElement.k(n, (1, 1, 1)) == UqElement.k(n, (3, 0, 1))


def test_from_sequence_gather():
    n = 3
    letters = [('K', (1, 0, 0)), ('F', 0), ('K', (0, 2, 0)), ('E', 1), ('F', 1), ('K', (0, 0, -1))]
    left = UqElement.from_sequence(n, letters, coeff=q_int(2))
    right = UqElement.from_sequence(n, letters, coeff=q_int(2), gather='right')
    assert left == right
    assert len(left.monomials()) == 1


def test_weight():
    n = 3
    x = UqElement.f(n, 0) * UqElement.f(n, 1) - UqElement.f(n, 1) * UqElement.f(n, 0)
    assert list(x.weight()) == [-1, 0, 1]
    assert UqElement.zero(n).weight() is None

    with pytest.raises(ValueError):
        (UqElement.f(n, 0) + UqElement.e(n, 0)).weight()

    with pytest.raises(ValueError):
        UqElement.f(n, 0) + UqElement.f(2, 0)


def test_natural_rep():
    n = 3
    assert entry(natural_rep(UqElement.e(n, 0)), 0, 1) == ONE
    assert entry(natural_rep(UqElement.f(n, 1)), 2, 1) == ONE
    assert equal(natural_rep(UqElement.k(n, (1, 0, -2))),
                 DomainMatrix.diag([q_pow(1), ONE, q_pow(-2)], FIELD, (n, n)))

    x = UqElement.e(n, 0) * UqElement.k(n, (1, 2, 0))
    y = UqElement.f(n, 0)
    assert equal(natural_rep(x * y), natural_rep(x) * natural_rep(y))


def test_natural_rep_commutator(rank):
    for i in range(rank - 1):
        e, f = UqElement.e(rank, i), UqElement.f(rank, i)
        alpha = [1 if k == i else -1 if k == i + 1 else 0 for k in range(rank)]
        bracket = UqElement.q_bracket(rank, alpha, 0)
        assert equal(natural_rep(e * f - f * e), natural_rep(bracket))


def test_q_bracket_specialize():
    n = 3
    beta = (0, 1, -1)
    lam = (4, 2, 0)
    for shift in (-1, 0, 3):
        specialized = UqElement.q_bracket(n, beta, shift).specialize(lam)
        assert specialized == UqElement.scalar(n, q_int(2 + shift))


def test_counit():
    n = 2
    assert counit(UqElement.k(n, (3, 1))) == ONE
    assert counit(UqElement.e(n, 0)) == ZERO
    assert counit(UqElement.one(n) * q_int(3) + UqElement.f(n, 0)) == q_int(3)


@pytest.mark.parametrize('letter', [('E', 0), ('F', 0), ('E', 1), ('F', 1), ('K', (1, -1, 2))])
def test_antipode_axiom(letter):
    # m (S (x) id) Delta(x) = epsilon(x) 1
    n = 3
    x = UqElement.letter(n, letter)
    total = UqElement.zero(n)
    for c, x1, x2 in coproduct(x).pairs():
        total = total + antipode(x1) * x2 * c
    assert total == UqElement.scalar(n, counit(x))


def test_coproduct_multiplicative():
    n = 2
    x, y = UqElement.e(n, 0), UqElement.f(n, 0)
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


@pytest.mark.parametrize('letters', [
    [('E', 0)],
    [('F', 1)],
    [('K', (2, 0, -1))],
    [('E', 0), ('F', 1), ('K', (1, 1, 0))],
    [('F', 0), ('F', 1), ('E', 1), ('E', 0)],
])
def test_antipode_squared(letters):
    # gamma^2(x) = K_-2rho x K_2rho
    n = 3
    two_rho = [2 * (n - 1 - i) for i in range(n)]
    x = UqElement.from_sequence(n, letters)
    conjugated = UqElement.k(n, [-r for r in two_rho]) * x * UqElement.k(n, two_rho)
    assert antipode(antipode(x)) == conjugated


def natural_pair(t):
    ''' (pi (x) pi) of a tensor element '''
    n = t.n
    total = DomainMatrix.zeros((n * n, n * n), FIELD).to_dense()
    for c, x1, x2 in t.pairs():
        total = total + kron(natural_rep(x1), natural_rep(x2)) * c
    return total


def test_coproduct_natural_multiplicative():
    n = 3
    letters = [('E', 0), ('E', 1), ('F', 0), ('F', 1), ('K', (1, 0, -1))]
    rng = np.random.default_rng(7)
    for _ in range(12):
        length = int(rng.integers(2, 5))
        word = [letters[i] for i in rng.integers(0, len(letters), size=length)]
        split = int(rng.integers(1, length))
        x = UqElement.from_sequence(n, word[:split])
        y = UqElement.from_sequence(n, word[split:])
        assert coproduct(x * y) == coproduct(x) * coproduct(y)
        assert equal(natural_pair(coproduct(x * y)), natural_pair(coproduct(x)) * natural_pair(coproduct(y)))
