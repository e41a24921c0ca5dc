import itertools

import numpy as np
import pytest

from qconj.algebra.rootdata import (RootSystem, BlockStructure, Permutation, is_admissible,
                                    enumerate_admissible, is_levi, shifted_action, apply_linear,
                                    x_hat_exponent, m_sigma, sigma_exponents, is_orbit_regular,
                                    is_levi_regular, regular_decompositions, kostant_partition_count)


def test_root_system():
    rs = RootSystem(3)
    assert np.all(rs.rho == np.array([2, 1, 0]))
    assert rs.simple_roots == [(0, 1), (1, 2)]
    assert rs.positive_roots == [(0, 1), (0, 2), (1, 2)]
    assert rs.content((1, 0, -1)) == (1, 1)
    assert rs.root_content((0, 2)) == (1, 1)
    assert rs.shift(0) == (0, 0)
    assert rs.shift(2) == (1, 1)

    with pytest.raises(ValueError):
        rs.content((1, 0, 0))

    with pytest.raises(ValueError):
        RootSystem(0)


@pytest.mark.parametrize('n,content,expected', [
    (2, (3,), 1),
    (3, (1, 0), 1),
    (3, (1, 1), 2),
    (3, (2, 2), 3),
    (4, (1, 1, 1), 4),
])
def test_kostant_partition_count(n, content, expected):
    assert kostant_partition_count(n, content) == expected


def test_kostant_restricted():
    # without alpha_1 only alpha_1 + alpha_2 and alpha_2 remain
    assert kostant_partition_count(3, (1, 1), roots=[(0, 2), (1, 2)]) == 1
    assert kostant_partition_count(3, (1, 0), roots=[(0, 2), (1, 2)]) == 0


def test_block_structure():
    blocks = BlockStructure((2, 1))
    assert blocks.n == 3
    assert blocks.block_starts == (0, 2)
    assert blocks.complement_starts == (1,)
    assert blocks.levi_simple_roots == [(0, 1)]
    assert blocks.levi_positive_roots == [(0, 1)]
    assert BlockStructure((3, 1)).levi_positive_roots == [(0, 1), (0, 2), (1, 2)]

    with pytest.raises(ValueError):
        BlockStructure((3,))

    with pytest.raises(ValueError):
        BlockStructure((2, 0))


def test_permutation():
    sigma = Permutation.from_one_based([2, 3, 1])
    assert sigma.images == (1, 2, 0)
    assert str(sigma) == '2,3,1'
    assert sigma.inverse() * sigma == Permutation.identity(3)
    assert sigma * sigma.inverse() == Permutation.identity(3)
    assert sigma.apply_root((0, 2)) == (1, 0)

    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


@pytest.mark.parametrize('mult,count,levi', [
    ((2, 1), 3, 2),
    ((1, 1, 1), 6, 6),
    ((2, 2), 6, 2),
    ((2, 2, 1), 30, None),
])
def test_enumerate_admissible(mult, count, levi):
    blocks = BlockStructure(mult)
    sigmas = enumerate_admissible(blocks)
    assert len(sigmas) == count
    assert sigmas == sorted(sigmas, key=lambda s: s.images)
    assert all(is_admissible(s, blocks) for s in sigmas)
    if levi is not None:
        assert sum(is_levi(s, blocks) for s in sigmas) == levi


def test_is_admissible():
    blocks = BlockStructure((2, 1))
    assert is_admissible(Permutation((0, 2, 1)), blocks)
    assert not is_admissible(Permutation((1, 0, 2)), blocks)
    assert is_levi(Permutation((1, 2, 0)), blocks)
    assert not is_levi(Permutation((0, 2, 1)), blocks)

    with pytest.raises(ValueError):
        is_admissible(Permutation((0, 1)), blocks)


def test_shifted_action():
    lam = (5, 5, 0)
    assert shifted_action(Permutation.identity(3), lam) == lam
    assert shifted_action(Permutation((1, 2, 0)), lam) == (-2, 6, 6)
    assert shifted_action(Permutation((0, 2, 1)), lam) == (5, -1, 6)
    assert apply_linear(Permutation((0, 2, 1)), lam) == (5, 0, 5)


@pytest.mark.parametrize('lam', [(5, 5, 0), (3, -1, 2), (0, 0, 0)])
def test_x_hat_permuted(lam):
    # x-hat_{sigma(s)}(sigma . lam) = x-hat_s(lam)
    for images in itertools.permutations(range(3)):
        sigma = Permutation(images)
        mu = shifted_action(sigma, lam)
        for s in range(3):
            assert x_hat_exponent(mu, sigma(s)) == x_hat_exponent(lam, s)


def test_sigma_exponents():
    blocks = BlockStructure((2, 1))
    lam = (5, 5, 0)
    assert m_sigma(Permutation.identity(3), blocks) == (0, 2)
    assert m_sigma(Permutation((1, 2, 0)), blocks) == (0, 1)
    assert sigma_exponents(lam, Permutation.identity(3), blocks) == [10, -4]
    assert sigma_exponents(lam, Permutation((1, 2, 0)), blocks) == [-4, 10]
    for sigma in enumerate_admissible(blocks):
        assert sorted(sigma_exponents(lam, sigma, blocks)) == [-4, 10]


def test_regularity():
    blocks = BlockStructure((2, 1))
    assert is_orbit_regular((5, 5, 0), blocks)
    assert not is_orbit_regular((0, 0, 2), blocks)
    assert is_levi_regular((0, 0, 2), blocks)
    assert not is_levi_regular((0, 1, 2), blocks)
    assert regular_decompositions(Permutation((0, 2, 1)), (5, 5, 0), blocks) == []
    assert regular_decompositions(Permutation((0, 2, 1)), (5, 5, 5), blocks) == [((0, 1), (0, 1), (1, 2))]


@pytest.mark.parametrize('n,lam', [(3, (5, 5, 0)), (4, (7, -2, 3, 3))])
def test_shifted_action_group_law(n, lam):
    perms = [Permutation(images) for images in itertools.permutations(range(n))]
    for sigma in perms:
        for tau in perms:
            assert shifted_action(sigma, shifted_action(tau, lam)) == shifted_action(sigma * tau, lam)


def compositions(n):
    ''' Block multiplicities with at least two blocks '''
    for k in range(2, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


@pytest.mark.parametrize('n', [2, 3, 4])
def test_regular_decompositions_exhaustive(n):
    split = 0
    for mult in compositions(n):
        blocks = BlockStructure(mult)
        lam = tuple(10 * blocks.block_of(i) for i in range(n))
        assert is_levi_regular(lam, blocks)
        for sigma in enumerate_admissible(blocks):
            assert regular_decompositions(sigma, lam, blocks) == [], (mult, sigma)
            split += sum(b - a - 1 for a, b in map(sigma.apply_root, blocks.levi_simple_roots))
    # non-simple sigma(alpha) occur, so some splittings were checked
    assert split > 0 or n == 2


def test_regular_decompositions_degenerate():
    blocks = BlockStructure((2, 2))
    sigma = Permutation.from_one_based([1, 3, 2, 4])
    assert regular_decompositions(sigma, (7, 7, 0, 0), blocks) == []
    assert regular_decompositions(sigma, (0, 0, 0, 0), blocks) == [((0, 1), (0, 1), (1, 2)),
                                                                   ((2, 3), (1, 2), (2, 3))]
