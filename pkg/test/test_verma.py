import pytest

from qconj.algebra.scalars import q_int
from qconj.algebra.uq import UqElement
from qconj.algebra.rootdata import root_system, kostant_partition_count, Permutation
from qconj.rep.module import CutoffExceeded, NotSingularError, ModuleVector, singular_space
from qconj.rep.nilpotent import nilpotent_part
from qconj.rep.tensor import TensorModule, u_hat
from qconj.rep.verma import (VermaModule, QuotientModule, contents_up_to, quotient_by_singulars,
                             dyn_root, dyn_root_at, principal_monomial, check_basic_dyn,
                             build_M_sigma, parabolic_character)


@pytest.mark.parametrize('n,cutoff', [
    (2, 5),
    (3, 4),
    pytest.param(4, 4, marks=pytest.mark.slow),
])
def test_nilpotent_dims(n, cutoff):
    nil = nilpotent_part(n)
    for d in contents_up_to(n, cutoff):
        assert nil.dim(d) == kostant_partition_count(n, d)


def test_contents_up_to():
    contents = contents_up_to(3, 2)
    assert contents == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_verma_character():
    M = VermaModule((4, 2, 0), 3)
    assert M.character() == parabolic_character(3, 3, [])

    with pytest.raises(ValueError):
        VermaModule((1, 0), -1)


def test_verma_action():
    M = VermaModule((4, 2, 0), 3)
    v = M.highest_vector()
    assert M.act_letter(('E', 0), M.word_vector((0,))) == v * q_int(2)
    assert M.act_letter(('E', 1), M.word_vector((0,))).is_zero()
    # E_1 F_2 F_1 v = F_2 E_1 F_1 v
    assert M.act_letter(('E', 0), M.word_vector((1, 0))) == M.word_vector((1,)) * q_int(2)

    with pytest.raises(CutoffExceeded):
        M.word_vector((0, 0, 1, 1))

    with pytest.raises(CutoffExceeded):
        M.apply_word((0,), M.word_vector((0, 1, 1)))


def test_singular_power():
    # [lam_1 - lam_2 + 1 - m]_q vanishes at m = 3 for lam = (4, 2, 0)
    M = VermaModule((4, 2, 0), 3)
    assert M.is_singular(M.word_vector((0, 0, 0)))
    assert not M.is_singular(M.word_vector((0, 0)))
    space = singular_space(M, (3, 0))
    assert len(space) == 1
    assert singular_space(M, (1, 0)) == []


def test_dyn_root_simple():
    n = 3
    assert dyn_root((0, 1), n) == UqElement.f(n, 0)
    assert dyn_root((1, 1), n) == dyn_root((0, 0), n)
    assert not dyn_root((2, 0), n)

    with pytest.raises(ValueError):
        dyn_root((0, 3), n)


@pytest.mark.parametrize('lam', [(4, 2, 0), (1, 1, 5), (0, -3, 2)])
def test_dyn_root_expansion(lam):
    # f_13 v = (F_1 F_2 [lam_2 - lam_3 + 1]_q - F_2 F_1 [lam_2 - lam_3]_q) v
    M = VermaModule(lam, 2)
    v = M.highest_vector()
    a = lam[1] - lam[2]
    expected = M.word_vector((0, 1)) * q_int(a + 1) - M.word_vector((1, 0)) * q_int(a)
    assert M.apply(dyn_root((0, 2), 3), v) == expected
    assert M.apply(dyn_root_at((0, 2), lam), v) == expected


@pytest.mark.parametrize('lam', [
    (-1, 0, 0),
    (0, 3, 1),
    (2, 2, 3),
    (1, 0, 0),
    (4, 2, 0),
    (0, 0, 0),
])
def test_dyn_root_singular(lam):
    # f_13 v is singular iff [(lam + rho, alpha) - 1]_q = 0
    M = VermaModule(lam, 2)
    vec = M.apply(dyn_root((0, 2), 3), M.highest_vector())
    assert not vec.is_zero()
    assert M.is_singular(vec) == (lam[0] - lam[2] + 1 == 0)


@pytest.mark.parametrize('m', [1, 2])
def test_basic_dyn(verma3, m):
    for alpha in root_system(3).positive_roots:
        ok, witnesses = check_basic_dyn(alpha, m, verma3)
        assert ok, witnesses


def test_basic_dyn_invalid():
    M = VermaModule((4, 2, 0), 2)
    with pytest.raises(ValueError):
        check_basic_dyn((1, 0), 1, M)

    with pytest.raises(CutoffExceeded):
        check_basic_dyn((0, 2), 2, M)


def test_principal_monomial():
    assert principal_monomial(0, 2) == (0, 1)
    assert principal_monomial(1, 1) == ()


@pytest.fixture
def quotient():
    M = VermaModule((5, 5, 0), 3)
    g = M.word_vector((0,))
    return QuotientModule(M, [g])


def test_quotient(quotient):
    assert quotient.character() == parabolic_character(3, 3, [(0, 1)])
    assert quotient.check_submodule_closed() == []
    assert quotient.project(quotient.ambient.word_vector((0,))).is_zero()
    v = quotient.highest_vector()
    assert quotient.act_letter(('F', 0), v).is_zero()
    assert not quotient.act_letter(('F', 1), v).is_zero()


def test_quotient_invalid():
    M = VermaModule((5, 5, 0), 3)
    with pytest.raises(NotSingularError):
        QuotientModule(M, [M.word_vector((1,))])

    with pytest.raises(NotSingularError):
        QuotientModule(M, [M.word_vector((0,)) + M.word_vector((1,))])

    Q = QuotientModule(M, [M.word_vector((0,))])
    with pytest.raises(TypeError):
        QuotientModule(Q, [])

    assert quotient_by_singulars(M, []) is M
    assert isinstance(quotient_by_singulars(M, [M.word_vector((0,))]), QuotientModule)


@pytest.mark.parametrize('images,levi', [
    ((0, 1, 2), True),
    ((1, 2, 0), True),
    ((0, 2, 1), False),
])
def test_build_M_sigma(images, levi):
    sigma = Permutation(images)
    module, generators = build_M_sigma((5, 5, 0), sigma, (2, 1), 3)
    assert len(generators) == 1
    assert all(module.ambient.is_singular(g) for g in generators)
    assert module.check_submodule_closed() == []
    if levi:
        excluded = [sigma.apply_root((0, 1))]
        assert module.character() == parabolic_character(3, 3, excluded)


def test_build_M_sigma_invalid():
    with pytest.raises(ValueError):
        build_M_sigma((5, 5, 0), Permutation((1, 0, 2)), (2, 1), 3)

    with pytest.raises(ValueError):
        build_M_sigma((5, 4, 0), Permutation.identity(3), (2, 1), 3)


def test_build_M_sigma_beyond_cutoff():
    # sigma(alpha) = eps_1 - eps_3 has height 2
    with pytest.warns(UserWarning):
        module, generators = build_M_sigma((5, 5, 0), Permutation((0, 2, 1)), (2, 1), 1)
    assert generators == []
    assert isinstance(module, VermaModule)


def test_module_vector_arithmetic():
    M = VermaModule((2, 1), 2)
    u = M.word_vector((0,))
    assert (u - u).is_zero()
    assert (u * 0).is_zero()
    assert u + ModuleVector(M) == u
    assert str(ModuleVector(M)) == '0'
    assert u.to_list() == [('F1 v', '1*q^0 / 1*q^0')]


def basis_up_to(M, cutoff):
    return [v for d in contents_up_to(M.n, cutoff) for v in M.basis_vectors(d)]


@pytest.mark.parametrize('lam', [(4, 2, 0), (-1, 3, 3)])
def test_defining_relations(lam):
    # [E_i, F_j] = delta_ij [h_alpha_i]_q on every stored weight space
    n = 3
    M = VermaModule(lam, 3)
    for v in basis_up_to(M, 2):
        for i in range(n - 1):
            for j in range(n - 1):
                e, f = UqElement.e(n, i), UqElement.f(n, j)
                lhs = M.apply(e * f - f * e, v)
                if i == j:
                    alpha = [1 if k == i else -1 if k == i + 1 else 0 for k in range(n)]
                    assert lhs == M.apply(UqElement.q_bracket(n, alpha, 0), v)
                else:
                    assert lhs.is_zero()


def test_serre_relations():
    n = 3
    M = VermaModule((4, 2, 0), 4)
    for kind, vectors in (('E', basis_up_to(M, 4)), ('F', basis_up_to(M, 1))):
        for i, j in ((0, 1), (1, 0)):
            a, b = UqElement.letter(n, (kind, i)), UqElement.letter(n, (kind, j))
            serre = a * a * b - a * b * a * q_int(2) + b * a * a
            for v in vectors:
                assert M.apply(serre, v).is_zero()


@pytest.mark.parametrize('n,lam', [
    (3, (4, 2, 0)),
    (3, (0, 3, 1)),
    pytest.param(4, (6, 2, 3, 0), marks=pytest.mark.slow),
])
def test_conatural_root_vectors(n, lam):
    # y = f_{eps_1 - eps_l} v satisfies E_1^2 y = 0 and E_i y = 0 for i > 1
    M = VermaModule(lam, n - 1)
    v = M.highest_vector()
    for l in range(1, n):
        y = M.apply(dyn_root((0, l), n), v)
        assert not y.is_zero()
        assert M.act_letter(('E', 0), M.act_letter(('E', 0), y)).is_zero()
        for i in range(1, n - 1):
            assert M.act_letter(('E', i), y).is_zero()


@pytest.mark.parametrize('alpha,lam', [
    ((0, 1), (5, 5, 0)),
    ((1, 2), (4, 2, 2)),
    ((0, 2), (-1, 0, 0)),
])
def test_vanishing_submodule(alpha, lam):
    # (lam + rho, alpha) = 1 and u-hat_j dies in C^n (x) M-hat / <f_alpha v>
    i, j = alpha
    assert lam[i] - lam[j] + j - i == 1
    M = VermaModule(lam, 2)
    g = M.apply(dyn_root(alpha, 3), M.highest_vector())
    T_hat = TensorModule(M)
    T = TensorModule(QuotientModule(M, [g]))
    u = u_hat(j, T_hat)
    assert not u.is_zero()
    assert T_hat.project(u, T).is_zero()
    # u-hat_i survives
    assert not T_hat.project(u_hat(i, T_hat), T).is_zero()
