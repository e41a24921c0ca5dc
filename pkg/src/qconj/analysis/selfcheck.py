'''
    Property suites run by ``qconj selfcheck`` at ``n = 2, 3``. Each suite
    returns ``(ok, detail)``. The scalar suite takes a ``corrupt`` flag that
    perturbs its identity, as a negative control.

'''
import logging
import time

import numpy as np

from ..algebra.scalars import q_pow, q_int
from ..algebra.rootdata import (root_system, kostant_partition_count, enumerate_admissible,
                                BlockStructure, Permutation)
from ..rep.module import singular_space, span_in_space
from ..rep.verma import VermaModule, check_basic_dyn
from ..rep.tensor import TensorModule, u_hat
from ..rep.braiding import build_Q, braid_relation_holds, hecke_holds, spectrum
from ..util.linalg import equal, poly_from_roots
from .orbit import make_orbit, verify_orbit


def suite_scalars(corrupt=False):
    rng = np.random.default_rng(0)
    bad = list()
    for _ in range(200):
        a, b = (int(z) for z in rng.integers(-12, 13, size=2))
        rhs = q_int(a) * q_pow(b + (1 if corrupt else 0)) + q_pow(-a) * q_int(b)
        if q_int(a + b) != rhs:
            bad.append([a, b])
    return not bad, dict(failures=bad[:5])


def suite_rootdata():
    counts = {(2, 1): 3, (1, 1, 1): 6, (2, 2): 6}
    found = {mult: len(enumerate_admissible(BlockStructure(mult))) for mult in counts}
    return found == counts, dict(admissible={','.join(map(str, k)): v for k, v in found.items()})


def suite_braiding():
    detail = dict()
    ok = True
    for n in (2, 3):
        Q = build_Q(n)
        S = Q.S
        checks = dict(braid=braid_relation_holds(S, n), hecke=hecke_holds(S, n),
                      square=equal(S * S, Q.natural_image()))
        detail[n] = dict(checks, orientation=Q.orientation)
        ok = ok and all(checks.values())
    return ok, detail


def suite_verma():
    M = VermaModule((4, 2, 0), 4)
    bad = [list(d) for d, dim in M.character().items()
           if dim != kostant_partition_count(3, d)]
    return not bad, dict(failures=bad)


def suite_basic_dyn():
    M = VermaModule((4, 2, 0), 4)
    failures = list()
    for alpha in root_system(3).positive_roots:
        for m in (1, 2):
            ok, _ = check_basic_dyn(alpha, m, M)
            if not ok:
                failures.append(dict(alpha=[alpha[0] + 1, alpha[1] + 1], m=m))
    return not failures, dict(failures=failures)


def suite_singular():
    T = TensorModule(VermaModule((4, 2, 0), 2))
    detail = dict()
    ok = True
    for l in range(3):
        t = T.shift(l)
        space = singular_space(T, t)
        u = u_hat(l, T)
        spans = len(space) == 1 and not u.is_zero() \
            and span_in_space(T, space, t).contains(T.to_coords(u, t))
        detail[l + 1] = dict(dimension=len(space), spans=spans)
        ok = ok and spans
    return ok, detail


def suite_spectrum():
    Q = build_Q(2)
    T = TensorModule(VermaModule((3, 1), 3))
    poly, roots = spectrum(Q, T)
    expected = poly_from_roots([q_pow(6), q_pow(0)])
    return poly == expected and roots == [0, 1], dict(roots=[r + 1 for r in roots])


def suite_orbit():
    O = make_orbit((1, 1), (3, 1))
    cert = verify_orbit(O, Permutation.identity(2), 2)
    return cert.passed, dict(failures=[c.name for c in cert.failures])


SUITES = (
    ('scalars', suite_scalars),
    ('rootdata', suite_rootdata),
    ('braiding', suite_braiding),
    ('verma', suite_verma),
    ('basic_dyn', suite_basic_dyn),
    ('singular', suite_singular),
    ('spectrum', suite_spectrum),
    ('orbit', suite_orbit),
)


def run_suites(corrupt=False, names=None):
    '''
        Runs the suites in order. With ``corrupt`` the scalar suite runs
        with its perturbed identity, whether selected or not. Returns a
        list of ``dict(name, ok, seconds, detail)``.

    '''
    results = list()
    for name, suite in SUITES:
        if name == 'scalars' and corrupt:
            kwargs = dict(corrupt=True)
        elif names is not None and name not in names:
            continue
        else:
            kwargs = dict()
        start = time.time()
        ok, detail = suite(**kwargs)
        elapsed = time.time() - start
        logging.info(f'Suite {name}: {"pass" if ok else "FAIL"} in {elapsed:.2f}s')
        results.append(dict(name=name, ok=bool(ok), seconds=round(elapsed, 3), detail=detail))
    return results
