'''
    Quantized conjugacy classes of ``GL(n)`` with diagonalizable points:
    orbit data, the target values of the q-traces, and the end-to-end
    verification that ``Q`` acting on ``C^n (x) M_{sigma.lam}`` satisfies the
    defining relations of the quantized class for every admissible
    ``sigma``.

'''
import logging
import multiprocessing
import os
import time
import warnings

import tqdm

from ..algebra.scalars import ZERO, ONE, q_pow, q_int, format_scalar
from ..algebra.rootdata import (BlockStructure, Permutation, enumerate_admissible, is_admissible,
                                is_levi, shifted_action, x_hat, x_hat_exponent, m_sigma,
                                sigma_exponents)
from ..rep.module import CutoffExceeded, NotSingularError, singular_space, span_in_space
from ..rep.verma import build_M_sigma, parabolic_character
from ..rep.tensor import TensorModule, u_hat, c_hat, top_vector, filtration_V, generated_span
from ..rep.braiding import (build_Q, q_action, min_poly, check_equivariance, q_trace_power,
                            re_check)
from ..util.linalg import poly_from_roots, poly_coeffs
from .certificate import Check, Certificate

EXACTNESS = 'asserted, not machine-checked'


class OrbitError(ValueError):
    ''' Orbit data violating the block or eigenvalue preconditions '''
    pass


def default_cutoff(n):
    return 4 if n <= 3 else n - 1


class OrbitData(object):
    '''
        Conjugacy class of ``diag(x_1 (n_1 times), ..., x_k (n_k times))``
        with ``x_i = q^{2(a_i - m_i + 1)}``, ``m_i`` the 1-based first index
        of block ``i``. The initial point is the block-constant weight
        ``lam`` with value ``a_i`` on block ``i``.

        Parameters:
         - ``mult`` : ``tuple`` of ``int``, block multiplicities ``n_i``
         - ``exps`` : ``tuple`` of ``int``, eigenvalue exponents ``a_i``

    '''
    class_version = '0.1.0'

    def __init__(self, mult, exps):
        try:
            self.blocks = BlockStructure(mult)
        except ValueError as err:
            raise OrbitError(str(err))
        self.mult = self.blocks.mult
        self.exps = tuple(int(a) for a in exps)
        self.n = self.blocks.n
        self.k = self.blocks.k
        if len(self.exps) != self.k:
            raise OrbitError(f'Got {len(self.exps)} exponents for {self.k} blocks')
        if len(set(self.exps)) != self.k:
            raise OrbitError(f'Block values {self.exps} are not distinct')
        shifted = [a - s for a, s in zip(self.exps, self.blocks.block_starts)]
        if len(set(shifted)) != self.k:
            raise OrbitError(f'Eigenvalue collision: a_i - m_i + 1 = {[s + 1 for s in shifted]} '
                             f'are not pairwise distinct')
        self.lam = tuple(a for a, m in zip(self.exps, self.mult) for _ in range(m))
        self.x_exponents = [x_hat_exponent(self.lam, s) for s in self.blocks.block_starts]
        self.x = [q_pow(e) for e in self.x_exponents]

    def __repr__(self):
        return f'OrbitData(mult={self.mult}, exps={self.exps})'

    def sigmas(self):
        return enumerate_admissible(self.blocks)

    def strings(self):
        ''' Exponents of ``x_i, x_i q^-2, ..., x_i q^{-2(n_i - 1)}`` per block '''
        return [[e - 2 * r for r in range(m)] for e, m in zip(self.x_exponents, self.mult)]

    def describe(self):
        return dict(n=self.n, mult=list(self.mult), exps=list(self.exps), lam=list(self.lam),
                    x=[format_scalar(x) for x in self.x])


def make_orbit(mult, exps):
    return OrbitData(mult, exps)


def qtrace_target(m, O):
    '''
        ``sum_i x_i^m [n_i]_q prod_{j != i} (q^{n_j} x_i - q^{-n_j} x_j) / (x_i - x_j)``
    '''
    if m < 1:
        raise ValueError(f'Power must be positive, got m={m}')
    total = ZERO
    for i, (x_i, n_i) in enumerate(zip(O.x, O.mult)):
        term = x_i ** m * q_int(n_i)
        for j, (x_j, n_j) in enumerate(zip(O.x, O.mult)):
            if j != i:
                term = term * (q_pow(n_j) * x_i - q_pow(-n_j) * x_j) / (x_i - x_j)
        total = total + term
    return total


def u_sigma(i, O, sigma, T_hat, T):
    '''
        The normalized singular vector ``u_i^sigma`` (0-based ``i``) of
        ``T = C^n (x) M_{sigma.lam}``: the projection of ``u-hat_m``,
        ``m = m_i^sigma``, divided by ``C-bar_i^sigma = C-hat_m / C_i^sigma``
        with ``C_i^sigma = prod_{j < i} (x_i^sigma - x_j^sigma)``.

        Returns ``(vector, C_i^sigma, C-bar_i^sigma)``; when ``C-bar`` vanishes
        the unnormalized projection is returned.

    '''
    exps = sigma_exponents(O.lam, sigma, O.blocks)
    xs = [q_pow(e) for e in exps]
    m = m_sigma(sigma, O.blocks)[i]
    c_sigma = ONE
    for j in range(i):
        c_sigma = c_sigma * (xs[i] - xs[j])
    projected = T_hat.project(u_hat(m, T_hat), T)
    c_full = c_hat(m, T_hat.lam)
    if not c_full:
        return projected, c_sigma, ZERO
    c_bar = c_full / c_sigma
    return projected * (ONE / c_bar), c_sigma, c_bar


def _content_pairs(table):
    return [[list(d), int(v)] for d, v in sorted(table.items())]


class OrbitVerifier(object):
    '''
        Runs the verification suite for one orbit and one admissible
        permutation on ``M_{sigma.lam}`` truncated at ``cutoff``.

        Parameters:
         - ``cutoff`` : ``int``, degree cutoff ``D`` (default by ``n``: 4 for ``n <= 3``, else ``n - 1``)
         - ``re_cutoff`` : ``int``, cutoff of the reflection equation check (default ``min(D, 2)``)
         - ``extended`` : ``int``, number of q-trace powers beyond ``k`` to check (default 0)
         - ``validate`` : ``bool``, run the braiding validation pins (default ``True``)

        Example config::

            orbit_verify:
                classname: OrbitVerifier
                params:
                    cutoff: 4
                    re_cutoff: 2
                    extended: 1

    '''
    class_version = '0.1.0'

    default_extended = 0
    default_validate = True

    def __init__(self, O, sigma, **params):
        self.O = O
        self.sigma = sigma if isinstance(sigma, Permutation) else Permutation.from_one_based(sigma)
        if self.sigma.n != O.n:
            raise OrbitError(f'Permutation {self.sigma} does not act on n={O.n}')
        if not is_admissible(self.sigma, O.blocks):
            raise OrbitError(f'Permutation {self.sigma} is not admissible for blocks {O.mult}')
        self.cutoff = params.get('cutoff', None)
        self.cutoff = default_cutoff(O.n) if self.cutoff is None else int(self.cutoff)
        self.re_cutoff = params.get('re_cutoff', None)
        self.re_cutoff = min(self.cutoff, 2) if self.re_cutoff is None else int(self.re_cutoff)
        self.extended = int(params.get('extended', self.default_extended))
        self.validate = params.get('validate', self.default_validate)

        self.levi = is_levi(self.sigma, O.blocks)
        self.mu = shifted_action(self.sigma, O.lam)
        self.starts = m_sigma(self.sigma, O.blocks)
        self.x_sigma = [q_pow(e) for e in sigma_exponents(O.lam, self.sigma, O.blocks)]

    def conventions(self, Q=None):
        return dict(
            orientation=Q.orientation if Q is not None else None,
            coproduct='Delta(E_i) = E_i (x) 1 + K_alpha_i (x) E_i; Delta(F_i) = 1 (x) F_i + F_i (x) K_-alpha_i',
            root_vectors='f_alpha = F_i f_beta [h_beta + (rho, beta)]_q - f_beta F_i [h_beta + (rho, beta) - 1]_q',
            q_trace='Tr_q(X) = sum_i q^{n+1-2i} X_ii',
            exactness=EXACTNESS,
        )

    def run(self):
        O = self.O
        cert = Certificate(O.n, O.mult, O.exps, self.sigma.one_based, self.cutoff)
        start = time.time()
        Q = build_Q(O.n, validate=self.validate)
        cert.conventions = self.conventions(Q)

        try:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter('always')
                self.module, self.generators = build_M_sigma(O.lam, self.sigma, O.blocks, self.cutoff)
        except NotSingularError as err:
            cert.add(Check('generator singularity', 'generators of the defining submodule are singular',
                           'fail', dict(error=str(err))))
            return cert
        self.skipped = [str(w.message) for w in caught]
        for message in self.skipped:
            logging.warning(message)
        self.verma = getattr(self.module, 'ambient', self.module)
        self.T_hat = TensorModule(self.verma)
        self.T = TensorModule(self.module)

        cert.add(self.check_module())
        cert.add(self.check_generators())
        cert.add(self.check_character())
        cert.add(self.check_equivariance(Q))
        poly_check, self.poly = self.check_min_poly(Q)
        cert.add(poly_check)
        for m in range(1, O.k + 1):
            cert.add(self.check_trace(Q, m))
        for m in range(O.k + 1, O.k + 1 + self.extended):
            cert.add(self.check_trace(Q, m, extended=True))
        cert.add(self.check_reflection(Q))
        cert.add(self.check_filtration())
        cert.add(self.check_vanishing())
        cert.add(self.check_direct_sum())
        cert.add(self.check_strings())
        logging.info(f'Verified {O!r} at sigma={self.sigma} (cutoff {self.cutoff}) in '
                     f'{time.time() - start:.1f}s: {"pass" if cert.passed else "FAIL"}')
        return cert

    # --- individual checks

    def check_module(self):
        witness = dict(lam=list(self.O.lam), shifted_weight=list(self.mu), levi=self.levi,
                       generators=len(self.generators), skipped=self.skipped,
                       dimension=sum(self.module.character().values()))
        closed = True
        if self.generators:
            bad = self.module.check_submodule_closed()
            witness['closure_failures'] = [[list(d), i + 1] for d, i in bad]
            closed = not bad
        return Check.from_bool('module', 'parabolic quotient M_{sigma.lam} of the Verma module', closed, witness)

    def check_generators(self):
        records = list()
        ok = True
        for g in self.generators:
            (d,) = g.components
            singular = singular_space(self.verma, d)
            contained = span_in_space(self.verma, singular, d).contains(self.verma.to_coords(g, d))
            ok = ok and contained
            records.append(dict(content=list(d), singular_dimension=len(singular), vector=g.to_list()))
        return Check.from_bool('generator singularity', 'generators of the defining submodule are singular',
                               ok, dict(generators=records))

    def check_character(self):
        actual = self.module.character()
        excluded = [self.sigma.apply_root(r) for r in self.O.blocks.levi_positive_roots]
        expected = parabolic_character(self.O.n, self.cutoff, excluded)
        witness = dict(actual=_content_pairs(actual), avoiding_conjugate_levi=_content_pairs(expected))
        if not self.levi:
            witness['informational'] = True
            return Check('character', 'character of the parabolic Verma module', 'skip', witness)
        return Check.from_bool('character', 'character of the parabolic Verma module',
                               actual == expected, witness)

    def check_equivariance(self, Q):
        bad = check_equivariance(Q, self.T, [t for t in self.T.spaces() if self.T.space_dim(t) > 0])
        return Check.from_bool('equivariance', 'Q commutes with the action of U_q(gl(n))', not bad,
                               dict(failures=[[list(t), g] for t, g in bad]))

    def check_min_poly(self, Q):
        poly = min_poly(q_action(Q, self.T))
        expected = poly_from_roots(self.x_sigma)
        witness = dict(coefficients=[format_scalar(c) for c in poly_coeffs(poly)],
                       degree=int(poly.degree()),
                       roots=[format_scalar(x) for x in self.x_sigma])
        ok = poly == expected and poly.degree() == self.O.k
        return Check.from_bool('minimal polynomial', 'minimal polynomial relation prod_i (Q - x_i) = 0',
                               ok, witness), poly

    def check_trace(self, Q, m, extended=False):
        name = f'{"extended " if extended else ""}q-trace m={m}'
        anchor = 'q-trace relation Tr_q(Q^m) = sum_i x_i^m [n_i]_q prod_j (q^n_j x_i - q^-n_j x_j)/(x_i - x_j)'
        target = qtrace_target(m, self.O)
        try:
            value, contents = q_trace_power(m, Q, self.module)
        except CutoffExceeded as err:
            # powers m <= k are mandatory
            return Check(name, anchor, 'skip' if extended else 'fail',
                         dict(reason=str(err), target=format_scalar(target)))
        except RuntimeError as err:
            return Check(name, anchor, 'fail', dict(error=str(err), target=format_scalar(target)))
        witness = dict(value=format_scalar(value), target=format_scalar(target),
                       contents=[list(d) for d in contents])
        return Check.from_bool(name, anchor, value == target, witness)

    def check_reflection(self, Q):
        try:
            ok, witness = re_check(Q, self.module, cutoff=self.re_cutoff)
        except CutoffExceeded as err:
            return Check('reflection equation', 'S12 Q2 S12 Q2 = Q2 S12 Q2 S12', 'skip', dict(reason=str(err)))
        witness['cutoff'] = self.re_cutoff
        return Check.from_bool('reflection equation', 'S12 Q2 S12 Q2 = Q2 S12 Q2 S12', ok, witness)

    def _probed(self):
        return [t for t in self.T.spaces() if self.T.space_dim(t) > 0]

    def check_filtration(self):
        '''
            Ranks of the images of ``V-hat_j`` (generated by ``w_i (x) v``,
            ``i < j``) on every probed space. They must form exactly ``k``
            strict steps ending at the whole space, and with pairwise
            distinct ``x-hat`` the steps sit at ``m_i^sigma``.

        '''
        anchor = 'filtration of C^n (x) M_{sigma.lam} by k submodules'
        n = self.O.n
        if n - 1 > self.cutoff:
            return Check('filtration', anchor, 'skip', dict(reason=f'w_{n} (x) v lies beyond cutoff {self.cutoff}'))
        probed = self._probed()
        dims = [self.T.space_dim(t) for t in probed]
        ranks = [[0] * len(probed)]
        for j in range(1, n + 1):
            ranks.append([filtration_V(self.T, j, t).rank for t in probed])
        steps = [j - 1 for j in range(1, n + 1) if ranks[j] != ranks[j - 1]]
        increasing = all(a <= b for j in range(1, n + 1) for a, b in zip(ranks[j - 1], ranks[j]))
        ok = increasing and len(steps) == self.O.k and ranks[-1] == dims
        distinct = len({x_hat_exponent(self.mu, i) for i in range(n)}) == n
        if distinct:
            ok = ok and tuple(steps) == tuple(self.starts)
        witness = dict(steps=[j + 1 for j in steps], expected=[m + 1 for m in self.starts],
                       distinct_x_hat=distinct, spaces=len(probed))
        return Check.from_bool('filtration', anchor, ok, witness)

    def check_vanishing(self):
        ''' ``u-hat_j`` projects to zero for ``j`` outside ``{m_i^sigma}`` '''
        anchor = 'submodules generated by u-hat_j, j not a block start of sigma, vanish in the quotient'
        vanished, beyond = list(), list()
        for j in range(self.O.n):
            if j in self.starts:
                continue
            if j > self.cutoff:
                beyond.append(j + 1)
                continue
            projected = self.T_hat.project(u_hat(j, self.T_hat), self.T)
            vanished.append((j + 1, projected.is_zero()))
        return Check.from_bool('vanishing submodules', anchor, all(z for _, z in vanished),
                               dict(indices=[[j, z] for j, z in vanished], beyond_cutoff=beyond))

    def check_direct_sum(self):
        '''
            ``u_i^sigma`` is singular and equals ``(-1)^m C_i^sigma w_m (x) v``
            modulo the image of ``V-hat_m`` (0-based ``m = m_i^sigma``); the
            submodules it generates have ranks summing to each probed
            dimension and together span it.

        '''
        anchor = 'C^n (x) M_{sigma.lam} splits into the direct sum of k cyclic submodules'
        records = list()
        vectors = list()
        ok = True
        for i, m in enumerate(self.starts):
            if m > self.cutoff:
                return Check('direct sum', anchor, 'skip', dict(reason=f'u_{i + 1} lies beyond cutoff {self.cutoff}'))
            u, c_sigma, c_bar = u_sigma(i, self.O, self.sigma, self.T_hat, self.T)
            record = dict(index=i + 1, m=m + 1, C=format_scalar(c_sigma), C_bar=format_scalar(c_bar))
            if u.is_zero():
                record['normalization'] = 'degenerate'
                records.append(record)
                return Check('direct sum', anchor, 'skip', dict(vectors=records))
            singular = self.T.is_singular(u)
            t = self.T.shift(m)
            congruent = True
            if c_bar:
                diff = u - top_vector(self.T, m) * ((-1) ** m * c_sigma)
                congruent = filtration_V(self.T, m, t).contains(self.T.to_coords(diff, t))
            else:
                record['normalization'] = 'unnormalized'
            record.update(singular=singular, congruent=congruent)
            ok = ok and singular and congruent
            records.append(record)
            vectors.append(u)
        mismatched = list()
        for t in self._probed():
            dim = self.T.space_dim(t)
            spans = [generated_span(self.T, [u], t) for u in vectors]
            total = generated_span(self.T, vectors, t)
            if sum(s.rank for s in spans) != dim or total.rank != dim:
                mismatched.append(dict(space=list(t), dimension=dim, ranks=[s.rank for s in spans]))
        ok = ok and not mismatched
        return Check.from_bool('direct sum', anchor, ok, dict(vectors=records, mismatched=mismatched))

    def check_strings(self):
        '''
            ``x-hat`` of ``lam`` splits into ``k`` strings headed by ``x_i``
            and the roots of the minimal polynomial among the ``x-hat`` of
            ``sigma.lam`` are exactly the heads.

        '''
        anchor = 'eigenvalues split into k strings; only the heads survive in the quotient'
        n = self.O.n
        hats = sorted(x_hat_exponent(self.O.lam, i) for i in range(n))
        strings = sorted(e for s in self.O.strings() for e in s)
        survivors = sorted({x_hat_exponent(self.mu, i) for i in range(n)
                            if not self.poly(x_hat(self.mu, i))})
        heads = sorted(self.O.x_exponents)
        ok = hats == strings and survivors == heads
        return Check.from_bool('strings', anchor, ok, dict(strings=self.O.strings(), survivors=survivors))


def verify_orbit(O, sigma, D=None, **params):
    return OrbitVerifier(O, sigma, cutoff=D, **params).run()


def _verify_worker(mult, exps, images, cutoff, params):
    O = OrbitData(mult, exps)
    return verify_orbit(O, Permutation(images), cutoff, **params).to_dict()


def worker_count(requested=None):
    if requested is None:
        requested = int(os.environ.get('QCONJ_THREADS', 1))
    return max(1, min(requested, multiprocessing.cpu_count()))


def agreement(certs):
    '''
        Minimal polynomial coefficients and q-trace values must be
        identical across permutations
    '''
    keys = list()
    for cert in certs:
        data = dict()
        for check in cert.checks:
            if check.name == 'minimal polynomial':
                data[check.name] = check.witness.get('coefficients')
            elif 'q-trace' in check.name and check.status == 'pass':
                data[check.name] = check.witness.get('value')
        keys.append(data)
    ok = all(k == keys[0] for k in keys)
    return Check.from_bool('sigma independence', 'verification data agree across admissible permutations',
                           ok, dict(permutations=[c.sigma for c in certs], data=keys[0] if keys else dict()))


def sigma_sweep(O, D=None, processes=None, progress=True, **params):
    '''
        ``verify_orbit`` for every admissible permutation, in enumeration
        order. Returns ``(certificates, agreement check)``.

    '''
    sigmas = O.sigmas()
    processes = min(worker_count(processes), len(sigmas))
    logging.info(f'Sweeping {len(sigmas)} permutations of {O!r} on {processes} processes')
    if processes == 1:
        certs = list()
        for sigma in tqdm.tqdm(sigmas, disable=not progress, smoothing=0):
            certs.append(verify_orbit(O, sigma, D, **params))
    else:
        with multiprocessing.Pool(processes) as p:
            results = [p.apply_async(_verify_worker, (O.mult, O.exps, sigma.images, D, params))
                       for sigma in sigmas]
            certs = list()
            with tqdm.tqdm(total=len(results), disable=not progress, smoothing=0) as pbar:
                for r in results:
                    certs.append(Certificate.from_dict(r.get()))
                    pbar.update()
    return certs, agreement(certs)
