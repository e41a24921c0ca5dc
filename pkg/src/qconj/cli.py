'''
Command line driver for the verification suites and the exploratory
computations.

Subcommands::

    qconj selfcheck [--json]
    qconj orbit-verify --mult 2,1 --exps 5,0 --sigma all --cutoff 4 --out cert.json
    qconj enumerate-sigma --mult 2,2
    qconj singular --lambda 4,2,0 --weight +e3
    qconj dynroot --alpha 1,3 --lambda 4,2,0
    qconj spectrum --lambda 3,1

Indices on the command line are 1-based; integer lists are comma separated.
Options may also be read from a yaml file with ``--config`` (keys match the
long option names with ``-`` replaced by ``_``); explicit options win.
Exit status is 0 on success, 1 if a check fails and 2 on invalid input.
'''
import argparse
import json
import logging
import sys

import yaml

from . import __version__
from .algebra.rootdata import (BlockStructure, Permutation, enumerate_admissible, is_levi,
                               sigma_exponents, x_hat)
from .algebra.scalars import format_scalar
from .rep.module import CutoffExceeded, singular_space
from .rep.verma import VermaModule, dyn_root, dyn_root_at
from .rep.tensor import TensorModule
from .rep.braiding import ConventionError, build_Q, spectrum
from .util.linalg import poly_coeffs
from .util.archive import write_archive
from .analysis.orbit import OrbitError, make_orbit, verify_orbit, sigma_sweep, default_cutoff
from .analysis.selfcheck import run_suites


def int_list(text):
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    try:
        return [int(x) for x in str(text).split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'Expected a comma separated list of integers, got {text!r}')


class RunConfig(object):
    '''
        Validated options of one CLI invocation.

        Parameters:
         - ``subcommand`` : ``str``
         - ``n`` : ``int``, rank (inferred from ``lam`` or ``mult`` when omitted)
         - ``mult``, ``exps`` : ``list`` of ``int``, orbit data
         - ``sigma`` : ``'all'`` or ``list`` of ``int`` (1-based images)
         - ``cutoff``, ``re_cutoff``, ``extended`` : ``int``
         - ``lam`` : ``list`` of ``int``, highest weight
         - ``alpha`` : ``list`` of ``int``, 1-based root ``eps_i - eps_j``
         - ``weight`` : ``str``, ``'+eL'`` for the weight ``lam + eps_L`` of ``C^n (x) M``
         - ``content`` : ``list`` of ``int``, a Verma weight space
         - ``out``, ``h5`` : ``str``, output paths
         - ``processes`` : ``int``, worker processes (default ``QCONJ_THREADS``)
         - ``progress``, ``json`` : ``bool``

        Example config::

            subcommand: orbit-verify
            mult: [2, 1]
            exps: [5, 0]
            sigma: all
            cutoff: 4

    '''
    class_version = '0.1.0'

    def __init__(self, **params):
        self.subcommand = params.get('subcommand')
        self.mult = params.get('mult')
        self.exps = params.get('exps')
        self.sigma = params.get('sigma') or 'all'
        self.lam = params.get('lam')
        self.alpha = params.get('alpha')
        self.weight = params.get('weight')
        self.content = params.get('content')
        self.cutoff = params.get('cutoff')
        self.re_cutoff = params.get('re_cutoff')
        self.extended = params.get('extended') or 0
        self.out = params.get('out')
        self.h5 = params.get('h5')
        self.processes = params.get('processes')
        self.progress = params.get('progress') is not False
        self.json = bool(params.get('json'))
        self.verbose = params.get('verbose') or 0
        self.n = params.get('n')
        for key in ('mult', 'exps', 'lam', 'alpha', 'content'):
            value = getattr(self, key)
            if value is not None:
                setattr(self, key, int_list(value))
        if self.sigma is not None and self.sigma != 'all':
            self.sigma = int_list(self.sigma)
        if self.n is None:
            if self.lam is not None:
                self.n = len(self.lam)
            elif self.mult is not None:
                self.n = sum(self.mult)
        self.validate()

    def validate(self):
        ''' Raises ``ValueError`` for options that cannot be used together '''
        if self.lam is not None and self.n != len(self.lam):
            raise ValueError(f'--n {self.n} does not match --lambda of length {len(self.lam)}')
        if self.mult is not None and self.n != sum(self.mult):
            raise ValueError(f'--n {self.n} does not match --mult summing to {sum(self.mult)}')
        if self.mult is not None and self.exps is not None and len(self.exps) != len(self.mult):
            raise ValueError(f'--exps has {len(self.exps)} values for {len(self.mult)} blocks')
        for key in ('cutoff', 're_cutoff', 'extended'):
            value = getattr(self, key)
            if value is not None and int(value) < 0:
                raise ValueError(f'--{key.replace("_", "-")} must be non-negative, got {value}')
        if isinstance(self.sigma, list) and self.n is not None and len(self.sigma) != self.n:
            raise ValueError(f'--sigma has {len(self.sigma)} images, expected {self.n}')

    @classmethod
    def from_args(cls, args):
        params = vars(args).copy()
        config = params.pop('config', None)
        if config is not None:
            with open(config) as f:
                loaded = yaml.safe_load(f) or dict()
            for key, value in loaded.items():
                key = key.replace('-', '_')
                if key == 'lambda':
                    key = 'lam'
                if params.get(key) is None:
                    params[key] = value
        return cls(**params)


# --- subcommands

def cmd_selfcheck(config, corrupt=False):
    results = run_suites(corrupt=corrupt)
    ok = all(r['ok'] for r in results)
    if config.json:
        print(json.dumps(dict(version=__version__, ok=ok, suites=results), indent=2))
    else:
        for r in results:
            print(f'{r["name"]:<10} {"pass" if r["ok"] else "FAIL"} {r["seconds"]:8.2f}s')
        print('all suites pass' if ok else 'selfcheck FAILED')
    return 0 if ok else 1


def cmd_orbit_verify(config):
    O = make_orbit(config.mult, config.exps)
    params = dict(re_cutoff=config.re_cutoff, extended=config.extended)
    cutoff = config.cutoff if config.cutoff is not None else default_cutoff(O.n)
    if config.sigma == 'all':
        certs, agreement = sigma_sweep(O, cutoff, processes=config.processes,
                                       progress=config.progress, **params)
    else:
        sigma = Permutation.from_one_based(config.sigma)
        certs, agreement = [verify_orbit(O, sigma, cutoff, **params)], None
    for cert in certs:
        print(cert.summary())
    if agreement is not None:
        print(f'  [{agreement.status:>4}] {agreement.name} across {len(certs)} permutations')
    if len(certs) == 1:
        document = certs[0].to_dict()
    else:
        document = dict(certificates=[c.to_dict() for c in certs], agreement=agreement.to_dict())
    text = json.dumps(document, indent=2)
    if config.out:
        with open(config.out, 'w') as f:
            f.write(text + '\n')
        logging.info(f'Wrote {len(certs)} certificates to {config.out}')
    elif config.json:
        print(text)
    if config.h5:
        write_archive(config.h5, certs)
    ok = all(c.passed for c in certs) and (agreement is None or agreement.passed)
    return 0 if ok else 1


def cmd_enumerate_sigma(config):
    blocks = BlockStructure(config.mult)
    lam = config.exps and tuple(a for a, m in zip(config.exps, blocks.mult) for _ in range(m))
    rows = list()
    for sigma in enumerate_admissible(blocks):
        row = dict(sigma=sigma.one_based, levi=is_levi(sigma, blocks))
        if lam:
            row['x_exponents'] = sigma_exponents(lam, sigma, blocks)
        rows.append(row)
    if config.json:
        print(json.dumps(rows, indent=2))
    else:
        for row in rows:
            extra = f'  x^sigma = {row["x_exponents"]}' if 'x_exponents' in row else ''
            print(f'{",".join(map(str, row["sigma"]))}  {"levi" if row["levi"] else "non-levi"}{extra}')
        print(f'{len(rows)} admissible permutations')
    return 0


def _parse_weight(text, n):
    text = text.strip()
    if not text.startswith('+e'):
        raise ValueError(f'Weight must look like +eL, got {text!r}')
    l = int(text[2:])
    if not 1 <= l <= n:
        raise ValueError(f'Weight index {l} out of range for n={n}')
    return l - 1


def cmd_singular(config):
    lam = config.lam
    n = len(lam)
    if config.weight is not None:
        l = _parse_weight(config.weight, n)
        cutoff = l if config.cutoff is None else config.cutoff
        T = TensorModule(VermaModule(lam, cutoff))
        space, vectors = T.shift(l), singular_space(T, T.shift(l))
        where = f'weight lam + eps_{l + 1} of C^n (x) M'
    elif config.content is not None:
        d = tuple(config.content)
        if len(d) != n - 1:
            raise ValueError(f'--content needs {n - 1} entries, got {len(d)}')
        M = VermaModule(lam, sum(d) if config.cutoff is None else config.cutoff)
        space, vectors = d, singular_space(M, d)
        where = f'content {",".join(map(str, d))} of M'
    else:
        raise ValueError('singular needs --weight or --content')
    if config.json:
        print(json.dumps(dict(space=list(space), dimension=len(vectors),
                              vectors=[v.to_list() for v in vectors]), indent=2))
    else:
        print(f'singular vectors at {where}: dimension {len(vectors)}')
        for v in vectors:
            print(f'  {v}')
    return 0


def cmd_dynroot(config):
    i, j = (a - 1 for a in config.alpha)
    n = config.n if config.n is not None else (len(config.lam) if config.lam else max(i, j) + 1)
    element = dyn_root((i, j), n)
    print(f'f_(eps_{i + 1} - eps_{j + 1}) = {element}')
    if config.lam is not None:
        specialized = dyn_root_at((i, j), config.lam)
        print(f'at lambda = {",".join(map(str, config.lam))}: {specialized}')
        M = VermaModule(config.lam, max(j - i, 0))
        print(f'applied to v: {M.apply(specialized, M.highest_vector())}')
    return 0


def cmd_spectrum(config):
    lam = config.lam
    n = len(lam)
    cutoff = default_cutoff(n) if config.cutoff is None else config.cutoff
    Q = build_Q(n)
    T = TensorModule(VermaModule(lam, cutoff))
    poly, roots = spectrum(Q, T)
    values = [format_scalar(x_hat(lam, i)) for i in roots]
    if config.json:
        print(json.dumps(dict(coefficients=[format_scalar(c) for c in poly_coeffs(poly)],
                              eigenvalues=values, orientation=Q.orientation), indent=2))
    else:
        print(f'minimal polynomial coefficients (ascending): {[format_scalar(c) for c in poly_coeffs(poly)]}')
        print('eigenvalues: {' + ', '.join(values) + '}')
    return 0


COMMANDS = {
    'selfcheck': cmd_selfcheck,
    'orbit-verify': cmd_orbit_verify,
    'enumerate-sigma': cmd_enumerate_sigma,
    'singular': cmd_singular,
    'dynroot': cmd_dynroot,
    'spectrum': cmd_spectrum,
}


def build_parser():
    parser = argparse.ArgumentParser(prog='qconj', description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', '-c', type=str, default=None,
                        help='''yaml file with default options''')
    common.add_argument('--verbose', '-v', action='count', default=None,
                        help='''increase logging verbosity (-v info, -vv debug)''')
    common.add_argument('--json', action='store_true', default=None,
                        help='''print machine readable output''')
    common.add_argument('--n', type=int, default=None, help='''rank''')
    common.add_argument('--cutoff', '-D', type=int, default=None,
                        help='''degree cutoff D (default 4 for n <= 3, else n - 1)''')
    sub = parser.add_subparsers(dest='subcommand', required=True)

    p = sub.add_parser('selfcheck', parents=[common], help='''run the property suites''')
    p.add_argument('--inject-corruption', action='store_true', default=False, help=argparse.SUPPRESS)

    p = sub.add_parser('orbit-verify', parents=[common], help='''verify a quantized conjugacy class''')
    p.add_argument('--mult', type=int_list, default=None, help='''block multiplicities, e.g. 2,1''')
    p.add_argument('--exps', type=int_list, default=None, help='''eigenvalue exponents, e.g. 5,0''')
    p.add_argument('--sigma', type=str, default=None,
                   help='''admissible permutation as 1-based images, or "all" (default)''')
    p.add_argument('--re-cutoff', type=int, default=None,
                   help='''cutoff of the reflection equation check (default min(D, 2))''')
    p.add_argument('--extended', type=int, default=None,
                   help='''number of extra q-trace powers beyond k''')
    p.add_argument('--out', '-o', type=str, default=None, help='''JSON certificate output''')
    p.add_argument('--h5', type=str, default=None, help='''HDF5 certificate archive output''')
    p.add_argument('--processes', '-p', type=int, default=None,
                   help='''worker processes (default QCONJ_THREADS or 1)''')
    p.add_argument('--no-progress', dest='progress', action='store_false', default=None,
                   help='''disable the progress bar''')

    p = sub.add_parser('enumerate-sigma', parents=[common], help='''list admissible permutations''')
    p.add_argument('--mult', type=int_list, default=None)
    p.add_argument('--exps', type=int_list, default=None)

    p = sub.add_parser('singular', parents=[common], help='''singular vectors by the kernel oracle''')
    p.add_argument('--lambda', dest='lam', type=int_list, default=None)
    p.add_argument('--weight', type=str, default=None, help='''+eL: weight lam + eps_L of C^n (x) M''')
    p.add_argument('--content', type=int_list, default=None, help='''Verma weight space content''')

    p = sub.add_parser('dynroot', parents=[common], help='''dynamical root vector''')
    p.add_argument('--alpha', type=int_list, default=None, help='''root eps_i - eps_j as i,j''')
    p.add_argument('--lambda', dest='lam', type=int_list, default=None)

    p = sub.add_parser('spectrum', parents=[common], help='''eigenvalues of Q on C^n (x) M''')
    p.add_argument('--lambda', dest='lam', type=int_list, default=None)
    return parser


REQUIRED = {
    'orbit-verify': ('mult', 'exps'),
    'enumerate-sigma': ('mult',),
    'singular': ('lam',),
    'dynroot': ('alpha',),
    'spectrum': ('lam',),
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    corrupt = getattr(args, 'inject_corruption', False)
    if hasattr(args, 'inject_corruption'):
        del args.inject_corruption
    try:
        config = RunConfig.from_args(args)
        for key in REQUIRED.get(config.subcommand, ()):
            if getattr(config, key) is None:
                raise ValueError(f'{config.subcommand} needs --{"lambda" if key == "lam" else key}')
    except (ValueError, OSError, yaml.YAMLError) as err:
        parser.error(str(err))

    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(config.verbose, 2)],
                        format='%(levelname)s %(message)s')
    try:
        if config.subcommand == 'selfcheck':
            return cmd_selfcheck(config, corrupt=corrupt)
        return COMMANDS[config.subcommand](config)
    except (OrbitError, CutoffExceeded, ValueError) as err:
        print(f'qconj {config.subcommand}: error: {err}', file=sys.stderr)
        return 2
    except ConventionError as err:
        print(f'qconj {config.subcommand}: convention check failed: {err}', file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
