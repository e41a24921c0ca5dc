'''
    Verification certificates: a list of named checks with exact witnesses,
    serialized to JSON or to a structured numpy array for HDF5 archives.

'''
import json

import numpy as np

STATUSES = ('pass', 'fail', 'skip')


class Check(object):
    '''
        One named check of a certificate.

        Parameters:
         - ``name`` : ``str``
         - ``anchor`` : ``str``, the statement the check verifies
         - ``status`` : ``str``, one of ``'pass'``, ``'fail'``, ``'skip'``
         - ``witness`` : ``dict``, JSON-compatible exact data (scalars in the ``scalars`` text format)

    '''

    def __init__(self, name, anchor, status, witness=None):
        if status not in STATUSES:
            raise ValueError(f'Unknown check status {status!r}, expected one of {STATUSES}')
        self.name = name
        self.anchor = anchor
        self.status = status
        self.witness = witness if witness is not None else dict()

    @classmethod
    def from_bool(cls, name, anchor, ok, witness=None):
        return cls(name, anchor, 'pass' if ok else 'fail', witness)

    @property
    def passed(self):
        return self.status != 'fail'

    def to_dict(self):
        return dict(name=self.name, anchor=self.anchor, status=self.status, witness=self.witness)

    @classmethod
    def from_dict(cls, d):
        return cls(d['name'], d['anchor'], d['status'], d.get('witness'))

    def __eq__(self, other):
        return isinstance(other, Check) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f'Check({self.name!r}, {self.status!r})'


class Certificate(object):
    '''
        Outcome of verifying one orbit at one admissible permutation.

        Parameters:
         - ``n`` : ``int``
         - ``mult`` : ``list`` of ``int``, block multiplicities
         - ``exps`` : ``list`` of ``int``, eigenvalue exponents
         - ``sigma`` : ``list`` of ``int``, 1-based images
         - ``cutoff`` : ``int``
         - ``conventions`` : ``dict``
         - ``checks`` : ``list`` of ``Check``

        JSON layout::

            {"n": 3, "mult": [2, 1], "exps": [5, 0], "sigma": [1, 2, 3], "cutoff": 4,
             "conventions": {...},
             "checks": [{"name": ..., "anchor": ..., "status": "pass", "witness": {...}}],
             "version": "0.1.0"}

    '''
    class_version = '0.1.0'

    def __init__(self, n, mult, exps, sigma, cutoff, conventions=None, checks=None, version=None):
        self.n = int(n)
        self.mult = [int(m) for m in mult]
        self.exps = [int(a) for a in exps]
        self.sigma = [int(s) for s in sigma]
        self.cutoff = int(cutoff)
        self.conventions = dict(conventions or dict())
        self.checks = list(checks or list())
        self.version = version or self.class_version

    def add(self, check):
        self.checks.append(check)
        return check

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == 'fail']

    def header(self):
        return dict(n=self.n, mult=self.mult, exps=self.exps, sigma=self.sigma, cutoff=self.cutoff)

    def to_dict(self):
        d = self.header()
        d['conventions'] = self.conventions
        d['checks'] = [c.to_dict() for c in self.checks]
        d['version'] = self.version
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d['n'], d['mult'], d['exps'], d['sigma'], d['cutoff'],
                   conventions=d.get('conventions'),
                   checks=[Check.from_dict(c) for c in d.get('checks', list())],
                   version=d.get('version'))

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, Certificate) and self.to_dict() == other.to_dict()

    def __repr__(self):
        status = 'pass' if self.passed else 'fail'
        return f'Certificate(mult={self.mult}, exps={self.exps}, sigma={self.sigma}, {status})'

    def summary(self):
        ''' One line per check '''
        lines = [f'orbit mult={self.mult} exps={self.exps} sigma={self.sigma} cutoff={self.cutoff}']
        for c in self.checks:
            lines.append(f'  [{c.status:>4}] {c.name}')
        return '\n'.join(lines)

    def to_array(self):
        '''
            Array-based representation for HDF5 storage. Returns a meta
            array with dtype::

                dtype([('n', 'i8'), ('cutoff', 'i8'), ('mult', 'i8', (k,)), ('exps', 'i8', (k,)),
                       ('sigma', 'i8', (n,)), ('conventions', 'S{len}')])

            and ``shape: (1,)``, and a check array with dtype::

                dtype([('name', 'S{len}'), ('anchor', 'S{len}'), ('status', 'S4'), ('witness', 'S{len}')])

            and ``shape: (N,)``. Witnesses and conventions are stored as JSON.

            :returns: ``tuple`` of meta-array and check-array
        '''
        k, n = len(self.mult), len(self.sigma)
        conventions = json.dumps(self.conventions).encode()
        dtype_meta = np.dtype([
            ('n', 'i8'), ('cutoff', 'i8'), ('mult', 'i8', (k,)), ('exps', 'i8', (k,)),
            ('sigma', 'i8', (n,)), ('conventions', f'S{max(len(conventions), 1)}')
        ])
        meta_arr = np.zeros((1,), dtype=dtype_meta)
        meta_arr['n'] = self.n
        meta_arr['cutoff'] = self.cutoff
        meta_arr['mult'] = self.mult
        meta_arr['exps'] = self.exps
        meta_arr['sigma'] = self.sigma
        meta_arr['conventions'] = conventions

        rows = [(c.name.encode(), c.anchor.encode(), c.status.encode(), json.dumps(c.witness).encode())
                for c in self.checks]

        def width(i):
            return max([len(r[i]) for r in rows] + [1])

        dtype_checks = np.dtype([
            ('name', f'S{width(0)}'), ('anchor', f'S{width(1)}'),
            ('status', 'S4'), ('witness', f'S{width(3)}')
        ])
        check_arr = np.array(rows, dtype=dtype_checks)
        return meta_arr, check_arr

    @staticmethod
    def from_array(meta_arr, check_arr, version=None):
        '''
            Inverse of ``Certificate.to_array()``

            :returns: ``Certificate`` object
        '''
        meta = meta_arr[0]
        checks = [Check(row['name'].decode(), row['anchor'].decode(), row['status'].decode(),
                        json.loads(row['witness'].decode()))
                  for row in check_arr]
        return Certificate(int(meta['n']), meta['mult'].tolist(), meta['exps'].tolist(),
                           meta['sigma'].tolist(), int(meta['cutoff']),
                           conventions=json.loads(meta['conventions'].decode()),
                           checks=checks, version=version)
