'''
    HDF5 archives of certificates. Each certificate is stored in a group
    ``certificates/<index>`` holding a ``meta`` and a ``checks`` dataset
    (see ``Certificate.to_array``) with the certificate version as an
    attribute. The file itself carries the package version.

'''
import logging

import h5py

from .. import __version__
from ..analysis.certificate import Certificate
from .compat import assert_compat_version

GROUP = 'certificates'


def write_certificate(f, cert, name):
    meta_arr, check_arr = cert.to_array()
    grp = f.require_group(f'{GROUP}/{name}')
    for key in ('meta', 'checks'):
        if key in grp:
            del grp[key]
    grp.create_dataset('meta', data=meta_arr)
    grp.create_dataset('checks', data=check_arr)
    grp.attrs['version'] = cert.version
    grp.attrs['passed'] = cert.passed


def read_certificate(f, name):
    grp = f[f'{GROUP}/{name}']
    version = grp.attrs['version']
    version = version.decode() if isinstance(version, bytes) else str(version)
    assert_compat_version(Certificate.class_version, version)
    return Certificate.from_array(grp['meta'][:], grp['checks'][:], version=version)


def write_archive(path, certs, mode='w'):
    ''' Writes ``certs`` under consecutive integer names '''
    with h5py.File(path, mode) as f:
        f.attrs['qconj_version'] = __version__
        offset = len(f[GROUP]) if GROUP in f else 0
        for i, cert in enumerate(certs):
            write_certificate(f, cert, str(offset + i))
    logging.info(f'Wrote {len(certs)} certificates to {path}')


def read_archive(path):
    ''' All certificates of an archive, in the order they were written '''
    with h5py.File(path, 'r') as f:
        version = f.attrs.get('qconj_version', '0.0.0')
        version = version.decode() if isinstance(version, bytes) else str(version)
        assert_compat_version(__version__, version)
        if GROUP not in f:
            return list()
        names = sorted(f[GROUP].keys(), key=int)
        return [read_certificate(f, name) for name in names]
