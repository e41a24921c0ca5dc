import h5py
import pytest

from qconj import __version__
from qconj.analysis.certificate import Check, Certificate
from qconj.util.archive import write_archive, read_archive


def make_certificate(sigma, ok=True):
    cert = Certificate(2, [1, 1], [3, 1], sigma, 2, conventions=dict(orientation='PR'))
    cert.add(Check.from_bool('minimal polynomial', 'anchor', ok, dict(degree=2)))
    return cert


def test_archive_roundtrip(tmp_h5_file):
    certs = [make_certificate([1, 2]), make_certificate([2, 1], ok=False)]
    write_archive(tmp_h5_file, certs)
    assert read_archive(tmp_h5_file) == certs

    with h5py.File(tmp_h5_file, 'r') as f:
        assert f.attrs['qconj_version'] == __version__
        assert bool(f['certificates/0'].attrs['passed'])
        assert not bool(f['certificates/1'].attrs['passed'])


def test_archive_append(tmp_h5_file):
    write_archive(tmp_h5_file, [make_certificate([1, 2])])
    write_archive(tmp_h5_file, [make_certificate([2, 1])], mode='a')
    certs = read_archive(tmp_h5_file)
    assert [c.sigma for c in certs] == [[1, 2], [2, 1]]


def test_archive_incompatible(tmp_h5_file):
    cert = make_certificate([1, 2])
    cert.version = '9.0.0'
    write_archive(tmp_h5_file, [cert])
    with pytest.raises(AssertionError):
        read_archive(tmp_h5_file)
