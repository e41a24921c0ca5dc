import pytest

from qconj.analysis.certificate import Certificate
from qconj.util.compat import assert_compat_version, parse_version
from qconj.util.archive import write_archive, read_archive


def test_parse_version():
    assert parse_version('0.1.0') == (0, 1, 0)
    assert parse_version(Certificate.class_version) == (0, 1, 0)

    for bad in ('1.2', '1.2.x', '', 'v1.2.3'):
        with pytest.raises(ValueError):
            parse_version(bad)


@pytest.mark.parametrize('reader,writer,ok', [
    ('0.1.0', '0.1.0', True),
    ('0.1.0', '0.1.7', True),
    ('0.1.0', '0.0.3', True),
    ('0.2.0', '0.1.0', True),
    ('0.1.0', '0.2.0', False),
    ('0.1.0', '1.1.0', False),
    ('1.0.0', '0.1.0', False),
])
def test_reader_writer_versions(reader, writer, ok):
    if ok:
        assert_compat_version(reader, writer)
    else:
        with pytest.raises(AssertionError):
            assert_compat_version(reader, writer)


def test_archive_older_minor(tmp_h5_file):
    cert = Certificate(2, [1, 1], [3, 1], [1, 2], 2)
    cert.version = '0.0.9'
    write_archive(tmp_h5_file, [cert])
    (read,) = read_archive(tmp_h5_file)
    assert read.version == '0.0.9'
    assert read.sigma == [1, 2]
