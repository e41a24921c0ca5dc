'''
    Version checks for archived certificates.

'''


def parse_version(version):
    ''' ``'major.minor.patch'`` -> ``(major, minor, patch)`` '''
    parts = str(version).split('.')
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        raise ValueError(f'Malformed version string {version!r}')
    return tuple(int(p) for p in parts)


def assert_compat_version(version, other_version):
    '''
        Raises an ``AssertionError`` if data written at ``other_version``
        cannot be read by code at ``version``: the major versions must
        agree and the minor version of the data must not be newer.

        :param version: reader version ``str`` formatted ``'major.minor.patch'``

        :param other_version: writer version ``str`` formatted ``'major.minor.patch'``

        :returns: ``None``
    '''
    major, minor, _ = parse_version(version)
    other_major, other_minor, _ = parse_version(other_version)

    assert major == other_major, f'Major version incompatible! Archive has {other_major}, reader has {major}'
    assert other_minor <= minor, f'Minor version incompatible! Archive has {other_major}.{other_minor}, ' \
        f'reader has {major}.{minor}'
