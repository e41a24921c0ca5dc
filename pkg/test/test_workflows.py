import json

import pytest

from qconj.analysis.certificate import Certificate
from qconj.cli import main


def run_workflow(path, out):
    print(f'Running {path}...')
    code = main(['orbit-verify', '--config', path, '--no-progress', '--out', str(out)])
    document = json.loads(out.read_text())
    if 'certificates' in document:
        return code, [Certificate.from_dict(d) for d in document['certificates']], document['agreement']
    return code, [Certificate.from_dict(document)], None


def check_traces(cert):
    traces = [c for c in cert.checks if c.name.startswith('q-trace')]
    assert len(traces) == len(cert.exps)
    assert all(c.status == 'pass' for c in traces), cert.summary()


@pytest.mark.slow
def test_orbit_levi(tmp_path):
    code, certs, agreement = run_workflow('yamls/qconj/workflows/orbit_levi.yaml', tmp_path / 'levi.json')
    assert code == 0
    assert len(certs) == 3
    for cert in certs:
        assert cert.passed, cert.summary()
        assert cert.cutoff == 4
        check_traces(cert)
    assert agreement['status'] == 'pass'


@pytest.mark.slow
def test_orbit_non_levi(tmp_path):
    code, (cert,), _ = run_workflow('yamls/qconj/workflows/orbit_non_levi.yaml', tmp_path / 'non_levi.json')
    assert code == 0
    assert cert.sigma == [1, 3, 2, 4]
    assert cert['generator singularity'].status == 'pass'
    assert cert['minimal polynomial'].witness['degree'] == 2
    check_traces(cert)


@pytest.mark.slow
def test_orbit_regular(tmp_path):
    code, certs, agreement = run_workflow('yamls/qconj/workflows/orbit_regular.yaml', tmp_path / 'regular.json')
    assert code == 0
    assert len(certs) == 6
    for cert in certs:
        check_traces(cert)
        assert cert['extended q-trace m=4'].status in ('pass', 'skip')
    assert agreement['status'] == 'pass'
