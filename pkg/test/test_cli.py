import argparse
import json

import pytest
import yaml

from qconj.algebra.scalars import q_pow, format_scalar
from qconj.analysis.certificate import Certificate
from qconj.cli import main, int_list, RunConfig
from qconj.util.archive import read_archive


def test_int_list():
    assert int_list('1, 2,3') == [1, 2, 3]
    assert int_list([4, '5']) == [4, 5]

    with pytest.raises(argparse.ArgumentTypeError):
        int_list('1,a')


def test_run_config():
    config = RunConfig(subcommand='orbit-verify', mult='2,1', exps=[5, 0])
    assert config.n == 3
    assert config.sigma == 'all'
    assert config.progress

    with pytest.raises(ValueError):
        RunConfig(subcommand='spectrum', lam=[1, 2], n=3)

    with pytest.raises(ValueError):
        RunConfig(subcommand='orbit-verify', mult=[2, 1], exps=[5, 0], sigma='1,2')

    with pytest.raises(ValueError):
        RunConfig(subcommand='spectrum', lam=[1, 2], cutoff=-1)


def test_enumerate_sigma(capsys):
    assert main(['enumerate-sigma', '--mult', '2,2']) == 0
    out = capsys.readouterr().out
    assert '6 admissible permutations' in out
    assert out.count('non-levi') == 4


def test_enumerate_sigma_json(capsys):
    assert main(['enumerate-sigma', '--mult', '2,1', '--exps', '5,0', '--json']) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r['sigma'] for r in rows] == [[1, 2, 3], [1, 3, 2], [2, 3, 1]]
    assert rows[2]['x_exponents'] == [-4, 10]


def test_enumerate_sigma_exps_mismatch():
    with pytest.raises(SystemExit) as err:
        main(['enumerate-sigma', '--mult', '2,1', '--exps', '5,0,9'])
    assert err.value.code == 2

    with pytest.raises(ValueError):
        RunConfig(subcommand='enumerate-sigma', mult=[2, 1], exps=[5])


def test_spectrum(capsys):
    assert main(['spectrum', '--lambda', '3,1', '--cutoff', '3', '--json']) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['eigenvalues'] == [format_scalar(q_pow(6)), format_scalar(q_pow(0))]
    assert len(result['coefficients']) == 3


def test_singular(capsys):
    assert main(['singular', '--lambda', '4,2,0', '--content', '3,0', '--json']) == 0
    assert json.loads(capsys.readouterr().out)['dimension'] == 1

    assert main(['singular', '--lambda', '4,2,0', '--weight', '+e2', '--json']) == 0
    assert json.loads(capsys.readouterr().out)['dimension'] == 1

    assert main(['singular', '--lambda', '4,2,0', '--weight', 'e2']) == 2


def test_dynroot(capsys):
    assert main(['dynroot', '--alpha', '1,3', '--lambda', '4,2,0']) == 0
    out = capsys.readouterr().out
    assert 'f_(eps_1 - eps_3)' in out
    assert 'applied to v' in out


def test_invalid_input(capsys):
    # a_i - m_i + 1 collide
    assert main(['orbit-verify', '--mult', '2,1', '--exps', '0,2']) == 2
    assert 'collision' in capsys.readouterr().err

    with pytest.raises(SystemExit) as err:
        main(['spectrum'])
    assert err.value.code == 2

    with pytest.raises(SystemExit) as err:
        main(['orbit-verify', '--mult', '2,1', '--exps', '5,0', '--sigma', '1,2'])
    assert err.value.code == 2


def test_orbit_verify(tmp_path, tmp_h5_file):
    out = tmp_path / 'cert.json'
    argv = ['orbit-verify', '--mult', '1,1', '--exps', '3,1', '--sigma', '1,2', '--cutoff', '2',
            '--out', str(out), '--h5', tmp_h5_file]
    assert main(argv) == 0
    cert = Certificate.from_json(out.read_text())
    assert cert.passed
    assert cert.sigma == [1, 2]
    assert read_archive(tmp_h5_file) == [cert]


def test_orbit_verify_config(tmp_path, capsys):
    config = tmp_path / 'orbit.yaml'
    config.write_text(yaml.dump(dict(mult=[1, 1], exps=[3, 1], cutoff=2, progress=False)))
    assert main(['orbit-verify', '--config', str(config), '--json']) == 0
    out = capsys.readouterr().out
    document = json.loads(out[out.index('\n{') + 1:])
    assert len(document['certificates']) == 2
    assert document['agreement']['status'] == 'pass'


@pytest.mark.slow
def test_selfcheck_corruption(capsys):
    assert main(['selfcheck', '--inject-corruption']) == 1
    assert 'selfcheck FAILED' in capsys.readouterr().out
