import pytest

from qconj.analysis.selfcheck import SUITES, run_suites, suite_scalars, suite_rootdata


def test_suite_scalars():
    ok, detail = suite_scalars()
    assert ok
    assert detail['failures'] == []

    ok, detail = suite_scalars(corrupt=True)
    assert not ok
    assert detail['failures']


def test_suite_rootdata():
    ok, detail = suite_rootdata()
    assert ok
    assert detail['admissible'] == {'2,1': 3, '1,1,1': 6, '2,2': 6}


def test_run_suites_selection():
    results = run_suites(names=['rootdata'])
    assert [r['name'] for r in results] == ['rootdata']
    assert results[0]['ok']

    results = run_suites(corrupt=True, names=['rootdata'])
    assert [r['name'] for r in results] == ['scalars', 'rootdata']
    assert not results[0]['ok']


@pytest.mark.slow
def test_run_suites():
    results = run_suites()
    assert [r['name'] for r in results] == [name for name, _ in SUITES]
    assert all(r['ok'] for r in results), [r for r in results if not r['ok']]
