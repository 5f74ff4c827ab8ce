import json

import pytest

from torsionpoly import cli
from torsionpoly.errors import NonIntegerCoefficient


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_zero_surgery(capsys):
    code, out, _ = run(capsys, 'compute', '--p', '4', '--q', '3', '--n', '0')
    assert code == 0 and out.strip() == '1'


def test_compute_trefoil(capsys):
    code, out, _ = run(capsys, 'compute', '--p', '2', '--q', '3', '--n', '-1')
    assert code == 0 and out.strip() == '4t^2 - 6t + 1'


def test_compute_scaled(capsys):
    code, out, _ = run(capsys, 'compute', '--p', '4', '--q', '3', '--n', '-1', '--scaled')
    assert code == 0
    text = out.strip()
    assert text.startswith('34359738368t^10 ')
    assert text.endswith('- 480t + 1')


def test_compute_latex(capsys):
    code, out, _ = run(capsys, 'compute', '--p', '4', '--q', '3', '--n', '-1',
                       '--scaled', '--latex')
    assert code == 0
    assert out.strip().startswith('34359738368t^{10}-77309411328t^9+')
    assert out.strip().endswith('-480t+1')


def test_json_record_and_roundtrip(capsys):
    code, out, _ = run(capsys, 'compute', '--p', '3', '--q', '5', '--n', '1', '--json',
                       '--scaled', '--classes')
    assert code == 0
    rec = json.loads(out)
    assert list(rec)[:8] == ['p', 'q', 'n', 'N', 'degree', 'normalization',
                             'sign_corrected', 'coefficients']
    assert rec['N'] == 16 and rec['degree'] == 16
    assert len(rec['coefficients']) == rec['degree'] + 1
    assert rec['coefficients'][0] == str(rec['normalization'])
    assert all(isinstance(c, str) for c in rec['coefficients'])
    assert rec['scaled_coefficients'][-1] == '4611686018427387904'
    assert len(rec['acyclic_classes']) == 16
    assert json.dumps(json.loads(out), indent=2) == out.rstrip('\n')


def test_cache_appends_ndjson(tmp_path, capsys):
    cache = tmp_path / 'records.ndjson'
    for n in ('1', '-1'):
        assert cli.main(['compute', '--p', '2', '--q', '5', '--n', n,
                         '--cache', str(cache)]) == 0
    capsys.readouterr()
    lines = cache.read_text(encoding='utf-8').splitlines()
    assert len(lines) == 2
    for line in lines:
        assert cli.dump_record(json.loads(line), compact=True) == line


def test_reps_table(capsys):
    code, out, _ = run(capsys, 'reps', '--p', '2', '--q', '3', '--n', '-1')
    assert code == 0
    rows = [l.split() for l in out.splitlines()[2:]]
    assert [r[:3] for r in rows] == [['1', '1', '1'], ['1', '1', '3']]


def test_reps_counts(capsys):
    code, out, _ = run(capsys, 'reps', '--p', '4', '--q', '3', '--n', '-1', '--json')
    data = json.loads(out)
    assert len(data['classes']) == 10
    assert {(c['a'], c['b']) for c in data['classes']} == {(1, 1), (3, 1)}
    code, out, _ = run(capsys, 'reps', '--p', '4', '--q', '3', '--n', '-1', '--all',
                       '--json')
    assert any(not c['acyclic'] for c in json.loads(out)['classes'])


def test_reps_zero_surgery(capsys):
    code, out, _ = run(capsys, 'reps', '--p', '4', '--q', '3', '--n', '0')
    assert code == 0 and 'S^3' in out


def test_verify_fixtures(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'fixtures')
    assert code == 0
    assert out.count('PASS fixtures') == 4


def test_verify_relation_35(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'relation', '--p', '3', '--q', '5')
    assert code == 0
    assert out.count('step 2') == 4


@pytest.mark.parametrize('suite', ['normalization', 'degree', 'oracle', 'roots'])
def test_verify_small_grid(capsys, suite):
    code, out, _ = run(capsys, 'verify', '--suite', suite, '--grid', '4,5,1')
    assert code == 0 and 'FAIL' not in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, 'normalization_value', lambda d: 7)
    code, out, _ = run(capsys, 'verify', '--suite', 'normalization', '--p', '2',
                       '--q', '3', '--n', '1')
    assert code == 1 and 'FAIL' in out


@pytest.mark.parametrize('argv', [
    ['compute', '--p', '4', '--q', '6', '--n', '1'],
    ['compute', '--p', '1', '--q', '3', '--n', '1'],
    ['reps', '--p', '6', '--q', '9', '--n', '1'],
    ['verify', '--suite', 'degree', '--grid', 'a,b'],
    ['verify', '--suite', 'degree', '--grid', '4,4,1', '--p', '2', '--q', '3'],
    ['verify', '--suite', 'degree', '--p', '2'],
    ['compute', '--p', '2', '--q', '3', '--n', '1', '--precision', '8'],
])
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith('error:')


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(['verify', '--suite', 'bogus'])
    assert exc.value.code == 2


def test_internal_error_exit_3(capsys, monkeypatch):
    def boom(d):
        raise NonIntegerCoefficient('coefficient of t^1 is not an integer')

    monkeypatch.setattr(cli, 'sigma', boom)
    code, _, err = run(capsys, 'compute', '--p', '2', '--q', '3', '--n', '1')
    assert code == 3 and 'internal error' in err


def test_precision_env(monkeypatch, capsys):
    monkeypatch.setenv('TORSIONPOLY_PRECISION', '200')
    code, out, _ = run(capsys, 'reps', '--p', '2', '--q', '3', '--n', '-1', '--json')
    digits = json.loads(out)['classes'][0]['inv_torsion']
    assert len(digits.replace('0.', '', 1)) > 50
    monkeypatch.setenv('TORSIONPOLY_PRECISION', 'lots')
    code, _, _ = run(capsys, 'reps', '--p', '2', '--q', '3', '--n', '-1')
    assert code == 2
