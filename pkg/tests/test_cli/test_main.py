import io
import json

import matplotlib
import pytest

matplotlib.use('Agg')

from homoglue import resolve
from homoglue.cli.main import build_parser, run
from homoglue.fixtures import fixture

SES = """\
module left
dims 0 1
module middle
dims 1 1
map a
1
module right
dims 1 0
morphism f
block 1
1
morphism g
block 0
1
"""


def _records(argv):
    stream = io.StringIO()
    code = run(argv + ['--format', 'json-lines'], stream=stream)
    return code, [json.loads(line) for line in stream.getvalue().splitlines()]


def test_parser_commands():
    parser = build_parser()
    args = parser.parse_args(['resolve', '--algebra', 'kA2', '--simple', '0',
                              '--cutoff', '3'])
    assert args.command == 'resolve'
    assert args.cutoff == 3
    assert args.simple == 0
    assert args.format == 'text'


def test_resolve():
    code, records = _records(['resolve', '--algebra', 'kA2', '--simple', '0',
                              '--length', '2'])
    assert code == 0
    record, = records
    assert record['dims'] == [[1, 1], [0, 1], [0, 0]]
    assert record['pd'] == 1
    assert record['module'] == 'S(0)'
    assert record['complex'].startswith('complex resolution')


def test_coresolve_text():
    stream = io.StringIO()
    code = run(['coresolve', '--algebra', 'kA2', '--simple', '1',
                '--length', '2'], stream=stream)
    assert code == 0
    assert stream.getvalue().startswith('# id = 1\ncomplex coresolution')


def test_auslander():
    code, records = _records(['auslander', '--algebra', 'kron2', '--sample',
                              '0', '--depth', '1'])
    assert code == 0
    record, = records
    assert record['holds'] is False
    assert record['classification'] == 'none'
    assert record['conditions']['regular_module'] is False
    assert record['alarms'] == []


def test_auslander_structural():
    code, records = _records(['auslander', '--algebra', 'kA2', '--sample',
                              '0', '--depth', '2', '--structural'])
    assert code == 0
    assert len(records[0]['structural']) == 11
    assert records[0]['classification'] == 'regular(1)'


def test_verdict():
    code, records = _records(['verdict', 'gorenstein', '--algebra', 'kA2',
                              '--n', '1', '--sample', '0'])
    assert code == 0
    assert records[0]['condition'] is True
    assert records[0]['bound'] == 1


def test_approx_cosyzygy():
    code, records = _records(['approx', 'cosyzygy', '--algebra', 'kA2'])
    assert code == 0
    assert [r['module'] for r in records] == ['S(0)', 'S(1)']
    assert [r['n'] for r in records] == [1, 0]
    assert all(r['certified'] for r in records)


def test_approx_hypothesis_fails(capsys):
    code = run(['approx', 'left', '--algebra', 'kron2', '--simple', '1'],
               stream=io.StringIO())
    assert code == 2
    assert 'homoglue approx:' in capsys.readouterr().err


def test_glue(tmp_path):
    ses = tmp_path / 'cover.ses'
    ses.write_text(SES)
    code, records = _records(['glue', 'last', '--algebra', 'kA2', '--ses',
                              str(ses), '--length', '2', '--require',
                              'strong'])
    assert code == 0
    record, = records
    assert record['exact'] is True
    assert record['strong'] is True
    assert len(record['dims']) == 3
    code = run(['glue', 'first', '--algebra', 'kA2', '--ses', str(ses),
                '--require', 'strong'], stream=io.StringIO())
    assert code == 2
    code = run(['glue', 'last', '--algebra', 'kA2', '--ses', str(ses),
                '--spec', 'injectives', '--length', '1', '--require',
                'proper'], stream=io.StringIO())
    assert code == 2


def test_fixture_and_export(tmp_path):
    code, records = _records(['fixture', 'kA2'])
    assert code == 0
    assert records[0]['gldim'] == 1
    assert records[0]['simple_pd'] == [1, 0]
    output = tmp_path / 'kA2.alg'
    assert run(['export', 'kA2', '--output', str(output)],
               stream=io.StringIO()) == 0
    assert output.read_text() == fixture('kA2').to_text()
    code, records = _records(['resolve', '--algebra', str(output),
                              '--projective', '0', '--length', '1'])
    assert code == 0
    assert records[0]['dims'] == [[1, 1], [0, 0]]
    assert records[0]['pd'] == 0


def test_selftest():
    code, records = _records(['fixture', 'kA2', '--selftest', '--p', '3',
                              '--sample', '1'])
    assert code == 0
    assert records[0]['mismatches'] == []


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / 'bad.alg'
    bad.write_text('field 5\nvertices 2\nbogus\n')
    assert run(['resolve', '--algebra', str(bad), '--simple', '0'],
               stream=io.StringIO()) == 2
    assert 'bad.alg:3:1: unknown keyword' in capsys.readouterr().err
    missing = str(tmp_path / 'missing.alg')
    assert run(['resolve', '--algebra', missing, '--simple', '0'],
               stream=io.StringIO()) == 2
    assert run(['resolve', '--algebra', 'kA2', '--simple', '5'],
               stream=io.StringIO()) == 2
    assert run(['resolve', '--algebra', 'kA2'], stream=io.StringIO()) == 2


def test_usage():
    assert run(['resolve'], stream=io.StringIO()) == 2
    assert run(['resolve', '--algebra', 'kA2', '--cutoff', '-1'],
               stream=io.StringIO()) == 2


def test_plot(tmp_path):
    output = tmp_path / 'quiver.png'
    assert run(['plot', 'quiver', '--algebra', 'kron2', '--output',
                str(output)], stream=io.StringIO()) == 0
    assert output.exists()


def test_unmet_hypothesis_is_usage_error(tmp_path, capsys):
    assert run(['verdict', 'gorenstein', '--algebra', 'kA2', '--n', '0'],
               stream=io.StringIO()) == 2
    assert 'homoglue verdict: The gorenstein verdict needs n >= 1' in (
        capsys.readouterr().err)
    ses = tmp_path / 'cover.ses'
    ses.write_text(SES)
    assert run(['glue', 'first', '--algebra', 'kA2', '--ses', str(ses),
                '--require', 'proper'], stream=io.StringIO()) == 2
    assert 'applies to "last" and "first-cores" only' in (
        capsys.readouterr().err)
    assert run(['fixture', 'kA2', '--p', '4'], stream=io.StringIO()) == 2


def test_internal_error_is_alarm(monkeypatch, capsys):

    def broken(module, length):
        raise ValueError('broken contract')

    monkeypatch.setattr(resolve, 'min_resolution', broken)
    assert run(['resolve', '--algebra', 'kA2', '--simple', '0'],
               stream=io.StringIO()) == 1
    assert ('homoglue resolve: internal error: broken contract'
            in capsys.readouterr().err)


@pytest.mark.parametrize('argv', [
    ['auslander', '--algebra', 'kron2', '--depth', '2', '--sample', '4',
     '--seed', '3'],
    ['glue', 'last', '--algebra', 'kA2', '--length', '3'],
    ['approx', 'cosyzygy', '--algebra', 'kA2'],
])
def test_json_lines_deterministic(tmp_path, argv):
    if argv[0] == 'glue':
        ses = tmp_path / 'cover.ses'
        ses.write_text(SES)
        argv = argv + ['--ses', str(ses)]
    outputs = []
    for _ in range(2):
        stream = io.StringIO()
        run(argv + ['--format', 'json-lines'], stream=stream)
        outputs.append(stream.getvalue().encode())
    assert outputs[0] == outputs[1]
    assert outputs[0]
