import io
import json

import pytest

from doodlinv import __version__
from doodlinv.cli import run

from conftest import FIGURE_EIGHT, TREFOIL


def call(argv) -> tuple:
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


@pytest.fixture
def eight_file(tmp_path):
    path = tmp_path/'eight.gauss'
    path.write_text(FIGURE_EIGHT + '\n')
    return str(path)


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path/'trefoil.gauss'
    path.write_text(TREFOIL + '\n')
    return str(path)


def test_strangeness(eight_file):
    code, out = call(['invariant', 'strangeness', '--input', eight_file])
    assert code == 0
    report = json.loads(out)
    assert report['value'] == 0
    assert report['version'] == __version__
    assert report['seed'] == 0
    assert report['ring'] == 'Z'
    assert report['config']['inputs'] == [eight_file]


def test_diagram_info(trefoil_file):
    code, out = call(['diagram', 'info', '--input', trefoil_file, '--max-beta', '2'])
    assert code == 0
    report = json.loads(out)
    assert report['crossings'] == 3
    assert set(report['moments']) == {'1', '2'}


def test_polyline_input(tmp_path):
    path = tmp_path/'bowtie.json'
    path.write_text('[[0, 0], [2, 2], [2, 0], [0, 2]]')
    code, out = call(['diagram', 'validate', '--input', str(path)])
    assert code == 0
    assert json.loads(out)['crossings'] == 1


def test_bad_input_exits_one(tmp_path, capsys):
    assert call(['invariant', 'strangeness'])[0] == 1
    assert call(['invariant', 'strangeness', '--input', str(tmp_path/'missing.gauss')])[0] == 1
    bad = tmp_path/'bad.gauss'
    bad.write_text('1 2 1 2 ; 1:+ 2:-\n')
    code, out = call(['diagram', 'validate', '--input', str(bad)])
    assert code == 1
    assert out == ''
    assert 'error:' in capsys.readouterr().err
    assert call(['cliques', 'modes', '--code', 'AAAA', '--ring', 'Z4'])[0] == 1


def test_cliques(tmp_path):
    code, out = call(['cliques', 'enumerate', '--max-complexity', '4'])
    assert code == 0
    report = json.loads(out)
    assert report['count'] == 6
    assert report['by_complexity'] == {'2': 1, '3': 1, '4': 4}
    code, out = call(['cliques', 'modes', '--code', 'AAAA'])
    assert json.loads(out)['processes'] == 16


def test_reports_are_reproducible(trefoil_file):
    argv = ['moves', 'trace', '--input', trefoil_file, '--steps', '5', '--seed', '4']
    first, second = call(argv), call(argv)
    assert first == second
    assert json.loads(first[1])['seed'] == 4


def test_text_format(eight_file):
    code, out = call(['invariant', 'strangeness', '--input', eight_file, '--format', 'text'])
    assert code == 0
    assert 'value: 0' in out.splitlines()


def test_corpus_command(tmp_path):
    argv = ['corpus', 'generate', '--items', '3', '--max-crossings', '3', '--trace-length', '4',
            '--out', str(tmp_path)]
    code, out = call(argv)
    assert code == 0
    assert json.loads(out)['items'] == 3
    assert (tmp_path/'manifest.parquet').exists()
