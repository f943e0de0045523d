import pytest

from doodlinv.corpus import MANIFEST_COLUMNS, corpus_generate, read_corpus
from doodlinv.errors import ValidationError


def test_corpus_is_reproducible(tmp_path):
    first = corpus_generate(5, 4, 6, seed=1, save_dir=tmp_path/'a')
    second = corpus_generate(5, 4, 6, seed=1, save_dir=tmp_path/'b')
    assert list(first.columns) == MANIFEST_COLUMNS
    assert list(first['sha256']) == list(second['sha256'])
    assert (first['crossings'] <= 4).all()
    assert (first['trace_length'] <= 6).all()


def test_seeds_differ(tmp_path):
    first = corpus_generate(5, 4, 6, seed=1, save_dir=tmp_path/'a')
    other = corpus_generate(5, 4, 6, seed=2, save_dir=tmp_path/'b')
    assert set(first['seed']).isdisjoint(other['seed'])


def test_empty_traces_give_circles(tmp_path):
    manifest = corpus_generate(3, 4, 0, save_dir=tmp_path)
    assert (manifest['crossings'] == 0).all()
    for _, d in read_corpus(tmp_path):
        assert d.is_circle


def test_read_corpus(tmp_path):
    manifest = corpus_generate(4, 3, 5, seed=7, save_dir=tmp_path)
    items = read_corpus(tmp_path)
    assert [item for item, _ in items] == list(manifest['item'])
    assert [d.n_crossings for _, d in items] == list(manifest['crossings'])


def test_negative_bounds(tmp_path):
    with pytest.raises(ValidationError):
        corpus_generate(-1, 4, 6, save_dir=tmp_path)
    with pytest.raises(ValidationError):
        corpus_generate(2, 4, -3, save_dir=tmp_path)
