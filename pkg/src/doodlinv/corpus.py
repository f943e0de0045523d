"""
Reproducible corpora of random diagrams.

Every item is the end state of a random move trace from the circle, written as a Gauss code file whose comment
header records how it was drawn. The manifest (item, crossings, sha256, seed, trace_length) is rebuilt from the files.
"""
from hashlib import sha256
from pathlib import Path
import re

import pandas as pd

from doodlinv._tools import SharedMemoryPool, printdf, time_elapsed, tt
from doodlinv.diagrams.gauss_code import parse_gauss_code, to_gauss_code
from doodlinv.diagrams.planar_diagram import PlanarDiagram
from doodlinv.errors import ValidationError
from doodlinv.moves.moves import MOVE_KINDS
from doodlinv.moves.traces import random_trace
from doodlinv.paths import get_paths

MANIFEST_COLUMNS = ['item', 'crossings', 'sha256', 'seed', 'trace_length']
_HEADER = re.compile(r'^# seed=(-?\d+) trace_length=(\d+)')


def item_seed(seed: int, item: int) -> int:
    return seed*1000003 + item


def write_item(inputs: dict) -> None:
    """Draws one item and writes it; inputs carries item, seed, trace_length, max_crossings and save_dir."""
    s = item_seed(inputs['seed'], inputs['item'])
    trace = random_trace(
        PlanarDiagram.circle(), inputs['trace_length'], s, kinds=MOVE_KINDS, max_crossings=inputs['max_crossings']
    )
    d = trace.replay()
    text = f'# seed={s} trace_length={len(trace)}\n' + to_gauss_code(d)
    path = Path(inputs['save_dir'])/f'item_{inputs["item"]:05d}.gauss'
    path.write_text(text)


def read_manifest_row(path: Path) -> dict:
    text = path.read_text()
    match = _HEADER.match(text)
    if not match:
        raise ValidationError(f'{path.name} has no corpus header')
    d = parse_gauss_code(text)
    return {
        'item': path.stem, 'crossings': d.n_crossings, 'sha256': sha256(text.encode()).hexdigest(),
        'seed': int(match.group(1)), 'trace_length': int(match.group(2)),
    }


def corpus_generate(items: int = 200, max_crossings: int = 8, trace_length: int = 12, seed: int = 0,
                    save_dir: Path = None, num_proc: int = 1, verbose: bool = False) -> pd.DataFrame:
    """
    Parameters
    ----------
    items - number of diagrams
    max_crossings - crossing bound of every running diagram
    trace_length - events drawn per item
    seed - corpus seed
    save_dir - output directory, default <corpus>/seed_<seed>
    num_proc - processes; more than one uses SharedMemoryPool

    Returns
    -------
    manifest DataFrame, also written to manifest.parquet in save_dir
    """
    if items < 0 or max_crossings < 0 or trace_length < 0:
        raise ValidationError('corpus bounds must be non-negative')
    s = tt()
    save_dir = Path(save_dir) if save_dir is not None else get_paths().corpus/f'seed_{seed}'
    save_dir.mkdir(parents=True, exist_ok=True)
    inputs = [
        {'item': i, 'seed': seed, 'trace_length': trace_length, 'max_crossings': max_crossings, 'save_dir': save_dir}
        for i in range(items)
    ]
    if num_proc > 1:
        SharedMemoryPool(write_item, inputs, num_proc, print_progress=verbose).run()
    else:
        for item in inputs:
            write_item(item)
    rows = [read_manifest_row(save_dir/f'item_{i:05d}.gauss') for i in range(items)]
    manifest = pd.DataFrame(rows, columns=MANIFEST_COLUMNS)
    manifest.to_parquet(save_dir/'manifest.parquet', engine='pyarrow', index=False)
    if verbose:
        printdf(manifest)
        time_elapsed(s, 2)
    return manifest


def read_corpus(save_dir: Path) -> list:
    """(item, PlanarDiagram) pairs in manifest order."""
    save_dir = Path(save_dir)
    manifest = pd.read_parquet(save_dir/'manifest.parquet', engine='pyarrow')
    return [(item, parse_gauss_code((save_dir/f'{item}.gauss').read_text())) for item in manifest['item']]
