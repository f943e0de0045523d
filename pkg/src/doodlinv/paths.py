import os
import sys
import warnings
from dataclasses import dataclass, field, asdict
from functools import lru_cache
from pathlib import Path

import yaml

from doodlinv.errors import ValidationError


def save_yaml(file_name: Path, obj) -> None:
    with open(file_name, 'w') as file:
        yaml.dump(obj, file)


def open_yaml(file_name: Path):
    with open(file_name, 'r') as file:
        obj = yaml.safe_load(file)
    return obj


package_path = Path(__file__).parent
src_path = package_path.parent


def find_base_path() -> Path:
    """
    Returns the first directory containing "configuration_files", searching from the working directory,
    its parents, and the source checkout. Falls back to the working directory.
    """
    candidates = [
        Path(os.getcwd()), Path(os.getcwd()).parent, Path(os.getcwd()).parent.parent,
        src_path.parent, Path(sys.path[0]), Path(sys.path[0]).parent
    ]
    for candidate in candidates:
        if (candidate/'configuration_files').exists():
            return candidate
    warnings.warn(
        f'No "configuration_files" directory found near {os.getcwd()}; using it as the base path.',
        category=RuntimeWarning
    )
    return Path(os.getcwd())


class ProjPaths:
    """
    paths for the project

    Directories are created the first time they are requested, so importing doodlinv never touches the disk.
    """

    def __init__(self, base: Path = None) -> None:
        self.base_path = find_base_path() if base is None else Path(base)
        self.configuration_files = self.base_path/'configuration_files'
        self._path_config = {}
        if (self.configuration_files/'path_configuration.yaml').exists():
            self._path_config = open_yaml(self.configuration_files/'path_configuration.yaml') or {}
        if self._path_config.setdefault('directories', {}) is None:
            self._path_config['directories'] = {}
        if self._path_config.setdefault('files', {}) is None:
            self._path_config['files'] = {}

    @property
    def data(self) -> Path:
        return self.add_directory('data', self.base_path)

    @property
    def corpus(self) -> Path:
        return self.add_directory('corpus', self.data)

    @property
    def reports(self) -> Path:
        return self.add_directory('reports', self.data)

    def add_directory(self, directory_name, directory_parent, key=None) -> Path:
        key = directory_name if key is None else key
        if key not in self._path_config['directories']:
            directory_path = Path(directory_parent)/directory_name
        else:
            directory_path = Path(self._path_config['directories'][key])
        directory_path.mkdir(parents=True, exist_ok=True)
        return directory_path


@lru_cache(maxsize=1)
def get_paths() -> ProjPaths:
    return ProjPaths()


def parse_ring(ring) -> int:
    """
    Converts a ring description to its characteristic: 'Z' -> 0, 'Z5' or 5 -> 5.
    """
    if isinstance(ring, int):
        p = ring
    else:
        text = str(ring).strip().upper()
        if text in ('Z', '0'):
            return 0
        text = text[1:] if text.startswith('Z') else text
        if not text.isdigit():
            raise ValidationError(f'unknown ring {ring!r}, expected Z or Zp')
        p = int(text)
    if p != 0 and (p < 2 or any(p % d == 0 for d in range(2, int(p**.5) + 1))):
        raise ValidationError(f'ring Z{p} is not a prime field')
    return p


def ring_name(p: int) -> str:
    return 'Z' if p == 0 else f'Z{p}'


@dataclass
class RunConfig:
    """
    Settings for one run of the command line tool; every report embeds them.
    """
    subcommand: str = ''
    inputs: list = field(default_factory=list)
    arity: int = 3
    ring: int = 0
    seed: int = 0
    output_format: str = 'json'
    num_proc: int = 1
    eps: float = 1e-9
    search: dict = field(default_factory=lambda: {'budget': 100000, 'restarts': 20})
    realizations: int = 3
    corpus: dict = field(default_factory=lambda: {'items': 200, 'max_crossings': 8, 'trace_length': 12})

    def to_dict(self) -> dict:
        out = asdict(self)
        out['ring'] = ring_name(self.ring)
        return out


def load_run_config(path: Path = None, **overrides) -> RunConfig:
    """
    Merges the template, configuration_files/run_configuration.yaml (or path), and keyword overrides.
    Overrides equal to None are ignored.
    """
    settings = {}
    configuration_files = get_paths().configuration_files
    sources = [configuration_files/'run_configuration_template.yaml']
    sources.append(Path(path) if path is not None else configuration_files/'run_configuration.yaml')
    for source in sources:
        if source.exists():
            loaded = open_yaml(source) or {}
            for key, value in loaded.items():
                if isinstance(value, dict) and isinstance(settings.get(key), dict):
                    settings[key].update(value)
                else:
                    settings[key] = value
    settings.update({key: value for key, value in overrides.items() if value is not None})
    known = RunConfig.__dataclass_fields__
    unknown = set(settings) - set(known)
    if unknown:
        raise ValidationError(f'unknown run configuration keys: {sorted(unknown)}')
    if 'ring' in settings:
        settings['ring'] = parse_ring(settings['ring'])
    if settings.get('arity', 3) not in (3, 4):
        raise ValidationError(f'arity must be 3 or 4, got {settings["arity"]}')
    return RunConfig(**settings)
