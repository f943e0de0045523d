"""
Text form of diagrams.

Long form, one field per line:
    gauss: 1 2 1 2
    chirality: 1=+1 2=-1
    outer: 0R
Compact form on one line, sections separated by ';':
    1 1 ; 1:+ ; 0R
The outer key is an arc index (position in the visit sequence) and the side of the arc the face lies on. When it is
left out the face with the most darts is taken.
"""
import re

from doodlinv.diagrams.planar_diagram import PlanarDiagram
from doodlinv.errors import ValidationError

_KEY = re.compile(r'^\s*(\d+)\s*([LR])\s*$')


def _crossing_id(token: str):
    return int(token) if re.fullmatch(r'-?\d+', token) else token


def _sign(token: str) -> int:
    token = token.strip()
    if token in ('+', '+1', '1'):
        return 1
    if token in ('-', '-1'):
        return -1
    raise ValidationError(f'chirality value {token!r} is not +1 or -1')


def _parse_key(text: str) -> tuple:
    match = _KEY.match(text)
    if not match:
        raise ValidationError(f'outer face key {text!r} is not of the form <arc index><L|R>')
    return int(match.group(1)), match.group(2)


def _parse_chirality(text: str) -> dict:
    out = {}
    for token in text.replace(',', ' ').split():
        name, _, value = token.replace(':', '=').partition('=')
        if not value:
            raise ValidationError(f'chirality entry {token!r} needs the form id=+1')
        x = _crossing_id(name)
        if x in out:
            raise ValidationError(f'chirality of crossing {x} given twice')
        out[x] = _sign(value)
    return out


def parse_gauss_code(text: str) -> PlanarDiagram:
    """
    Parses the long or the compact form into a PlanarDiagram.

    Raises DuplicateVisit / MissingVisit on malformed sequences and UnrealizableCode when the rotation data does not
    describe a plane curve.
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip() and not line.strip().startswith('#')]
    fields = {}
    if lines and ':' in lines[0] and lines[0].split(':', 1)[0].strip().lower() in ('gauss', 'chirality', 'outer'):
        for line in lines:
            name, _, value = line.partition(':')
            name = name.strip().lower()
            if name not in ('gauss', 'chirality', 'outer'):
                raise ValidationError(f'unknown field {name!r} in Gauss code')
            fields[name] = value.strip()
    else:
        parts = [p.strip() for p in ' '.join(lines).split(';')]
        if len(parts) > 3:
            raise ValidationError('the compact form has at most three sections')
        fields['gauss'] = parts[0] if parts else ''
        if len(parts) > 1:
            fields['chirality'] = parts[1]
        if len(parts) > 2 and parts[2]:
            fields['outer'] = parts[2]
    sequence = [_crossing_id(t) for t in fields.get('gauss', '').split()]
    chirality = _parse_chirality(fields.get('chirality', ''))
    outer = _parse_key(fields['outer']) if fields.get('outer') else None
    return PlanarDiagram.from_gauss(sequence, chirality, outer)


def to_gauss_code(d: PlanarDiagram, compact: bool = False, canonical: bool = False) -> str:
    """
    Text form with crossings renamed 1, 2, ... in order of first visit, starting at the first visit of d
    (or at the canonical start when canonical is set).
    """
    if canonical:
        d = d.canonical()
    names = {x: i + 1 for i, x in enumerate(d.crossings)}
    sequence = ' '.join(str(names[d.vertex_of[w]]) for w in d.visits)
    chirality = ' '.join(f'{names[x]}={d.chirality(x):+d}' for x in d.crossings)
    i, side = d.face_key(d.outer_face)
    if compact:
        return f'{sequence} ; {chirality.replace("=", ":")} ; {i}{side}'
    return f'gauss: {sequence}\nchirality: {chirality}\nouter: {i}{side}\n'


def canonical_gauss_code(d: PlanarDiagram) -> str:
    return to_gauss_code(d, compact=True, canonical=True)
