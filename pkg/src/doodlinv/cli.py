"""
Command line front end.

    doodlinv diagram info|validate --input FILE
    doodlinv invariant moment|strangeness|order-test
    doodlinv moves trace|simplify|merkov
    doodlinv cliques enumerate|modes
    doodlinv complex homology|collision
    doodlinv blocks column
    doodlinv report census
    doodlinv corpus generate

Every report is one JSON object carrying the package version, the seed and the run configuration. Exit codes:
0 success, 1 bad input, 2 internal inconsistency.
"""
import argparse
import json
from pathlib import Path
import sys

from doodlinv import __version__
from doodlinv.blocks.census import ALIASES, CENSUS_CONTEXTS, census
from doodlinv.blocks.column import auxiliary_column
from doodlinv.cliques.clique_class import CliqueClass, enumerate_classes
from doodlinv.cliques.modes import degeneration_modes, degeneration_process_count, number_of_steps
from doodlinv.complexes.collision import collide
from doodlinv.complexes.order_complex import relative_homology
from doodlinv.corpus import corpus_generate
from doodlinv.diagrams.gauss_code import canonical_gauss_code, parse_gauss_code, to_gauss_code
from doodlinv.diagrams.polyline import polyline_to_diagram, read_polyline
from doodlinv.errors import DoodleError, ValidationError
from doodlinv.invariants.characteristic import moment_evaluator, order_upper_test
from doodlinv.invariants.moments import moment, moments, strangeness
from doodlinv.moves.merkov import merkov_search
from doodlinv.moves.moves import MOVE_KINDS
from doodlinv.moves.traces import random_trace, simplify
from doodlinv.paths import load_run_config, ring_name


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f'{self.prog}: {message}')


def read_diagram(path: str, eps=None):
    """A Gauss code file, or a polyline when the file ends in .json; '-' reads standard input."""
    text = sys.stdin.read() if path == '-' else _read(path)
    if path.endswith('.json'):
        points = read_polyline(text)
        return polyline_to_diagram(points) if eps is None else polyline_to_diagram(points, eps)
    return parse_gauss_code(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ValidationError(f'--input {path}: {e.strerror}') from e


def _diagram_summary(d) -> dict:
    return {
        'crossings': d.n_crossings,
        'gauss': to_gauss_code(d, compact=True),
        'canonical': canonical_gauss_code(d),
        'face_indices': d.face_indices().by_key(),
        'crossing_data': d.to_json()['crossings'],
    }


# ----- handlers -----
def diagram_info(args, config) -> dict:
    d = read_diagram(args.input, config.eps)
    out = _diagram_summary(d)
    out['moments'] = {str(b): v for b, v in moments(d, args.max_beta).items()}
    return out


def diagram_validate(args, config) -> dict:
    d = read_diagram(args.input, config.eps)
    return {'valid': True, 'crossings': d.n_crossings}


def invariant_moment(args, config) -> dict:
    d = read_diagram(args.input, config.eps)
    bp = d.basepoint(args.basepoint) if args.basepoint is not None else None
    return {'beta': args.beta, 'value': moment(d, bp, args.beta)}


def invariant_strangeness(args, config) -> dict:
    return {'value': strangeness(read_diagram(args.input, config.eps))}


def invariant_order_test(args, config) -> dict:
    complexity = args.beta + 2 if args.complexity is None else args.complexity
    report = order_upper_test(
        moment_evaluator(args.beta), complexity - 1, realizations=args.realizations or config.realizations,
        seed=config.seed,
    )
    return report.to_dict()


def moves_trace(args, config) -> dict:
    d = read_diagram(args.input, config.eps)
    trace = random_trace(d, args.steps, config.seed, kinds=tuple(args.kinds), max_crossings=args.max_crossings)
    out = trace.to_dict()
    out['final'] = to_gauss_code(trace.replay(), compact=True)
    return out


def moves_simplify(args, config) -> dict:
    d = read_diagram(args.input, config.eps)
    budget = config.search['budget'] if args.budget is None else args.budget
    return simplify(d, budget=budget, seed=config.seed).to_dict()


def moves_merkov(args, config) -> dict:
    budget = config.search['budget'] if args.budget is None else args.budget
    table = merkov_search(budget=budget, seed=config.seed)
    return {'candidates': table.to_dict(orient='records')}


def cliques_enumerate(args, config) -> dict:
    classes = enumerate_classes(
        config.arity, max_complexity=args.max_complexity, max_double_points=args.doubles,
        exact_double_points=args.exact_doubles
    )
    by_complexity = {}
    for c in classes:
        by_complexity[str(c.complexity)] = by_complexity.get(str(c.complexity), 0) + 1
    return {'count': len(classes), 'by_complexity': by_complexity, 'classes': [c.to_dict() for c in classes]}


def cliques_modes(args, config) -> dict:
    cls = CliqueClass.from_code(args.code, config.arity)
    modes = degeneration_modes(cls)
    return {
        'class': cls.code, 'modes': len(modes), 'steps': number_of_steps(cls),
        'processes': degeneration_process_count(cls),
    }


def complex_homology(args, config) -> dict:
    cls = CliqueClass.from_code(args.code, config.arity)
    groups = relative_homology(cls, ring=config.ring)
    return {'class': cls.code, 'homology': {str(d): g.to_dict() for d, g in sorted(groups.items())}}


def complex_collision(args, config) -> dict:
    cls = CliqueClass.from_code(args.code, config.arity)
    result = collide(tuple(cls.slots), args.position, cls.k, args.wrap)
    merged = CliqueClass.from_slots(result.word, cls.k)
    return {
        'class': cls.code, 'merged': merged.code, 'same_group': result.same_group,
        'position_map': list(result.position_map), 'merged_position': result.merged_position,
    }


def blocks_column(args, config) -> dict:
    report = auxiliary_column(args.p, config.arity, args.context, config.ring)
    return report.to_dict()


def report_census(args, config) -> dict:
    report = census(args.context, args.max_order, config.ring)
    out = report.to_dict()
    out['counts'] = list(report.counts)
    return out


def corpus_command(args, config) -> dict:
    bounds = dict(config.corpus)
    for key in ('items', 'max_crossings', 'trace_length'):
        if getattr(args, key) is not None:
            bounds[key] = getattr(args, key)
    manifest = corpus_generate(
        bounds['items'], bounds['max_crossings'], bounds['trace_length'], config.seed, args.out, config.num_proc
    )
    return {'items': len(manifest), 'manifest': manifest.to_dict(orient='records')}


# ----- parser -----
def _common(parser) -> None:
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--ring', default=None, help='Z or Zp')
    parser.add_argument('--arity', type=int, default=None, choices=(3, 4))
    parser.add_argument('--format', dest='output_format', default=None, choices=('json', 'text'))
    parser.add_argument('--num-proc', type=int, default=None)
    parser.add_argument('--config', default=None, help='run configuration yaml')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='doodlinv', description='Finite-order invariants of doodles.')
    parser.add_argument('--version', action='version', version=f'doodlinv {__version__}')
    groups = parser.add_subparsers(dest='group', required=True, parser_class=_Parser)

    def command(group_parsers, name, handler, **kwargs):
        p = group_parsers.add_parser(name, **kwargs)
        _common(p)
        p.set_defaults(handler=handler)
        return p

    diagram = groups.add_parser('diagram').add_subparsers(dest='command', required=True, parser_class=_Parser)
    for name, handler in (('info', diagram_info), ('validate', diagram_validate)):
        p = command(diagram, name, handler)
        p.add_argument('--input', required=True)
        p.add_argument('--max-beta', type=int, default=3)

    invariant = groups.add_parser('invariant').add_subparsers(dest='command', required=True, parser_class=_Parser)
    p = command(invariant, 'moment', invariant_moment)
    p.add_argument('--input', required=True)
    p.add_argument('--beta', type=int, default=1)
    p.add_argument('--basepoint', type=int, default=None, help='tail visit of the basepoint arc')
    p = command(invariant, 'strangeness', invariant_strangeness)
    p.add_argument('--input', required=True)
    p = command(invariant, 'order-test', invariant_order_test)
    p.add_argument('--beta', type=int, default=1)
    p.add_argument('--complexity', type=int, default=None)
    p.add_argument('--realizations', type=int, default=None)

    moves = groups.add_parser('moves').add_subparsers(dest='command', required=True, parser_class=_Parser)
    p = command(moves, 'trace', moves_trace)
    p.add_argument('--input', required=True)
    p.add_argument('--steps', type=int, default=10)
    p.add_argument('--kinds', nargs='+', default=['kink', 'tangency'], choices=MOVE_KINDS)
    p.add_argument('--max-crossings', type=int, default=None)
    p = command(moves, 'simplify', moves_simplify)
    p.add_argument('--input', required=True)
    p.add_argument('--budget', type=int, default=None)
    p = command(moves, 'merkov', moves_merkov)
    p.add_argument('--budget', type=int, default=None)

    cliques = groups.add_parser('cliques').add_subparsers(dest='command', required=True, parser_class=_Parser)
    p = command(cliques, 'enumerate', cliques_enumerate)
    p.add_argument('--max-complexity', type=int, default=4)
    p.add_argument('--doubles', type=int, default=0)
    p.add_argument('--exact-doubles', action='store_true')
    p = command(cliques, 'modes', cliques_modes)
    p.add_argument('--code', required=True)

    complex_ = groups.add_parser('complex').add_subparsers(dest='command', required=True, parser_class=_Parser)
    p = command(complex_, 'homology', complex_homology)
    p.add_argument('--code', required=True)
    p = command(complex_, 'collision', complex_collision)
    p.add_argument('--code', required=True)
    p.add_argument('--position', type=int, default=0)
    p.add_argument('--wrap', action='store_true')

    blocks = groups.add_parser('blocks').add_subparsers(dest='command', required=True, parser_class=_Parser)
    p = command(blocks, 'column', blocks_column)
    p.add_argument('--p', type=int, required=True)
    p.add_argument('--context', default='doodle', choices=('doodle', 'idoodle', 'fourfold'))

    report = groups.add_parser('report').add_subparsers(dest='command', required=True, parser_class=_Parser)
    p = command(report, 'census', report_census)
    p.add_argument('--context', default='doodle-invariants', choices=sorted(CENSUS_CONTEXTS) + sorted(ALIASES))
    p.add_argument('--max-order', type=int, default=None)

    corpus = groups.add_parser('corpus').add_subparsers(dest='command', required=True, parser_class=_Parser)
    p = command(corpus, 'generate', corpus_command)
    p.add_argument('--items', type=int, default=None)
    p.add_argument('--max-crossings', type=int, default=None)
    p.add_argument('--trace-length', type=int, default=None)
    p.add_argument('--out', type=Path, default=None)
    return parser


def _json_default(obj):
    if hasattr(obj, 'item'):
        return obj.item()
    return str(obj)


def _as_text(report: dict, indent: int = 0) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(' '*indent + f'{key}:')
            lines.append(_as_text(value, indent + 2))
        else:
            lines.append(' '*indent + f'{key}: {value}')
    return '\n'.join(lines)


def run(argv=None, stdout=None) -> int:
    """Runs one command, writes its report and returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        config = load_run_config(
            args.config, subcommand=f'{args.group} {args.command}', seed=args.seed, ring=args.ring,
            arity=args.arity, output_format=args.output_format, num_proc=args.num_proc,
            inputs=[args.input] if getattr(args, 'input', None) else None,
        )
        result = args.handler(args, config)
    except DoodleError as e:
        print(f'error: {e}', file=sys.stderr)
        return e.exit_code
    report = {'version': __version__, 'seed': config.seed, 'ring': ring_name(config.ring), 'config': config.to_dict()}
    report.update(result)
    if config.output_format == 'text':
        stdout.write(_as_text(report) + '\n')
    else:
        stdout.write(json.dumps(report, sort_keys=True, default=_json_default) + '\n')
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
