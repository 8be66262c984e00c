"""The ``madgad`` command line."""
import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from math import comb

from . import envs
from .consts import EXIT_OK
from .consts import EXIT_REFUSAL
from .consts import EXIT_USAGE
from .consts import EXIT_VALIDATION
from .consts import PROGRAM_BANNER
from .consts import PROGRAM_NAME
from .core.rational import Interval, parse, to_str
from .core.serialize import dump_document, load_document
from .errors import BudgetExceeded, DomainError, FormatError, InvalidFormatVersion, ValidationError

log = logging.getLogger(__name__)

FORMULAS = ('g', 'mlist', 'mbound', 'm2', 'psts', 'sqrt', 'triple', 'family', 'lower', 'catalog', 'plan', 'pbd')
DESIGNS = ('sts', 'psts', 'pg', 'ag', 'cyclic', 'truncate')
ORACLES = ('mad', 'mlist', 'mkn', 'colorings', 'invariants')


def _json_value(x):
    if isinstance(x, Fraction):
        return to_str(x)
    if isinstance(x, Interval):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def _read(path):
    if path in (None, '-'):
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError('{0} {1} needs {2}'.format(
            args.command, getattr(args, 'name', ''), ', '.join('--' + n for n in missing)))
    return [getattr(args, n) for n in names]


def _census(graphs):
    return dict(graphs.census())


def cmd_mad(args):
    from .mad import mad
    g = load_document(_read(args.input)).graph()
    cert = mad(g)
    return dict(cert.to_json(), n=g.vertex_count, m=g.edge_count, source='mad')


def cmd_formula(args):
    from . import formulas as f
    name = args.name
    out = {'formula': name, 'source': name}
    if name == 'g':
        m, = _need(args, 'm')
        p, r = f.split_edges(m)
        out.update(inputs={'m': m}, value=f.g_max_mad(m), p=p, r=r, family=f.classify_family(p, r).regime)
    elif name == 'mlist':
        k, N = _need(args, 'k', 'N')
        out.update(inputs={'k': k, 'N': N}, value=f.m_list(k, N), triple=list(f.param_triple(k, N)),
                   multiset=_census(f.m_list_extremal_multiset(k, N)))
    elif name == 'mbound':
        k, n = _need(args, 'k', 'n')
        out.update(inputs={'k': k, 'n': n}, value=f.m_upper_bound(k, n), source='m_list')
    elif name == 'm2':
        n, = _need(args, 'n')
        out.update(inputs={'n': n}, value=f.m_two(n), source='k2')
    elif name == 'psts':
        n, t = _need(args, 'n', 't')
        value, graphs = f.m_upper_range(n, t)
        out.update(inputs={'n': n, 't': t}, k=comb(n, 2) - t, value=value, multiset=_census(graphs))
    elif name == 'sqrt':
        k, = _need(args, 'k')
        bounds = f.sqrt_upper_bounds(k, n=args.n, N=args.N)
        out.update(inputs={'k': k, 'n': args.n, 'N': bounds.N}, relaxation=bounds.relaxation,
                   cap_list=bounds.cap_list, cap_kn=bounds.cap_kn)
    elif name == 'triple':
        k, N = _need(args, 'k', 'N')
        out.update(inputs={'k': k, 'N': N}, value=list(f.param_triple(k, N)))
    elif name == 'family':
        p, r = _need(args, 'p', 'r')
        out.update(inputs={'p': p, 'r': r}, value=f.representative_mad(p, r),
                   regime=f.classify_family(p, r).regime)
    elif name == 'lower':
        k, n = _need(args, 'k', 'n')
        bound = f.lower_bound_table(k, n)
        out.update(inputs={'k': k, 'n': n}, value=bound.value, source=bound.tag, detail=bound.detail)
    elif name == 'catalog':
        k, n = _need(args, 'k', 'n')
        out.update(inputs={'k': k, 'n': n},
                   entries=[{'value': b.value, 'source': b.tag, 'detail': b.detail}
                            for b in f.lower_bound_catalog(k, n)])
    elif name == 'plan':
        ratio, = _need(args, 'ratio')
        plan = f.proportional_plan(parse(ratio), n=args.n)
        out.update(dict(plan._asdict()), inputs={'ratio': ratio, 'n': args.n}, source='proportional')
    elif name == 'pbd':
        p, k, large = _need(args, 'p', 'k', 'large_blocks')
        out.update(inputs={'p': p, 'k': k, 'large_blocks': large}, value=f.pbd_value(p, k, large))
    return out


def _build_design(args):
    from . import designs
    kind = args.name
    if kind == 'sts':
        n, = _need(args, 'n')
        return designs.steiner_triple_system(n), None
    if kind == 'psts':
        n, = _need(args, 'n')
        design, leave = designs.max_partial_triple_system(n, seed=args.seed)
        return design, leave
    q, = _need(args, 'q')
    if kind == 'pg':
        return designs.projective_plane(q), None
    if kind == 'ag':
        return designs.affine_plane(q), None
    if kind == 'cyclic':
        return designs.cyclic_plane_difference_set(q).design, None
    plane = designs.affine_plane(q) if args.plane == 'ag' else designs.projective_plane(q)
    mode = designs.DELETE_LINE if args.mode == 'line' else designs.DELETE_POINT
    return designs.truncate_plane(plane, mode, target=args.target), None


def cmd_design(args):
    design, leave = _build_design(args)
    body = design.to_json()
    if leave is not None:
        body['leave'] = [list(e) for e in leave.edges]
    return {'document': ('design', body)}


def _param(text):
    key, sep, value = text.partition('=')
    if not sep or not key:
        raise DomainError('parameters are key=value, got {0!r}'.format(text))
    try:
        return key, int(value)
    except ValueError:
        return key, value


def cmd_construct(args):
    import inspect
    from .decomp.constructions import CONSTRUCTIONS, bind_params, construct
    params = dict(_param(p) for p in args.param or ())
    accepted = inspect.signature(CONSTRUCTIONS[args.name]).parameters if args.name in CONSTRUCTIONS else {}
    if 'seed' in accepted and 'seed' not in params:
        params['seed'] = args.seed
    if args.input is not None:
        doc = load_document(_read(args.input))
        if doc.kind == 'design':
            params['design'] = doc.design()
        else:
            params['d'] = doc.decomposition()
    try:
        bind_params(args.name, params)
    except TypeError as e:
        raise DomainError(str(e))
    d = construct(args.name, **params)
    return {'document': ('decomposition', d.to_json())}


def cmd_verify(args):
    from .decomp.decomposition import is_pbd, pbd_total, validate
    from .designs.design import leave_graph
    doc = load_document(_read(args.input))
    if doc.kind == 'design':
        design = doc.design()
        return {
            'kind': 'design',
            'points': design.point_count,
            'blocks': design.block_count,
            'block_sizes': dict(design.block_size_census()),
            'complete': design.complete,
            'leave_edges': leave_graph(design).edge_count,
            'source': design.meta,
        }
    d = doc.decomposition()
    report = validate(d, workers=args.workers)
    out = report.to_json()
    out['census'] = _census(d.as_graph_list())
    if is_pbd(d):
        total = pbd_total(d)
        if total != report.total:
            raise ValidationError('block total {0} differs from the Mad-sum {1}'.format(total, report.total),
                                  kind='pbd')
        out['pbd_total'] = total
    return out


def cmd_normalize(args):
    from .normalize import normalize, normalize_edge_counts
    if args.counts:
        try:
            counts = [int(c) for c in args.counts.split(',')]
        except ValueError:
            raise DomainError('--counts takes comma separated integers, got {0!r}'.format(args.counts))
        state = normalize_edge_counts(counts)
    else:
        doc = load_document(_read(args.input))
        graphs = doc.graph_list() if doc.kind == 'graph_list' else doc.decomposition()
        state = normalize(graphs)
    if args.trace:
        with open(args.trace, 'w') as f:
            f.write(dump_document('trace', state.to_json()))
    return {
        'k': state.k,
        'N': state.edge_total,
        'initial_mad_sum': state.initial_mad_sum,
        'mad_sum': state.mad_sum(),
        'terminal': [list(d) for d in state.multiset()],
        'steps': len(state.steps),
        'source': 'normalize',
    }


def cmd_oracle(args):
    from .oracle import OracleBudget, invariants_small, m_kn_colorings, m_kn_search, m_list_dp, mad_bruteforce
    budget = OracleBudget.from_env(max_vertices=args.budget_n, max_k=args.budget_k)
    out = {'oracle': args.name, 'source': 'oracle'}
    if args.name == 'mad':
        cert = mad_bruteforce(load_document(_read(args.input)).graph())
        out.update(cert.to_json())
    elif args.name == 'invariants':
        out.update(invariants_small(load_document(_read(args.input)).graph()).to_json())
    elif args.name == 'mlist':
        k, N = _need(args, 'k', 'N')
        out.update(inputs={'k': k, 'N': N}, value=m_list_dp(k, N, budget))
    elif args.name == 'mkn':
        k, n = _need(args, 'k', 'n')
        result = m_kn_search(k, n, budget, workers=args.workers)
        out.update(inputs={'k': k, 'n': n}, value=result.value, subsets=result.subsets, nodes=result.nodes)
    else:
        k, n = _need(args, 'k', 'n')
        result = m_kn_colorings(k, n)
        out.update(inputs={'k': k, 'n': n}, value=result.value, coloring=result.coloring, colorings=result.count)
    return out


def cmd_selftest(args):
    from .selftest import run_checks
    results = run_checks(quick=args.quick, workers=args.workers, seed=args.seed)
    out = {
        'checks': [dict(r._asdict()) for r in results],
        'passed': sum(1 for r in results if r.ok),
        'failed': sum(1 for r in results if not r.ok),
        'source': 'selftest',
    }
    if out['failed']:
        out['exit'] = EXIT_VALIDATION
    return out


COMMANDS = {
    'mad': cmd_mad,
    'formula': cmd_formula,
    'design': cmd_design,
    'construct': cmd_construct,
    'verify': cmd_verify,
    'normalize': cmd_normalize,
    'oracle': cmd_oracle,
    'selftest': cmd_selftest,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true', help='log at DEBUG level on stderr')
    common.add_argument('--out', help='write the report to this file instead of stdout')
    common.add_argument('--table', action='store_true', help='aligned text instead of JSON')
    common.add_argument('--timing', action='store_true', help='add elapsed seconds to the report')
    common.add_argument('--seed', type=int, default=envs.MADGAD_SEED)
    common.add_argument('--workers', type=int, default=envs.MADGAD_WORKERS)

    parser = argparse.ArgumentParser(prog=PROGRAM_NAME,
                                     description='Exact Mad and Nordhaus-Gaddum computations.')
    parser.add_argument('--version', action='version', version=PROGRAM_BANNER)
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('mad', parents=[common], help='Mad of a graph with a canonical witness')
    p.add_argument('input', nargs='?', default='-')

    p = sub.add_parser('formula', parents=[common], help='evaluate a closed form')
    p.add_argument('name', choices=FORMULAS)
    for flag in ('k', 'n', 'N', 'm', 'p', 'r', 't', 'q'):
        p.add_argument('--' + flag, type=int)
    p.add_argument('--ratio')
    p.add_argument('--large-blocks', dest='large_blocks', type=int)

    p = sub.add_parser('design', parents=[common], help='emit a block design')
    p.add_argument('name', choices=DESIGNS)
    p.add_argument('--n', type=int)
    p.add_argument('--q', type=int)
    p.add_argument('--plane', choices=('pg', 'ag'), default='pg', help='plane to truncate')
    p.add_argument('--mode', choices=('point', 'line'), default='point', help='truncation mode')
    p.add_argument('--target', type=int, default=0)

    p = sub.add_parser('construct', parents=[common], help='build a decomposition or packing of K_n')
    p.add_argument('name')
    p.add_argument('-p', '--param', action='append', metavar='KEY=VALUE')
    p.add_argument('--input', help='design or decomposition the construction starts from')

    p = sub.add_parser('verify', parents=[common], help='validate a decomposition or design')
    p.add_argument('input', nargs='?', default='-')

    p = sub.add_parser('normalize', parents=[common], help='normalize a list of graphs')
    p.add_argument('input', nargs='?', default='-')
    p.add_argument('--counts', help='comma separated edge counts instead of a document')
    p.add_argument('--trace', help='write the step log as a trace document')

    p = sub.add_parser('oracle', parents=[common], help='brute-force ground truth')
    p.add_argument('name', choices=ORACLES)
    p.add_argument('input', nargs='?', default='-')
    for flag in ('k', 'n', 'N'):
        p.add_argument('--' + flag, type=int)
    p.add_argument('--budget-n', dest='budget_n', type=int)
    p.add_argument('--budget-k', dest='budget_k', type=int)

    p = sub.add_parser('selftest', parents=[common], help='run the acceptance checks')
    p.add_argument('--quick', action='store_true')
    return parser


def render_table(report):
    width = max(len(k) for k in report) if report else 0
    lines = []
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append('{0}  {1}'.format(key.ljust(width), value))
    return '\n'.join(lines) + '\n'


def _write(text, path):
    if path:
        with open(path, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else envs.MADGAD_LOG_LEVEL,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    started = time.monotonic()
    try:
        report = COMMANDS[args.command](args)
    except BudgetExceeded as e:
        log.error('%s', e)
        return EXIT_REFUSAL
    except ValidationError as e:
        log.error('%s', e)
        return EXIT_VALIDATION
    except (DomainError, FormatError, InvalidFormatVersion) as e:
        log.error('%s', e)
        return EXIT_USAGE
    except (IOError, OSError) as e:
        log.error('%s', e)
        return EXIT_USAGE

    if 'document' in report:
        kind, body = report['document']
        _write(dump_document(kind, body) + '\n', args.out)
        return EXIT_OK
    status = report.pop('exit', EXIT_OK)
    report = dict({'command': args.command}, **report)
    if args.timing:
        report['elapsed_seconds'] = round(time.monotonic() - started, 6)
    report = _json_value(report)
    if args.table:
        _write(render_table(report), args.out)
    else:
        _write(json.dumps(report, sort_keys=True) + '\n', args.out)
    return status


def main():
    sys.exit(run())
