"""Command-line front end for the partition category workbench"""
import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence

import config
from brackets import (
    BracketKind,
    bracket_argument,
    build_bracket_from_pattern,
    classify_bracket,
    dual_bracket,
    recover_pattern,
    strong_inversion,
    weak_inversion,
)
from closure import ClosureConfig
from color_metrics import (
    SemigroupSpec,
    crossing_distances,
    in_i_d,
    in_s_w,
    is_noncrossing,
    is_pair_neutral,
    is_s0,
)
from errors import PartitionError
from main import CategoryWorkbench
from partition import (
    Color,
    Corner,
    Direction,
    Partition,
    Point,
    compose,
    color_invert,
    cyclic_rotate,
    erase,
    involution,
    parse,
    reflect,
    rotate,
    serialize,
    tensor,
    to_line,
    verticolor_reflect,
)
from patterns import (
    BracketPattern,
    category_of_monoid,
    completion,
    dual,
    infer_monoid,
    numerical_semigroup_data,
    pattern_closure,
)
from utils import ReportGenerator, load_partition_list, save_partition_list
from verify import Report, suite_names, suite_parameters

logger = logging.getLogger(__name__)


def _set_text(values) -> str:
    return '{' + ','.join(map(str, sorted(values))) + '}'


def _yes(flag: bool) -> str:
    return 'yes' if flag else 'no'


def classify_command(p: Partition, d: Optional[SemigroupSpec] = None) -> Report:
    """Membership of p in the partition classes around S_0 and I_D"""
    details: Dict[str, str] = {'partition': serialize(p)}
    details['pair'] = _yes(p.is_pair)
    details['neutral_pairs'] = _yes(is_pair_neutral(p))
    s0 = is_s0(p)
    details['s0'] = _yes(s0)
    details['noncrossing'] = _yes(is_noncrossing(p))
    details['A'] = _set_text(crossing_distances(p)) if s0 else 'undefined'
    details['s_w'] = _set_text(w for w in range(config.SW_RANGE + 1) if in_s_w(p, w))
    if d is not None:
        details['semigroup'] = str(d)
        details['i_d'] = _yes(in_i_d(p, d))
    return Report(suite='classify', params={}, passed=True, checked=len(details) - 1, details=details)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='partitions',
        description='Two-colored partitions, brackets, bracket patterns and bounded category closures',
    )
    parser.add_argument('--format', choices=['plain', 'records'], default=config.REPORT_FORMAT)
    parser.add_argument('--log-level', default=config.LOG_LEVEL)
    verbs = parser.add_subparsers(dest='verb', required=True)

    p_parse = verbs.add_parser('parse', help='Print the canonical serialization')
    p_parse.add_argument('partition')

    p_op = verbs.add_parser('op', help='Apply a category operation')
    ops = p_op.add_subparsers(dest='op', required=True)
    for name in ('tensor', 'compose'):
        sub = ops.add_parser(name)
        sub.add_argument('first')
        sub.add_argument('second')
    for name in ('involution', 'invert', 'reflect', 'verticolor', 'line'):
        ops.add_parser(name).add_argument('partition')
    sub = ops.add_parser('rotate')
    sub.add_argument('partition')
    sub.add_argument('--corner', required=True, choices=[c.value for c in Corner])
    sub = ops.add_parser('cyclic')
    sub.add_argument('partition')
    sub.add_argument('--direction', default=Direction.CLOCKWISE.value, choices=[d.value for d in Direction])
    sub.add_argument('--steps', type=int, default=1)
    sub = ops.add_parser('erase')
    sub.add_argument('partition')
    sub.add_argument('--points', required=True, help='comma-separated points, e.g. l1,u2')

    p_classify = verbs.add_parser('classify', help='Report pair, S_0, S_w and I_D membership')
    p_classify.add_argument('partition')
    p_classify.add_argument('--d', help='semigroup, e.g. "D{gens=3,5; zero=1}"')

    p_bracket = verbs.add_parser('bracket', help='Bracket constructors and classification')
    actions = p_bracket.add_subparsers(dest='action', required=True)
    sub = actions.add_parser('build')
    sub.add_argument('--color', required=True, choices=['w', 'b'])
    sub.add_argument('--pattern', required=True)
    for name in ('classify', 'dual', 'argument', 'winv', 'sinv'):
        actions.add_parser(name).add_argument('partition')

    p_pattern = verbs.add_parser('pattern', help='Bracket pattern algebra')
    actions = p_pattern.add_subparsers(dest='action', required=True)
    for name in ('complete', 'dual', 'semigroup'):
        actions.add_parser(name).add_argument('pattern')
    sub = actions.add_parser('closure')
    sub.add_argument('patterns', nargs='+')
    sub.add_argument('--infer', action='store_true', help='also print the corresponding monoid')
    sub = actions.add_parser('monoid')
    sub.add_argument('--gens', required=True, help='comma-separated generators, may be empty')
    sub.add_argument('--frame-bound', type=int, default=config.FRAME_BOUND)

    p_closure = verbs.add_parser('closure', help='Bounded closure of a generator file')
    p_closure.add_argument('--gens', required=True, help='partition list file')
    p_closure.add_argument('--max-points', type=int, default=config.MAX_POINTS)
    p_closure.add_argument('--intermediate', type=int, default=config.INTERMEDIATE_POINTS)
    p_closure.add_argument('--max-iterations', type=int, default=config.MAX_ITERATIONS)
    p_closure.add_argument('--emit', help='write all members to this partition list file')
    p_closure.add_argument('--cache', action='store_true', default=config.USE_CACHE)

    p_verify = verbs.add_parser('verify', help='Run verification suites')
    p_verify.add_argument('suites', nargs='+', help=f"'all' or any of: {', '.join(suite_names())}")
    p_verify.add_argument('--max-points', type=int)
    p_verify.add_argument('--intermediate', type=int)
    p_verify.add_argument('--frame-bound', type=int)
    p_verify.add_argument('--step', type=int)
    p_verify.add_argument('--ceiling', type=int)
    p_verify.add_argument('--d', action='append', dest='specs', help='semigroup spec, repeatable')
    p_verify.add_argument('--timing', action='store_true', help='include wall time in records')
    p_verify.add_argument('--save', action='store_true', help='store reports in the database')
    return parser


def _points(text: str) -> List[Point]:
    return [Point.parse(item) for item in text.split(',') if item.strip()]


def _pattern(text: str) -> BracketPattern:
    return BracketPattern.parse(text)


def _run_op(args, out: List[str]):
    if args.op == 'tensor':
        out.append(serialize(tensor(parse(args.first), parse(args.second))))
    elif args.op == 'compose':
        result, loops = compose(parse(args.first), parse(args.second))
        out.append(serialize(result))
        out.append(f"loops={loops}")
    elif args.op == 'line':
        colors, labels = to_line(parse(args.partition))
        out.append(f"{colors}|{','.join(map(str, labels))}")
    elif args.op == 'rotate':
        out.append(serialize(rotate(parse(args.partition), Corner(args.corner))))
    elif args.op == 'cyclic':
        out.append(serialize(cyclic_rotate(parse(args.partition), Direction(args.direction), args.steps)))
    elif args.op == 'erase':
        out.append(serialize(erase(parse(args.partition), _points(args.points))))
    else:
        unary = {
            'involution': involution,
            'invert': color_invert,
            'reflect': reflect,
            'verticolor': verticolor_reflect,
        }
        out.append(serialize(unary[args.op](parse(args.partition))))


def _run_bracket(args, out: List[str]):
    if args.action == 'build':
        out.append(serialize(build_bracket_from_pattern(Color(args.color), _pattern(args.pattern))))
        return
    p = parse(args.partition)
    if args.action == 'classify':
        kind = classify_bracket(p)
        line = kind.value
        if kind is BracketKind.MINIMAL:
            line += f" {recover_pattern(p)}"
        out.append(line)
        return
    action = {
        'dual': dual_bracket,
        'argument': bracket_argument,
        'winv': weak_inversion,
        'sinv': strong_inversion,
    }
    out.append(serialize(action[args.action](p)))


def _run_pattern(args, out: List[str]):
    if args.action == 'complete':
        out.append(str(completion(_pattern(args.pattern))))
    elif args.action == 'dual':
        out.append(str(dual(_pattern(args.pattern))))
    elif args.action == 'semigroup':
        data = numerical_semigroup_data(_pattern(args.pattern))
        out.append(f"gaps={_set_text(data.gap_set)} genus={data.genus} frobenius={data.frobenius}")
    elif args.action == 'closure':
        category = pattern_closure(_pattern(text) for text in args.patterns)
        out.append(str(category))
        if args.infer:
            out.append(str(infer_monoid(category)))
    else:
        monoid = SemigroupSpec.parse(f"D{{gens={args.gens}; zero=1}}")
        out.append(str(category_of_monoid(monoid, args.frame_bound)))


def _run_closure(args, out: List[str]):
    gens = load_partition_list(args.gens)
    cfg = ClosureConfig(args.max_points, args.intermediate, args.max_iterations)
    cs = CategoryWorkbench().closure(gens, cfg, use_cache=args.cache)
    out.append(f"generators={len(gens)}")
    out.append(f"classes={len(cs.classes)}")
    out.append(f"members={len(cs.members)}")
    out.append(f"saturated={'true' if cs.saturated else 'false'}")
    out.append(f"iterations={cs.iterations}")
    if args.emit:
        save_partition_list(args.emit, sorted(cs.members, key=serialize))
        logger.info(f"Wrote {len(cs.members)} members to {args.emit}")


def _run_verify(args, out: List[str]) -> int:
    names = suite_names() if args.suites == ['all'] else args.suites
    given = {
        'max_points': args.max_points,
        'intermediate': args.intermediate,
        'frame_bound': args.frame_bound,
        'step': args.step,
        'ceiling': args.ceiling,
        'specs': args.specs,
    }
    given = {k: v for k, v in given.items() if v is not None}

    bench = CategoryWorkbench()
    reports = []
    for name in names:
        params = given
        if len(names) > 1:
            accepted = suite_parameters(name)
            params = {k: v for k, v in given.items() if k in accepted}
        reports += bench.verify([name], save=args.save, **params)

    for i, report in enumerate(reports):
        if args.format == 'records':
            if i:
                out.append('')
            out.append(ReportGenerator.to_records(report, timing=args.timing).rstrip('\n'))
        else:
            out.append(ReportGenerator.to_plain(report).rstrip('\n'))
    return 0 if all(r.passed for r in reports) else 1


def _render_classification(report: Report, fmt: str, out: List[str]):
    if fmt == 'records':
        out.append(ReportGenerator.to_records(report).rstrip('\n'))
    else:
        out.extend(f"{key}: {value}" for key, value in report.details.items())


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute one command.

    Returns:
        0 on success, 1 when a verification suite fails, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    logging.basicConfig(
        level=args.log_level.upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )

    out: List[str] = []
    code = 0
    try:
        if args.verb == 'parse':
            p = parse(args.partition)
            if args.format == 'records':
                out += [f"partition={serialize(p)}", f"points={p.size}", f"blocks={len(p.blocks)}"]
            else:
                out.append(serialize(p))
        elif args.verb == 'op':
            _run_op(args, out)
        elif args.verb == 'classify':
            d = SemigroupSpec.parse(args.d) if args.d else None
            _render_classification(classify_command(parse(args.partition), d), args.format, out)
        elif args.verb == 'bracket':
            _run_bracket(args, out)
        elif args.verb == 'pattern':
            _run_pattern(args, out)
        elif args.verb == 'closure':
            _run_closure(args, out)
        elif args.verb == 'verify':
            code = _run_verify(args, out)
    except PartitionError as exc:
        logger.error(f"{args.verb} failed: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if out:
        print('\n'.join(out))
    return code


if __name__ == '__main__':
    sys.exit(run())
