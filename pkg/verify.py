"""
Verification suites: exhaustive bounded checks of the distance, pattern and
bracket identities and of both directions of the I_D generation theorem.

Each suite records one check per inspected object; failures are collected as
serialized counterexamples, never raised.
"""
import inspect
import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

import config
from brackets import (
    FOUR_POINT_BRACKETS,
    HALF_LIBERATION,
    BracketKind,
    associated_bracket,
    bracket_argument,
    build_bracket_from_pattern,
    classify_bracket,
    dual_bracket,
    enumerate_brackets,
    is_bracket,
    is_dualizable,
    is_projective,
    make_bracket,
    recover_pattern,
    residual_forms,
    s_w_generator,
)
from closure import (
    ClosureConfig,
    class_of,
    generate,
    theorem_generators,
)
from color_metrics import (
    SemigroupSpec,
    crossing_distances,
    distance_matrix,
    in_i_d,
    in_s_w,
    is_pair_neutral,
    is_s0,
    sectors,
    signed_distance,
)
from errors import PartitionError, UnknownSuiteError
from partition import (
    Color,
    CyclicInterval,
    Direction,
    Partition,
    compose,
    cyclic_rotate,
    enumerate_p2nb,
    enumerate_pair_partitions,
    from_line,
    identity,
    involution,
    is_noncrossing,
    lower,
    parse,
    tensor,
    tensor_all,
)
from patterns import (
    BracketPattern,
    PatternCategory,
    all_patterns,
    category_of_monoid,
    completion,
    completion_mask,
    dual,
    generated_category_characterization,
    infer_monoid,
    is_additively_closed,
    numerical_semigroup_data,
    pattern_closure,
    project,
    superpose,
)

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 25

FIGURE_PARTITION = "U[wwwbbb] L[wwwbbb] B{l1,l6;l2,l5;l3,u3;l4,u4;u1,u6;u2,u5}"

DEFAULT_D_SPECS = (
    "D{gens=2,3; zero=1}",
    "D{gens=3,4,5; zero=1}",
    "D{gens=1; zero=0}",
    "D{gens=3; zero=1}",
)

DEFAULT_MONOIDS = (
    "D{gens=2,3; zero=1}",
    "D{gens=3,5; zero=1}",
    "D{gens=3,4,5; zero=1}",
    "D{gens=2; zero=1}",
    "D{gens=; zero=1}",
)

SemigroupLike = Union[SemigroupSpec, str]


@dataclass
class Report:
    """Outcome of one suite run"""
    suite: str
    params: Dict[str, Any]
    passed: bool
    checked: int
    failures: int = 0
    counterexamples: List[str] = field(default_factory=list)
    bounds: Dict[str, int] = field(default_factory=dict)
    details: Dict[str, str] = field(default_factory=dict)
    wall_time: float = 0.0


class Tally:
    """Collects checks while a suite runs"""

    def __init__(self):
        self.checked = 0
        self.failures = 0
        self.counterexamples: List[str] = []
        self.bounds: Dict[str, int] = {}
        self.details: Dict[str, str] = {}

    def check(self, ok: bool, witness: Any) -> bool:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(str(witness))
        return ok


SUITES: Dict[str, Callable[..., None]] = {}


def suite(name: str):
    """Register a suite under `name`; suites run in registration order"""
    def register(fn: Callable[..., None]) -> Callable[..., None]:
        SUITES[name] = fn
        return fn
    return register


def suite_names() -> List[str]:
    return list(SUITES)


def suite_parameters(name: str) -> Dict[str, Any]:
    """Parameter defaults of a suite"""
    fn = _lookup(name)
    return {
        key: param.default
        for key, param in inspect.signature(fn).parameters.items()
        if key != 'tally'
    }


def _lookup(name: str) -> Callable[..., None]:
    key = name.strip().lower()
    if key not in SUITES:
        raise UnknownSuiteError(f"Unknown suite '{name}'; known suites: {', '.join(SUITES)}")
    return SUITES[key]


def verify_suite(name: str, **params) -> Report:
    """
    Run one suite.

    Raises:
        UnknownSuiteError: no suite is registered under `name`
        PartitionError: a parameter is not accepted by the suite
    """
    fn = _lookup(name)
    defaults = suite_parameters(name)
    unknown = sorted(set(params) - set(defaults))
    if unknown:
        raise PartitionError(f"Suite '{name}' does not accept parameter(s): {', '.join(unknown)}")
    merged = {**defaults, **params}

    logger.info(f"Running suite {name}")
    tally = Tally()
    start = time.perf_counter()
    fn(tally, **merged)
    elapsed = time.perf_counter() - start

    report = Report(
        suite=name.strip().lower(),
        params=merged,
        passed=tally.failures == 0,
        checked=tally.checked,
        failures=tally.failures,
        counterexamples=tally.counterexamples,
        bounds=tally.bounds,
        details=tally.details,
        wall_time=round(elapsed, 3),
    )
    status = 'passed' if report.passed else 'FAILED'
    logger.info(f"Suite {report.suite} {status}: {report.checked} checks, {report.failures} failures in {elapsed:.2f}s")
    return report


# ---------------------------------------------------------------------------
# Shared pools
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def p2nb_pool(max_points: int) -> Tuple[Partition, ...]:
    """Every partition of P°•_{2,nb} with at most max_points points"""
    return tuple(p for n in range(0, max_points + 1, 2) for p in enumerate_p2nb(n))


def _semigroups(specs: Iterable[SemigroupLike]) -> List[SemigroupSpec]:
    if isinstance(specs, (str, SemigroupSpec)):
        specs = [specs]
    return [s if isinstance(s, SemigroupSpec) else SemigroupSpec.parse(s) for s in specs]


def _set_text(values: Iterable[int]) -> str:
    return '{' + ','.join(map(str, sorted(values))) + '}'


def _bracket(c: Color, w: BracketPattern) -> Partition:
    return build_bracket_from_pattern(c, w)


def find_with_escalation(
    gens: Sequence[Partition],
    targets: Dict[Any, Partition],
    cfg: ClosureConfig,
    step: int,
    ceiling: int,
) -> Tuple[List[Any], ClosureConfig]:
    """
    Generate until every target class is found or intermediate_points would exceed `ceiling`.

    Returns:
        The classes still missing and the last configuration used
    """
    missing = list(targets)
    while True:
        cs = generate(gens, cfg)
        missing = [key for key in missing if key not in cs.classes]
        if not missing or cfg.intermediate_points + step > ceiling:
            return missing, cfg
        logger.debug(f"{len(missing)} classes missing, escalating intermediate bound to {cfg.intermediate_points + step}")
        cfg = cfg.escalated(step)


# ---------------------------------------------------------------------------
# Color distances
# ---------------------------------------------------------------------------

def _distance_laws(matrix: np.ndarray, modulus: int) -> bool:
    """Zero diagonal, antisymmetry and additivity of δ, up to multiples of `modulus`"""
    def vanishes(values: np.ndarray) -> bool:
        return bool(np.all(values == 0)) if modulus == 0 else bool(np.all(values % modulus == 0))

    if matrix.size == 0:
        return True
    additive = matrix[:, None, :] - matrix[:, :, None] - matrix[None, :, :]
    return (
        bool(np.all(np.diag(matrix) == 0))
        and vanishes(matrix + matrix.T)
        and vanishes(additive)
    )


@suite('pseudo-metric')
def pseudo_metric(tally: Tally, max_points: int = 8, congruence_points: int = 6):
    tally.bounds.update(max_points=max_points, congruence_points=congruence_points)
    for p in p2nb_pool(max_points):
        matrix = distance_matrix(p)
        absolute = np.abs(matrix)
        triangle = bool(np.all(absolute[:, None, :] <= absolute[:, :, None] + absolute[None, :, :]))
        tally.check(_distance_laws(matrix, 0) and triangle, p)
    for n in range(0, congruence_points + 1, 2):
        for p in enumerate_pair_partitions(n):
            total = sum(p.normalized_color(pt).sign for pt in p.points)
            tally.check(_distance_laws(distance_matrix(p), abs(total)), p)


@suite('representative-independence')
def representative_independence(tally: Tally, max_points: int = 8):
    tally.bounds.update(max_points=max_points)
    for p in p2nb_pool(max_points):
        if not is_s0(p) or not p.blocks:
            continue
        matrix = distance_matrix(p)
        legs = np.array([[p.position[a], p.position[b]] for a, b in p.blocks])
        values = matrix[legs[:, :, None, None], legs[None, None, :, :]]
        tally.check(bool(np.all(values == values[:, :1, :, :1])), p)


@suite('a-under-ops')
def a_under_ops(tally: Tally, max_points: int = 6):
    tally.bounds.update(max_points=max_points)
    pool = [p for p in p2nb_pool(max_points) if is_s0(p)]
    distances = {p: crossing_distances(p) for p in pool}
    for p in pool:
        tally.check(crossing_distances(involution(p)) == distances[p], p)
    for p, q in product(pool, pool):
        union = distances[p] | distances[q]
        tally.check(crossing_distances(tensor(p, q)) == union, f"{p} ⊗ {q}")
        if p.upper == q.lower:
            composite, _ = compose(p, q)
            tally.check(crossing_distances(composite) <= union, f"{p} ∘ {q}")


@suite('figure')
def figure(tally: Tally):
    p = parse(FIGURE_PARTITION)
    distances = crossing_distances(p)
    tally.details['A'] = _set_text(distances)
    tally.check(distances == {1, 2}, p)
    tally.check(in_i_d(p, SemigroupSpec((3, 4, 5), True)), p)
    tally.check(signed_distance(p, lower(6), lower(3)) == 2, p)
    tally.check(crossing_distances(HALF_LIBERATION) == {0}, HALF_LIBERATION)


# ---------------------------------------------------------------------------
# Patterns
# ---------------------------------------------------------------------------

@suite('pattern-algebra')
def pattern_algebra(tally: Tally, frame_bound: int = 10, completion_bound: int = 12, pair_frame_bound: int = 6):
    tally.bounds.update(frame_bound=frame_bound, completion_bound=completion_bound, pair_frame_bound=pair_frame_bound)
    tally.check(completion(BracketPattern.of([4])) == BracketPattern.of([1, 2, 3, 4]), '{4}')
    tally.check(completion(BracketPattern.of([1, 2, 4])) == BracketPattern.of([1, 2, 4]), '{1,2,4}')

    for w in all_patterns(frame_bound):
        d = dual(w)
        a = completion_mask(w.mask)
        ok = (
            d.frame == w.frame
            and dual(d) == w
            and dual(superpose(w, d)).mask == w.mask & d.mask
            and completion_mask(d.mask) == a
            and all(completion_mask(project(w, j).mask) & ~a == 0 for j in w)
        )
        tally.check(ok, w)

    for w in all_patterns(completion_bound):
        a = completion(w)
        ok = completion(a) == a and min(a) == 1 and a.frame == w.frame and w.issubset(a)
        tally.check(ok, w)

    patterns = all_patterns(pair_frame_bound)
    for w, v in product(patterns, patterns):
        union = completion_mask(w.mask) | completion_mask(v.mask)
        tally.check(completion_mask(superpose(w, v).mask) & ~union == 0, f"{w} ∪ {v}")


@suite('pattern-closure')
def pattern_closure_suite(tally: Tally, frame_bound: int = 8, pair_frame_bound: int = 4):
    tally.bounds.update(frame_bound=frame_bound, pair_frame_bound=pair_frame_bound)
    tally.check(len(pattern_closure([])) == 0, '∅')
    for w in all_patterns(frame_bound):
        closed = pattern_closure([w])
        ok = closed == generated_category_characterization(w) and completion(w) in closed
        tally.check(ok, w)

    patterns = all_patterns(pair_frame_bound)
    for i, w in enumerate(patterns):
        for v in patterns[i:]:
            closed = pattern_closure([w, v])
            gens = PatternCategory(frozenset({w, v}))
            union = closed.union_completion()
            ok = (
                union == gens.union_completion()
                and union == closed.frames
                and pattern_closure([closed.union()]) == closed
            )
            tally.check(ok, f"{w}, {v}")


@suite('submonoid')
def submonoid(tally: Tally, frame_bound: int = 12, monoid_frame_bound: int = 8, monoids: Sequence[SemigroupLike] = DEFAULT_MONOIDS):
    tally.bounds.update(frame_bound=frame_bound, monoid_frame_bound=monoid_frame_bound)
    for w in all_patterns(frame_bound):
        data = numerical_semigroup_data(w)
        ok = (
            is_additively_closed(data.gap_set, 3 * w.frame)
            and data.genus == len(data.gap_set)
            and data.frobenius == w.frame
        )
        tally.check(ok, w)

    for m in _semigroups(monoids):
        m = m.as_monoid()
        category = category_of_monoid(m, monoid_frame_bound)
        inferred = infer_monoid(category, monoid_frame_bound)
        tally.details[str(m)] = str(inferred)
        tally.check(all((n in inferred) == m.member(n) for n in range(monoid_frame_bound + 1)), m)

        if m.complement_is_finite and m.gaps():
            gaps = BracketPattern.of(m.gaps())
            tally.check(category_of_monoid(m, gaps.frame) == pattern_closure([gaps]), m)
            tally.check(numerical_semigroup_data(gaps).gap_set == frozenset(gaps.elements), m)


# ---------------------------------------------------------------------------
# Brackets
# ---------------------------------------------------------------------------

@suite('bracket-identities')
def bracket_identities(
    tally: Tally,
    frame_bound: int = 5,
    dual_frame_bound: int = 6,
    a_frame_bound: int = 8,
    argument_points: int = 6,
    sector_points: int = 8,
):
    tally.bounds.update(
        frame_bound=frame_bound,
        dual_frame_bound=dual_frame_bound,
        a_frame_bound=a_frame_bound,
        argument_points=argument_points,
        sector_points=sector_points,
    )
    patterns = all_patterns(frame_bound)
    for c in Color:
        for w, v in product(patterns, patterns):
            if v.frame > w.frame:
                continue
            pad = w.frame - v.frame
            padded = tensor_all([identity([c] * pad), _bracket(c, v), identity([c.inverse] * pad)])
            composite, _ = compose(_bracket(c, w), padded)
            tally.check(composite == _bracket(c, superpose(w, v)), f"Br_{c.value}({w}) ∘ Br_{c.value}({v})")

        for w in patterns:
            bracket = _bracket(c, w)
            for j in w:
                sector = CyclicInterval(lower(w.frame + 1 - j), lower(w.frame + 2 + j))
                tally.check(associated_bracket(bracket, sector) == _bracket(c, project(w, j)), f"{bracket} at {sector}")

        for w in all_patterns(dual_frame_bound):
            bracket = _bracket(c, w)
            quarter = bracket.size // 4
            dualized = dual_bracket(bracket)
            ok = (
                dualized == _bracket(c.inverse, dual(w))
                and dual_bracket(dualized) == bracket
                and cyclic_rotate(bracket, Direction.CLOCKWISE, quarter) == dualized
            )
            tally.check(ok, bracket)

    for w in all_patterns(a_frame_bound):
        bracket = _bracket(Color.BLACK, w)
        tally.check(crossing_distances(bracket) == frozenset(completion(w).elements), bracket)

    for a in p2nb_pool(argument_points):
        if is_projective(a):
            for c in Color:
                tally.check(bracket_argument(make_bracket(c, a)) == a, a)

    for p in p2nb_pool(sector_points):
        for sector in sectors(p):
            tally.check(is_bracket(associated_bracket(p, sector)), f"{p} at {sector}")


@suite('bracket-classification')
def bracket_classification(tally: Tally, max_lower: int = 6, minimal_lower: int = 8):
    tally.bounds.update(max_lower=max_lower, minimal_lower=minimal_lower)
    minimal_frame = minimal_lower // 2 - 1
    expected_minimal = {_bracket(Color.BLACK, w) for w in all_patterns(minimal_frame)}
    for w in all_patterns(minimal_frame):
        bracket = _bracket(Color.BLACK, w)
        ok = (
            classify_bracket(bracket) is BracketKind.MINIMAL
            and recover_pattern(bracket) == w
            and is_dualizable(_bracket(Color.WHITE, w))
        )
        tally.check(ok, bracket)

    found_minimal = set()
    for m in range(2, minimal_lower + 1):
        for bracket in enumerate_brackets(m):
            if classify_bracket(bracket) is BracketKind.MINIMAL:
                found_minimal.add(bracket)
    for bracket in sorted(found_minimal ^ expected_minimal, key=str):
        tally.check(False, bracket)
    tally.check(found_minimal == expected_minimal, f"{len(found_minimal)} minimal brackets")

    forms = set()
    for w in all_patterns(max_lower // 2 - 1):
        forms.update(f for f in residual_forms(_bracket(Color.BLACK, w)) if len(f.lower) <= max_lower)
    for form in sorted(forms, key=str):
        tally.check(classify_bracket(form).is_residual and is_s0(form), form)

    for m in range(2, max_lower + 1):
        for bracket in enumerate_brackets(m):
            kind = classify_bracket(bracket)
            if kind is BracketKind.RESIDUAL_FIRST_KIND:
                tally.check(not is_s0(bracket), bracket)
            elif kind.is_residual and is_s0(bracket):
                tally.check(bracket in forms, bracket)


# ---------------------------------------------------------------------------
# Generated categories
# ---------------------------------------------------------------------------

def _soundness(tally: Tally, specs: Sequence[SemigroupLike], cfg: ClosureConfig):
    for d in _semigroups(specs):
        gens = theorem_generators(d, cfg.intermediate_points)
        for g in gens:
            tally.check(in_i_d(g, d), g)
        cs = generate(gens, cfg)
        tally.details[f"sound {d}"] = f"{len(cs)} classes saturated={cs.saturated}"
        for p in sorted(cs.members, key=str):
            tally.check(in_i_d(p, d), p)


def _completeness(tally: Tally, specs: Sequence[SemigroupLike], cfg: ClosureConfig, step: int, ceiling: int):
    used = cfg.intermediate_points
    for d in _semigroups(specs):
        targets: Dict[Any, Partition] = {}
        for p in p2nb_pool(cfg.max_points):
            if in_i_d(p, d):
                targets.setdefault(class_of(p), p)
        gens = theorem_generators(d, cfg.intermediate_points)
        missing, last = find_with_escalation(gens, targets, cfg, step, ceiling)
        used = max(used, last.intermediate_points)
        tally.details[f"complete {d}"] = f"{len(targets)} classes intermediate={last.intermediate_points}"
        if missing:
            logger.warning(f"{len(missing)} classes of I_{d} not derived within intermediate bound {last.intermediate_points}")
        lost = set(missing)
        for key in sorted(targets):
            tally.check(key not in lost, targets[key])
    tally.bounds['intermediate_used'] = used


@suite('main-thm-1-sound')
def main_theorem_soundness(
    tally: Tally,
    specs: Sequence[SemigroupLike] = DEFAULT_D_SPECS,
    max_points: int = 10,
    intermediate: int = 14,
):
    cfg = ClosureConfig(max_points, intermediate)
    tally.bounds.update(max_points=max_points, intermediate_points=intermediate)
    _soundness(tally, specs, cfg)


@suite('main-thm-1-complete')
def main_theorem_completeness(
    tally: Tally,
    specs: Sequence[SemigroupLike] = DEFAULT_D_SPECS,
    max_points: int = config.MAX_POINTS,
    intermediate: int = config.INTERMEDIATE_POINTS,
    step: int = config.ESCALATION_STEP,
    ceiling: int = config.ESCALATION_CEILING,
):
    cfg = ClosureConfig(max_points, intermediate)
    tally.bounds.update(max_points=max_points, intermediate_points=intermediate, ceiling=ceiling)
    _completeness(tally, specs, cfg, step, ceiling)


@suite('main-thm-1')
def main_theorem(
    tally: Tally,
    specs: Sequence[SemigroupLike] = DEFAULT_D_SPECS,
    max_points: int = config.MAX_POINTS,
    intermediate: int = config.INTERMEDIATE_POINTS,
    step: int = config.ESCALATION_STEP,
    ceiling: int = config.ESCALATION_CEILING,
):
    cfg = ClosureConfig(max_points, intermediate)
    tally.bounds.update(max_points=max_points, intermediate_points=intermediate, ceiling=ceiling)
    _soundness(tally, specs, cfg)
    _completeness(tally, specs, cfg, step, ceiling)


@suite('nc-base')
def nc_base(tally: Tally, max_points: int = config.MAX_POINTS, intermediate: int = config.INTERMEDIATE_POINTS):
    tally.bounds.update(max_points=max_points, intermediate_points=intermediate)
    cs = generate([], ClosureConfig(max_points, intermediate))
    generated = {p for p in cs.members if is_pair_neutral(p)}
    expected = {p for p in p2nb_pool(max_points) if is_noncrossing(p)}
    for p in sorted(generated | expected, key=str):
        tally.check(p in generated and p in expected and is_s0(p), p)


@suite('s-family')
def s_family(tally: Tally, max_points: int = 8, w_bound: int = 6):
    tally.bounds.update(max_points=max_points, w_bound=w_bound)
    exact = max_points - 2 <= w_bound
    for p in p2nb_pool(max_points):
        verdict = {w: in_s_w(p, w) for w in range(w_bound + 1)}
        ok = all(
            verdict[v] or not verdict[w]
            for w in range(w_bound + 1)
            for v in range(1, w_bound + 1)
            if w % v == 0
        )
        if exact:
            ok = ok and verdict[0] == all(verdict[v] for v in range(1, w_bound + 1))
        tally.check(ok, p)


@suite('s-w-sound')
def s_w_sound(tally: Tally, w_values: Sequence[int] = (1, 2, 3), max_points: int = 8, intermediate: int = 10):
    cfg = ClosureConfig(max_points, intermediate)
    tally.bounds.update(max_points=max_points, intermediate_points=intermediate)
    for w in w_values:
        w = int(w)
        generator = s_w_generator(w)
        tally.check(in_s_w(generator, w), generator)
        cs = generate([generator], cfg)
        tally.details[f"S_{w}"] = f"{len(cs)} classes saturated={cs.saturated}"
        for p in sorted(cs.members, key=str):
            tally.check(in_s_w(p, w), p)


@suite('half-liberation')
def half_liberation(
    tally: Tally,
    max_points: int = config.MAX_POINTS,
    intermediate: int = 10,
    step: int = config.ESCALATION_STEP,
    ceiling: int = config.ESCALATION_CEILING,
):
    cfg = ClosureConfig(max_points, intermediate)
    tally.bounds.update(max_points=max_points, intermediate_points=intermediate, ceiling=ceiling)
    bracket = FOUR_POINT_BRACKETS[0]
    for p in (HALF_LIBERATION, bracket):
        tally.check(is_s0(p) and crossing_distances(p) == {0}, p)
    for source, target in ((HALF_LIBERATION, bracket), (bracket, HALF_LIBERATION)):
        missing, last = find_with_escalation([source], {class_of(target): target}, cfg, step, ceiling)
        tally.details[f"{source} -> {target}"] = f"intermediate={last.intermediate_points}"
        tally.check(not missing, f"{target} not derived from {source}")


@suite('distinctness')
def distinctness(
    tally: Tally,
    first: SemigroupLike = "D{gens=2,3; zero=1}",
    second: SemigroupLike = "D{gens=3,4,5; zero=1}",
    frame_bound: int = 3,
    max_points: int = 12,
    rounds: int = 2,
):
    d1, d2 = _semigroups([first, second])
    tally.bounds.update(frame_bound=frame_bound, max_points=max_points, rounds=rounds)
    candidates = theorem_generators(d1, max_points) + theorem_generators(d2, max_points)
    candidates += [_bracket(Color.BLACK, w) for w in all_patterns(frame_bound)]
    witness = next((p for p in candidates if in_i_d(p, d1) != in_i_d(p, d2)), None)
    tally.check(witness is not None, f"no partition separates {d1} and {d2}")
    if witness is None:
        return

    home, other = (d1, d2) if in_i_d(witness, d1) else (d2, d1)
    tally.details['witness'] = str(witness)
    tally.details['in'] = str(home)
    size = max(max_points, witness.size)
    cfg = ClosureConfig(size, size, rounds)
    target = class_of(witness)
    for key, d, expected in (('generated', home, True), ('generated_from_other', other, False)):
        cs = generate(theorem_generators(d, max_points), cfg)
        found = target in cs.classes
        tally.details[key] = 'yes' if found else 'no-within-bounds'
        tally.check(found == expected, f"{witness} generated from {d}: {found}")


@suite('non-finite-generation')
def non_finite_generation(
    tally: Tally,
    spec: SemigroupLike = "D{gens=; zero=1}",
    frame_bounds: Sequence[int] = (2, 5),
    rounds: int = 1,
):
    d = _semigroups([spec])[0]
    tally.bounds.update(frame_bound=max(frame_bounds), rounds=rounds)
    previous: Optional[frozenset] = None
    for bound in sorted(int(b) for b in frame_bounds):
        size = 4 * (bound + 1)
        gens = theorem_generators(d, size)
        cs = generate(gens, ClosureConfig(size, size, rounds))
        union = frozenset()
        for line in sorted(cs.classes):
            p = from_line(line)
            if is_s0(p):
                union |= crossing_distances(p)
        tally.details[f"union_a_{bound}"] = _set_text(union)
        expected = frozenset(n for n in range(1, bound + 1) if not d.member(n))
        tally.check(expected <= union, f"frame bound {bound}")
        generator_union = frozenset().union(*(crossing_distances(g) for g in gens))
        tally.check(union <= generator_union, f"frame bound {bound}: {_set_text(union)}")
        if previous is not None:
            tally.check(previous < union, f"frame bound {bound}")
        previous = union
