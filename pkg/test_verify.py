"""Tests for the verification suites and the suite runner"""
import pytest

from brackets import build_bracket_from_pattern
from errors import PartitionError, UnknownSuiteError
from partition import Color
from patterns import BracketPattern
from verify import (
    FIGURE_PARTITION,
    SUITES,
    Tally,
    suite_names,
    suite_parameters,
    verify_suite,
)


def test_suite_registry_order():
    names = suite_names()
    assert names[0] == 'pseudo-metric'
    assert names[-1] == 'non-finite-generation'
    assert {'figure', 'main-thm-1', 'nc-base', 'distinctness'} <= set(SUITES)


def test_suite_parameters():
    assert suite_parameters('nc-base').keys() == {'max_points', 'intermediate'}
    assert suite_parameters('figure') == {}


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        verify_suite('no-such-suite')


def test_unknown_parameter():
    with pytest.raises(PartitionError):
        verify_suite('figure', max_points=4)


def test_tally_keeps_counterexamples():
    tally = Tally()
    tally.check(True, 'a')
    tally.check(False, 'b')
    assert (tally.checked, tally.failures, tally.counterexamples) == (2, 1, ['b'])


def test_figure():
    report = verify_suite('figure')
    assert report.passed
    assert report.checked == 4
    assert report.details['A'] == '{1,2}'
    assert FIGURE_PARTITION.startswith('U[wwwbbb]')


def test_suite_name_is_case_insensitive():
    assert verify_suite(' Figure ').suite == 'figure'


@pytest.mark.parametrize('name, params', [
    ('pseudo-metric', {'max_points': 6, 'congruence_points': 4}),
    ('representative-independence', {'max_points': 6}),
    ('a-under-ops', {'max_points': 4}),
    ('pattern-algebra', {'frame_bound': 6, 'completion_bound': 6, 'pair_frame_bound': 4}),
    ('pattern-closure', {'frame_bound': 5, 'pair_frame_bound': 3}),
    ('submonoid', {'frame_bound': 6, 'monoid_frame_bound': 6}),
    ('bracket-identities', {'frame_bound': 3, 'dual_frame_bound': 4, 'a_frame_bound': 4,
                            'argument_points': 4, 'sector_points': 6}),
    ('bracket-classification', {'max_lower': 4, 'minimal_lower': 6}),
    ('s-family', {'max_points': 6, 'w_bound': 4}),
])
def test_bounded_suites_pass(name, params):
    report = verify_suite(name, **params)
    assert report.passed, report.counterexamples
    assert report.checked > 0
    assert report.failures == 0


def test_nc_base():
    report = verify_suite('nc-base', max_points=6, intermediate=6)
    assert report.passed, report.counterexamples
    assert report.bounds == {'max_points': 6, 'intermediate_points': 6}


def test_soundness_of_generators():
    report = verify_suite(
        'main-thm-1-sound',
        specs=["D{gens=2,3; zero=1}", "D{gens=1; zero=0}"],
        max_points=6,
        intermediate=8,
    )
    assert report.passed, report.counterexamples


def test_completeness_within_four_points():
    report = verify_suite(
        'main-thm-1-complete',
        specs=["D{gens=1; zero=1}", "D{gens=2,3; zero=1}"],
        max_points=4,
        intermediate=8,
        step=4,
        ceiling=8,
    )
    assert report.passed, report.counterexamples
    assert report.bounds['intermediate_used'] == 8


def test_s_w_soundness():
    report = verify_suite('s-w-sound', w_values=(1, 2), max_points=6, intermediate=8)
    assert report.passed, report.counterexamples


def test_distinctness_witness():
    report = verify_suite('distinctness')
    assert report.passed
    assert report.details['witness'] == str(build_bracket_from_pattern(Color.BLACK, BracketPattern.of([1, 2])))
    assert report.details['in'] == "D{gens=3,4,5; zero=1}"
    assert report.details['generated'] == 'yes'
    assert report.details['generated_from_other'] == 'no-within-bounds'



def test_non_finite_generation():
    report = verify_suite('non-finite-generation')
    assert report.passed
    assert report.details == {'union_a_2': '{1,2}', 'union_a_5': '{1,2,3,4,5}'}
    assert report.bounds == {'frame_bound': 5, 'rounds': 1}
    assert report.checked == 5


def test_reports_are_reproducible():
    first = verify_suite('pattern-closure', frame_bound=4, pair_frame_bound=2)
    second = verify_suite('pattern-closure', frame_bound=4, pair_frame_bound=2)
    first.wall_time = second.wall_time = 0.0
    assert first == second
