"""Tests for the command-line interface"""
import pytest

import cli
from color_metrics import SemigroupSpec
from partition import parse
from utils import ReportGenerator, load_partition_list

FIGURE = "U[wwwbbb] L[wwwbbb] B{l1,l6;l2,l5;l3,u3;l4,u4;u1,u6;u2,u5}"
HALF_LIBERATION = "U[wbw] L[wbw] B{l1,u3;l2,u2;l3,u1}"


@pytest.fixture(autouse=True)
def isolated_database(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def output(capsys):
    return capsys.readouterr().out.rstrip('\n')


def test_parse_prints_canonical_form(capsys):
    assert cli.run(['parse', 'U[wb] L[wb] B{u2,l2;u1,l1}']) == 0
    assert output(capsys) == "U[wb] L[wb] B{l1,u1;l2,u2}"


def test_parse_records(capsys):
    assert cli.run(['--format', 'records', 'parse', HALF_LIBERATION]) == 0
    assert output(capsys) == f"partition={HALF_LIBERATION}\npoints=6\nblocks=3"


def test_invalid_partition_exits_with_2(capsys):
    assert cli.run(['parse', 'U[w] L[w] B{l1}']) == 2
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'error: ' in captured.err


def test_usage_error_exits_with_2(capsys):
    assert cli.run(['no-such-verb']) == 2
    assert cli.run([]) == 2


def test_compose_reports_loops(capsys):
    identity = "U[w] L[w] B{l1,u1}"
    assert cli.run(['op', 'compose', identity, identity]) == 0
    assert output(capsys) == f"{identity}\nloops=0"


def test_compose_mismatch(capsys):
    assert cli.run(['op', 'compose', "U[w] L[w] B{l1,u1}", "U[b] L[b] B{l1,u1}"]) == 2


def test_unary_ops(capsys):
    assert cli.run(['op', 'invert', HALF_LIBERATION]) == 0
    assert output(capsys) == "U[bwb] L[bwb] B{l1,u3;l2,u2;l3,u1}"
    assert cli.run(['op', 'rotate', "U[w] L[] B{u1}", '--corner', 'upper-left-down']) == 0
    assert output(capsys) == "U[] L[b] B{l1}"
    assert cli.run(['op', 'erase', "U[] L[wbwb] B{l1,l2;l3,l4}", '--points', 'l2,l3']) == 0
    assert output(capsys) == "U[] L[wb] B{l1,l2}"
    assert cli.run(['op', 'line', HALF_LIBERATION]) == 0
    assert output(capsys) == "wbwbwb|0,1,2,0,1,2"


def test_classify(capsys):
    assert cli.run(['classify', FIGURE, '--d', 'D{gens=2,3; zero=1}']) == 0
    lines = output(capsys).splitlines()
    assert 'A: {1,2}' in lines
    assert 'noncrossing: no' in lines
    assert 's0: yes' in lines
    assert 'i_d: no' in lines


def test_classify_command_outside_s0():
    report = cli.classify_command(parse("U[bww] L[bww] B{l1,l3;l2,u2;u1,u3}"))
    assert report.details['s0'] == 'no'
    assert report.details['A'] == 'undefined'
    assert report.details['s_w'] == '{1}'
    assert 'i_d' not in report.details


def test_classify_command_with_semigroup():
    report = cli.classify_command(parse(FIGURE), SemigroupSpec.parse("D{gens=3,4,5; zero=1}"))
    assert report.details['i_d'] == 'yes'
    assert report.details['semigroup'] == "D{gens=3,4,5; zero=1}"


def test_bracket_commands(capsys):
    assert cli.run(['bracket', 'build', '--color', 'b', '--pattern', '1']) == 0
    bracket = output(capsys)
    assert bracket == "U[bbww] L[bbww] B{l1,l4;l2,u2;l3,u3;u1,u4}"
    assert cli.run(['bracket', 'classify', bracket]) == 0
    assert output(capsys) == "minimal {1}"
    assert cli.run(['bracket', 'dual', bracket]) == 0
    assert output(capsys) == "U[wwbb] L[wwbb] B{l1,l4;l2,u2;l3,u3;u1,u4}"
    assert cli.run(['bracket', 'argument', bracket]) == 0
    assert output(capsys) == "U[bw] L[bw] B{l1,u1;l2,u2}"


def test_bracket_of_empty_pattern(capsys):
    assert cli.run(['bracket', 'build', '--color', 'b', '--pattern', '{}']) == 2


def test_pattern_commands(capsys):
    assert cli.run(['pattern', 'complete', '{4}']) == 0
    assert output(capsys) == "{1,2,3,4}"
    assert cli.run(['pattern', 'dual', '{2}']) == 0
    assert output(capsys) == "{1,2}"
    assert cli.run(['pattern', 'closure', '{2}', '--infer']) == 0
    assert output(capsys) == "{{1}, {2}, {1,2}}\n{0,3,4,5,…}"
    assert cli.run(['pattern', 'monoid', '--gens', '3,5', '--frame-bound', '2']) == 0
    assert output(capsys) == "{{1}, {2}, {1,2}}"
    assert cli.run(['pattern', 'semigroup', '{1,3}']) == 0
    assert output(capsys) == "gaps={1,3} genus=2 frobenius=3"


def test_closure_command(tmp_path, capsys):
    gens = tmp_path / 'gens.txt'
    gens.write_text(f"# half-liberation\n{HALF_LIBERATION}\n")
    emitted = tmp_path / 'members.txt'
    assert cli.run([
        'closure', '--gens', str(gens), '--max-points', '6', '--intermediate', '6', '--emit', str(emitted),
    ]) == 0
    lines = dict(line.split('=') for line in output(capsys).splitlines())
    assert lines['generators'] == '1'
    members = load_partition_list(emitted)
    assert len(members) == int(lines['members'])
    assert parse(HALF_LIBERATION) in members


def test_closure_command_uses_cache(tmp_path, capsys):
    gens = tmp_path / 'gens.txt'
    gens.write_text(f"{HALF_LIBERATION}\n")
    args = ['closure', '--gens', str(gens), '--max-points', '4', '--intermediate', '6', '--cache']
    assert cli.run(args) == 0
    first = output(capsys)
    assert cli.run(args) == 0
    assert output(capsys) == first
    assert (tmp_path / 'partition_cache.db').exists()


def test_verify_records_are_deterministic(capsys):
    args = ['--format', 'records', 'verify', 'figure', 'distinctness']
    assert cli.run(args) == 0
    first = output(capsys)
    assert cli.run(args) == 0
    assert output(capsys) == first

    reports = ReportGenerator.parse_records(first)
    assert [r.suite for r in reports] == ['figure', 'distinctness']
    assert all(r.passed for r in reports)
    assert 'wall_time' not in first


def test_verify_filters_flags_across_suites(capsys):
    assert cli.run(['verify', 'figure', 'nc-base', '--max-points', '4', '--intermediate', '6']) == 0
    assert 'nc-base: PASS' in output(capsys)


def test_verify_rejects_flag_for_single_suite(capsys):
    assert cli.run(['verify', 'figure', '--max-points', '4']) == 2
    assert cli.run(['verify', 'no-such-suite']) == 2
