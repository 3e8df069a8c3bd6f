"""Tests for report rendering and partition list files"""
import pandas as pd

from brackets import HALF_LIBERATION
from partition import EMPTY, parse
from utils import ReportGenerator, load_partition_list, save_partition_list
from verify import Report


def sample_report():
    return Report(
        'nc-base',
        {'max_points': 4, 'intermediate': 6},
        False,
        12,
        1,
        ['U[w] L[w] B{l1,u1}'],
        {'max_points': 4, 'intermediate_points': 6},
        {'classes': '5'},
        1.25,
    )


def test_records_text():
    text = ReportGenerator.to_records(sample_report())
    assert text.splitlines()[:4] == ['suite=nc-base', 'passed=false', 'checked=12', 'failures=1']
    assert 'param.intermediate=6' in text
    assert 'bound.max_points=4' in text
    assert 'counterexample=U[w] L[w] B{l1,u1}' in text
    assert 'wall_time' not in text
    assert 'wall_time=1.25' in ReportGenerator.to_records(sample_report(), timing=True)


def test_records_read_back():
    report = sample_report()
    text = ReportGenerator.to_records(report, timing=True) + '\n' + ReportGenerator.to_records(report)
    first, second = ReportGenerator.parse_records(text)
    assert first.suite == 'nc-base'
    assert not first.passed
    assert first.bounds == report.bounds
    assert first.details == report.details
    assert first.counterexamples == report.counterexamples
    assert first.wall_time == 1.25
    assert second.wall_time == 0.0


def test_plain_text():
    text = ReportGenerator.to_plain(sample_report())
    assert text.startswith('nc-base: FAIL (12 checks, 1 failures; intermediate_points=6, max_points=4)')
    assert '  classes: 5' in text


def test_csv_export(tmp_path):
    reports = [sample_report(), Report('figure', {}, True, 4)]
    path = ReportGenerator.export_to_csv(reports, str(tmp_path / 'reports.csv'))
    df = pd.read_csv(path)
    assert list(df['suite']) == ['nc-base', 'figure']
    assert list(df['passed']) == [False, True]
    assert list(df['counterexamples']) == [1, 0]


def test_json_export(tmp_path):
    path = ReportGenerator.export_to_json([sample_report()], str(tmp_path / 'reports.json'))
    assert '"suite": "nc-base"' in open(path).read()


def test_summary_table():
    table = ReportGenerator.create_summary_table([sample_report(), Report('figure', {}, True, 4)])
    assert 'nc-base' in table
    assert 'figure' in table
    assert '1/2' in table


def test_partition_list_files(tmp_path):
    path = tmp_path / 'gens.txt'
    save_partition_list(path, [HALF_LIBERATION, EMPTY])
    assert path.read_text() == f"{HALF_LIBERATION}\nU[] L[] B{{}}\n"
    path.write_text(path.read_text() + "\n# comment\n  U[w] L[w] B{l1,u1}  \n")
    assert load_partition_list(path) == [HALF_LIBERATION, EMPTY, parse("U[w] L[w] B{l1,u1}")]
