"""Report formatting and export, plus partition list files"""
import json
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

import pandas as pd

from partition import Partition, parse, serialize
from verify import Report


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (set, frozenset)):
        return '{' + ','.join(map(str, sorted(value))) + '}'
    if isinstance(value, (list, tuple)):
        return ','.join(map(str, value))
    return str(value)


class ReportGenerator:
    """Render verification reports in various formats"""

    @staticmethod
    def to_records(report: Report, timing: bool = False) -> str:
        """
        Line-delimited key=value records.

        Wall time is left out unless `timing` is set, so identical runs give
        identical text.
        """
        lines = [
            f"suite={report.suite}",
            f"passed={_format_value(report.passed)}",
            f"checked={report.checked}",
            f"failures={report.failures}",
        ]
        if timing:
            lines.append(f"wall_time={report.wall_time}")
        lines += [f"param.{k}={_format_value(v)}" for k, v in sorted(report.params.items())]
        lines += [f"bound.{k}={v}" for k, v in sorted(report.bounds.items())]
        lines += [f"detail.{k}={v}" for k, v in sorted(report.details.items())]
        lines += [f"counterexample={c}" for c in report.counterexamples]
        return '\n'.join(lines) + '\n'

    @staticmethod
    def parse_records(text: str) -> List[Report]:
        """Read reports back from records; reports are separated by blank lines"""
        reports = []
        for chunk in text.strip().split('\n\n'):
            if not chunk.strip():
                continue
            fields: Dict[str, Any] = {
                'params': {}, 'bounds': {}, 'details': {}, 'counterexamples': [],
            }
            for line in chunk.splitlines():
                key, _, value = line.partition('=')
                if key.startswith('param.'):
                    fields['params'][key[6:]] = value
                elif key.startswith('bound.'):
                    fields['bounds'][key[6:]] = int(value)
                elif key.startswith('detail.'):
                    fields['details'][key[7:]] = value
                elif key == 'counterexample':
                    fields['counterexamples'].append(value)
                elif key == 'passed':
                    fields['passed'] = value == 'true'
                elif key in ('checked', 'failures'):
                    fields[key] = int(value)
                elif key == 'wall_time':
                    fields[key] = float(value)
                else:
                    fields[key] = value
            reports.append(Report(**fields))
        return reports

    @staticmethod
    def to_plain(report: Report) -> str:
        status = 'PASS' if report.passed else 'FAIL'
        bounds = ', '.join(f"{k}={v}" for k, v in sorted(report.bounds.items()))
        lines = [f"{report.suite}: {status} ({report.checked} checks, {report.failures} failures; {bounds})"]
        lines += [f"  {k}: {v}" for k, v in sorted(report.details.items())]
        lines += [f"  counterexample: {c}" for c in report.counterexamples]
        return '\n'.join(lines) + '\n'

    @staticmethod
    def export_to_json(reports: List[Report], filename: str = 'verification_report.json'):
        """Export reports to JSON"""
        with open(filename, 'w') as f:
            json.dump([asdict(r) for r in reports], f, indent=2, default=str)
        return filename

    @staticmethod
    def export_to_csv(reports: List[Report], filename: str = 'verification_report.csv'):
        """Export one row per report to CSV"""
        df = pd.DataFrame([
            {
                'suite': r.suite,
                'passed': r.passed,
                'checked': r.checked,
                'failures': r.failures,
                'wall_time': r.wall_time,
                'bounds': json.dumps(r.bounds, sort_keys=True),
                'counterexamples': len(r.counterexamples),
            }
            for r in reports
        ], columns=['suite', 'passed', 'checked', 'failures', 'wall_time', 'bounds', 'counterexamples'])
        df.to_csv(filename, index=False)
        return filename

    @staticmethod
    def create_summary_table(reports: List[Report]) -> str:
        """Create a formatted summary table"""
        passed = sum(1 for r in reports if r.passed)
        checks = sum(r.checked for r in reports)
        rows = ''.join(
            f"║ {r.suite:<32}{('PASS' if r.passed else 'FAIL'):>8}{r.checked:>26} ║\n"
            for r in reports
        )
        summary = f"""
╔════════════════════════════════════════════════════════════════════╗
║                     VERIFICATION SUMMARY                           ║
╠════════════════════════════════════════════════════════════════════╣
{rows}╠════════════════════════════════════════════════════════════════════╣
║ Suites passed: {f'{passed}/{len(reports)}':>51} ║
║ Total checks:  {checks:>51} ║
╚════════════════════════════════════════════════════════════════════╝
"""
        return summary


def load_partition_list(path: Union[str, Path]) -> List[Partition]:
    """One serialization per line; blank lines and '#' comments are skipped"""
    partitions = []
    for line in Path(path).read_text().splitlines():
        text = line.strip()
        if text and not text.startswith('#'):
            partitions.append(parse(text))
    return partitions


def save_partition_list(path: Union[str, Path], partitions: Iterable[Partition]):
    Path(path).write_text(''.join(f"{serialize(p)}\n" for p in partitions))
    return str(path)
