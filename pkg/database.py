"""SQLite cache of closure runs and verification reports"""
import json
import logging
import sqlite3
from typing import Dict, Iterable, List, Optional

from closure import ClosureConfig, ClosureSet, line_key, parse_line_key
from config import DB_PATH
from partition import Partition, parse, serialize
from verify import Report

logger = logging.getLogger(__name__)


class ClosureStore:
    """Persists closure runs keyed by generators and bounds, plus suite reports"""

    def __init__(self, db_path: str = DB_PATH):
        self.db_path = db_path
        self.init_database()

    def init_database(self):
        """Initialize database tables"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            CREATE TABLE IF NOT EXISTS closure_runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                generators TEXT NOT NULL,
                max_points INTEGER NOT NULL,
                intermediate_points INTEGER NOT NULL,
                max_iterations INTEGER NOT NULL,
                saturated INTEGER NOT NULL,
                iterations INTEGER,
                class_count INTEGER,
                member_count INTEGER,
                created_date TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                UNIQUE (generators, max_points, intermediate_points, max_iterations)
            )
        ''')

        cursor.execute('''
            CREATE TABLE IF NOT EXISTS closure_classes (
                run_id INTEGER NOT NULL,
                line TEXT NOT NULL,
                FOREIGN KEY (run_id) REFERENCES closure_runs(id)
            )
        ''')

        cursor.execute('''
            CREATE TABLE IF NOT EXISTS verification_reports (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                suite TEXT NOT NULL,
                passed INTEGER NOT NULL,
                checked INTEGER,
                failures INTEGER,
                params TEXT,
                bounds TEXT,
                details TEXT,
                counterexamples TEXT,
                wall_time REAL,
                created_date TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        ''')

        conn.commit()
        conn.close()

    @staticmethod
    def _generators_key(gens: Iterable[Partition]) -> str:
        return json.dumps(sorted({serialize(g) for g in gens}))

    def save_run(self, cs: ClosureSet) -> int:
        """Store a closure run, replacing an earlier run with the same key"""
        key = self._generators_key(cs.generators)
        cfg = cs.config
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            SELECT id FROM closure_runs
            WHERE generators = ? AND max_points = ? AND intermediate_points = ? AND max_iterations = ?
        ''', (key, cfg.max_points, cfg.intermediate_points, cfg.max_iterations))
        for (old_id,) in cursor.fetchall():
            cursor.execute('DELETE FROM closure_classes WHERE run_id = ?', (old_id,))
            cursor.execute('DELETE FROM closure_runs WHERE id = ?', (old_id,))

        cursor.execute('''
            INSERT INTO closure_runs
            (generators, max_points, intermediate_points, max_iterations, saturated,
             iterations, class_count, member_count)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
        ''', (
            key,
            cfg.max_points,
            cfg.intermediate_points,
            cfg.max_iterations,
            int(cs.saturated),
            cs.iterations,
            len(cs.classes),
            len(cs.members),
        ))
        run_id = cursor.lastrowid
        cursor.executemany(
            'INSERT INTO closure_classes (run_id, line) VALUES (?, ?)',
            [(run_id, line_key(line)) for line in sorted(cs.classes)],
        )

        conn.commit()
        conn.close()
        logger.info(f"Stored closure run {run_id} with {len(cs.classes)} classes")
        return run_id

    def find_run(self, gens: Iterable[Partition], cfg: ClosureConfig) -> Optional[ClosureSet]:
        """Cached closure for exactly these generators and bounds"""
        gens = tuple(sorted(set(gens), key=str))
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            SELECT id, saturated, iterations FROM closure_runs
            WHERE generators = ? AND max_points = ? AND intermediate_points = ? AND max_iterations = ?
        ''', (self._generators_key(gens), cfg.max_points, cfg.intermediate_points, cfg.max_iterations))
        row = cursor.fetchone()
        if not row:
            conn.close()
            return None

        run_id, saturated, iterations = row
        cursor.execute('SELECT line FROM closure_classes WHERE run_id = ?', (run_id,))
        classes = frozenset(parse_line_key(line) for (line,) in cursor.fetchall())
        conn.close()

        logger.info(f"Cache hit: closure run {run_id}")
        return ClosureSet(classes, bool(saturated), cfg, iterations, gens)

    def list_runs(self) -> List[Dict]:
        """Get all stored closure runs, newest first"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('SELECT * FROM closure_runs ORDER BY id DESC')
        rows = cursor.fetchall()
        conn.close()

        return [self._row_to_dict(row, 'closure_runs') for row in rows]

    def save_report(self, report: Report) -> int:
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        cursor.execute('''
            INSERT INTO verification_reports
            (suite, passed, checked, failures, params, bounds, details, counterexamples, wall_time)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)
        ''', (
            report.suite,
            int(report.passed),
            report.checked,
            report.failures,
            json.dumps(report.params, default=str),
            json.dumps(report.bounds),
            json.dumps(report.details),
            json.dumps(report.counterexamples),
            report.wall_time,
        ))
        report_id = cursor.lastrowid

        conn.commit()
        conn.close()
        return report_id

    def get_reports(self, suite: Optional[str] = None) -> List[Report]:
        """Get stored reports in insertion order, optionally for one suite"""
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()

        if suite:
            cursor.execute('SELECT * FROM verification_reports WHERE suite = ? ORDER BY id', (suite,))
        else:
            cursor.execute('SELECT * FROM verification_reports ORDER BY id')
        rows = cursor.fetchall()
        conn.close()

        return [Report(**self._row_to_dict(row, 'verification_reports')) for row in rows]

    def clear(self):
        conn = sqlite3.connect(self.db_path)
        cursor = conn.cursor()
        for table in ('closure_classes', 'closure_runs', 'verification_reports'):
            cursor.execute(f'DELETE FROM {table}')
        conn.commit()
        conn.close()

    @staticmethod
    def _row_to_dict(row, table_name):
        """Convert database row to dictionary"""
        if table_name == 'closure_runs':
            return {
                'id': row[0],
                'generators': [parse(text) for text in json.loads(row[1])],
                'max_points': row[2],
                'intermediate_points': row[3],
                'max_iterations': row[4],
                'saturated': bool(row[5]),
                'iterations': row[6],
                'class_count': row[7],
                'member_count': row[8],
                'created_date': row[9],
            }
        elif table_name == 'verification_reports':
            return {
                'suite': row[1],
                'passed': bool(row[2]),
                'checked': row[3],
                'failures': row[4],
                'params': json.loads(row[5]),
                'bounds': json.loads(row[6]),
                'details': json.loads(row[7]),
                'counterexamples': json.loads(row[8]),
                'wall_time': row[9],
            }
        return dict(row)
