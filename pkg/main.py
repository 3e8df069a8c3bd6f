"""Main entry point for the partition category workbench"""
import logging
from functools import cached_property
from typing import Iterable, List, Optional

import config
from closure import ClosureConfig, ClosureSet, bracket_patterns_of, generate, theorem_generators
from color_metrics import SemigroupSpec
from database import ClosureStore
from partition import Partition
from patterns import PatternCategory, infer_monoid
from utils import ReportGenerator
from verify import Report, suite_names, verify_suite

logging.basicConfig(
    level=config.LOG_LEVEL.upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


class CategoryWorkbench:
    """Closure runs and verification suites, optionally backed by the SQLite store"""

    def __init__(self, db_path: str = config.DB_PATH, use_cache: bool = config.USE_CACHE):
        self.db_path = db_path
        self.use_cache = use_cache

    @cached_property
    def store(self) -> ClosureStore:
        return ClosureStore(self.db_path)

    def closure(
        self,
        gens: Iterable[Partition],
        cfg: Optional[ClosureConfig] = None,
        use_cache: Optional[bool] = None,
    ) -> ClosureSet:
        """
        Bounded closure of `gens`.

        With caching on, a stored run for the same generators and bounds is
        returned as is; fresh runs are stored afterwards.
        """
        cfg = cfg or ClosureConfig()
        gens = list(gens)
        cached = self.use_cache if use_cache is None else use_cache
        if cached:
            found = self.store.find_run(gens, cfg)
            if found is not None:
                return found

        cs = generate(gens, cfg)
        if cached:
            self.store.save_run(cs)
        return cs

    def category_of(self, d: SemigroupSpec, cfg: Optional[ClosureConfig] = None) -> ClosureSet:
        """Bounded closure of the generators of I_D"""
        cfg = cfg or ClosureConfig()
        return self.closure(theorem_generators(d, cfg.intermediate_points), cfg)

    def bracket_patterns(
        self,
        gens: Iterable[Partition],
        frame_bound: int,
        cfg: Optional[ClosureConfig] = None,
    ) -> PatternCategory:
        """Patterns of the minimal black brackets found in the closure of `gens`"""
        return bracket_patterns_of(self.closure(gens, cfg), frame_bound)

    def verify(self, names: Optional[List[str]] = None, save: bool = False, **params) -> List[Report]:
        """Run suites in order; all registered suites when `names` is empty"""
        reports = []
        for name in names or suite_names():
            report = verify_suite(name, **params)
            if save:
                self.store.save_report(report)
            reports.append(report)

        failed = [r.suite for r in reports if not r.passed]
        if failed:
            logger.warning(f"Failed suites: {', '.join(failed)}")
        return reports

    def export_reports(self, fmt: str = 'json', filename: Optional[str] = None) -> str:
        """Export stored reports as json or csv"""
        reports = self.store.get_reports()
        logger.info(f"Exporting {len(reports)} reports as {fmt}")
        if fmt == 'csv':
            return ReportGenerator.export_to_csv(reports, filename or 'verification_report.csv')
        return ReportGenerator.export_to_json(reports, filename or 'verification_report.json')

    def print_summary(self, reports: List[Report]):
        print(ReportGenerator.create_summary_table(reports))


def example_usage():
    """Example of how to use the workbench"""
    bench = CategoryWorkbench(use_cache=True)

    d = SemigroupSpec.parse("D{gens=2,3; zero=1}")
    cfg = ClosureConfig(max_points=8, intermediate_points=12)
    cs = bench.category_of(d, cfg)
    print(f"I_{d}: {len(cs.classes)} rotation classes, {len(cs.members)} partitions up to 8 points")

    patterns = bracket_patterns_of(cs, frame_bound=1)
    print(f"Bracket patterns: {patterns}")
    print(f"Monoid: {infer_monoid(patterns, bound=1)}")

    reports = bench.verify(['figure', 'pattern-algebra', 'distinctness'], save=True)
    bench.print_summary(reports)
    print(f"Reports exported to {bench.export_reports('json')}")


if __name__ == '__main__':
    example_usage()
