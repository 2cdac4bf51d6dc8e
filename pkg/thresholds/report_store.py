"""
Persistence for verification runs: finished prefixes go to the database as
they complete, so an interrupted run can resume, and reports are written
to JSON or CSV files.
"""
import csv
import io
import json
import logging
from pathlib import Path
from typing import Dict, Optional

from django.conf import settings

from .exceptions import UnknownFormat
from .models import PrefixResult, VerificationRun
from .serializers import EdgeClassRowSerializer, VerificationReportSerializer
from .verify import Checkpoint, EdgeClassStats, PrefixStats, VerificationReport

logger = logging.getLogger(__name__)

REPORT_FORMATS = ('text', 'json', 'csv')
CSV_COLUMNS = list(EdgeClassRowSerializer().fields)


def render_report(report: VerificationReport, fmt: str) -> str:
    """Report as ``text``, ``json`` or ``csv`` (one row per (n, e))."""
    if fmt == 'json':
        return json.dumps(VerificationReportSerializer(report).data, indent=2) + '\n'

    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator='\n')
        writer.writeheader()
        for row in EdgeClassRowSerializer(report.rows(), many=True).data:
            writer.writerow(row)
        return buffer.getvalue()

    if fmt == 'text':
        lines = []
        for row in report.rows():
            verdict = 'ok' if row['passed'] else f"FAIL {row['failures']}"
            lines.append(
                f"n={row['n']} e={row['e']} codes={row['codes']} aa={row['almost_alternating']} "
                f"max_m={row['max_m']} min_i={row['min_i']} extremal={row['extremal_code']} {verdict}"
            )
        for failure in report.failures:
            k = f" k={failure.k}" if failure.k is not None else ''
            lines.append(f"counterexample n={failure.n} e={failure.e}{k} [{failure.clause}] {failure.detail} {' '.join(failure.codes)}".rstrip())
        status = 'PASS' if report.passed else f"FAIL ({len(report.failures)} failure(s))"
        if report.truncated:
            status += ', stopped early by budget'
        lines.append(f"{report.mode} n={','.join(str(n) for n in report.n_values)}: {status}")
        return '\n'.join(lines) + '\n'

    raise UnknownFormat(f"Unknown report format {fmt!r}; expected one of {', '.join(REPORT_FORMATS)}")


class ReportStore:
    """Database-backed record of verification runs and their finished prefixes."""

    def __init__(self, report_dir: Optional[Path] = None):
        self.report_dir = Path(report_dir or getattr(settings, 'REPORT_DIR', Path('reports')))
        self.runs: Dict[int, VerificationRun] = {}

    def start_run(self, n: int, mode: str, prefix_length: int, resume: bool = False) -> VerificationRun:
        """Open a run; with ``resume`` the latest unfinished run for the same work is reused."""
        if resume:
            run = VerificationRun.objects.filter(
                n=n, mode=mode, prefix_length=prefix_length, status='running'
            ).first()
            if run is not None:
                logger.info(f"Resuming run {run.id} ({run}) with {run.prefixes.count()} stored prefixes")
                return run
        run = VerificationRun.objects.create(n=n, mode=mode, prefix_length=prefix_length)
        logger.info(f"Started run {run.id} ({run})")
        return run

    def record_prefix(self, run: VerificationRun, prefix: str, stats: Dict[int, EdgeClassStats], code_count: int) -> PrefixResult:
        result, _ = PrefixResult.objects.update_or_create(
            run=run,
            prefix=prefix,
            defaults={
                'code_count': code_count,
                'stats': [record.to_dict() for record in stats.values()],
            },
        )
        return result

    def completed_prefixes(self, run: VerificationRun) -> Dict[str, PrefixStats]:
        completed = {}
        for result in run.prefixes.all():
            stats = {data['e']: EdgeClassStats.from_dict(data) for data in result.stats}
            completed[result.prefix] = (stats, result.code_count)
        return completed

    def finish_run(self, run: VerificationRun, passed: bool, failure_count: int = 0) -> VerificationRun:
        run.status = 'passed' if passed else 'failed'
        run.failure_count = failure_count
        run.save(update_fields=['status', 'failure_count', 'updated_at'])
        logger.info(f"Finished run {run.id} ({run})")
        return run

    def checkpoint(self, mode: str, prefix_length: Optional[int] = None, resume: bool = False) -> Checkpoint:
        """Hook for the verify functions: one run per n, each finished prefix stored."""
        if prefix_length is None:
            prefix_length = getattr(settings, 'VERIFY_PREFIX_LENGTH', 4)

        def open_run(n: int):
            run = self.start_run(n, mode, max(0, min(prefix_length, n - 1)), resume)
            self.runs[n] = run
            done = self.completed_prefixes(run)

            def on_prefix(prefix, stats, code_count):
                self.record_prefix(run, prefix, stats, code_count)

            return done, on_prefix

        return open_run

    def finish(self, report: VerificationReport) -> None:
        """Close the runs opened through :meth:`checkpoint` for this report."""
        for n in report.n_values:
            run = self.runs.get(n)
            if run is None:
                continue
            failures = sum(1 for failure in report.failures if failure.n == n)
            self.finish_run(run, failures == 0, failures)

    def write_report(self, report: VerificationReport, fmt: str, path: Optional[Path] = None) -> Path:
        text = render_report(report, fmt)
        if path is None:
            sizes = '-'.join(str(n) for n in report.n_values) or 'none'
            path = self.report_dir / f"{report.mode}-n{sizes}.{'txt' if fmt == 'text' else fmt}"
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        except OSError as e:
            logger.error(f"Error writing report to {path}: {e}")
            raise
        logger.info(f"Wrote {fmt} report to {path}")
        return path
