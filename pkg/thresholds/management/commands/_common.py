"""
Shared pieces of the threshold management commands.
"""
import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ...exceptions import ComputationError, ThresholdError
from ...report_store import REPORT_FORMATS, ReportStore, render_report

logger = logging.getLogger('thresholds.commands')

USAGE_ERROR = 2
CHECK_FAILED = 1


def format_errors(errors) -> str:
    """Flatten serializer errors into one line per field."""
    lines = []
    for field, messages in errors.items():
        if isinstance(messages, dict):
            messages = [format_errors(messages)]
        for message in messages:
            lines.append(f"{field}: {message}" if field != 'non_field_errors' else str(message))
    return '; '.join(lines)


class ThresholdCommand(BaseCommand):
    """
    Base command: validates options with a serializer, turns argument errors
    into exit status 2 and failed checks or computations into exit status 1.
    """

    def add_code_argument(self, parser):
        parser.add_argument('code', help="Creation code, e.g. 001001* (a final 0/1 stands for *)")
        parser.add_argument('--ab', action='store_true', help="Read the code as block+word, e.g. 000aaba*")

    def add_format_argument(self, parser, choices=('text', 'json')):
        parser.add_argument('--format', dest='output_format', choices=choices, default='text')

    def validated(self, serializer_class, data):
        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors), returncode=USAGE_ERROR)
        return serializer.validated_data

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except ComputationError as e:
            logger.error(f"Command {self.__module__.rsplit('.', 1)[-1]} failed: {e}")
            raise CommandError(str(e), returncode=CHECK_FAILED)
        except ThresholdError as e:
            raise CommandError(str(e), returncode=USAGE_ERROR)
        except CommandError:
            raise
        except Exception as e:
            logger.error(f"Command {self.__module__.rsplit('.', 1)[-1]} failed: {e}")
            raise

    def run(self, **options):
        raise NotImplementedError

    def write_json(self, data):
        self.stdout.write(json.dumps(data, indent=2))


class RunCommand(ThresholdCommand):
    """Base for the exhaustive commands (verify, scan)."""

    def add_run_arguments(self, parser):
        parser.add_argument('--workers', type=int, default=None,
                            help="Worker processes (default: VERIFY_WORKERS / THRESHOLD_WORKERS)")
        parser.add_argument('--prefix-length', type=int, default=None,
                            help="Split the code space by prefixes of this length")
        parser.add_argument('--format', dest='output_format', choices=REPORT_FORMATS, default='text')
        parser.add_argument('--output', default=None, help="Write the report to this file instead of stdout")
        parser.add_argument('--store', action='store_true', help="Record finished prefixes in the database")
        parser.add_argument('--resume', action='store_true', help="Continue the latest unfinished stored run")

    def run_request(self, options) -> dict:
        workers = options['workers'] or getattr(settings, 'VERIFY_WORKERS', 1)
        return {
            'workers': workers,
            'prefix_length': options['prefix_length'],
            'format': options['output_format'],
            'output': options['output'],
            'resume': options['resume'],
        }

    def open_store(self, options):
        if options['store'] or options['resume']:
            return ReportStore()
        return None

    def deliver(self, report, request, store):
        """Write the report, close stored runs, and fail the command on counterexamples."""
        if store is not None:
            store.finish(report)
        if request.get('output'):
            path = (store or ReportStore()).write_report(report, request['format'], request['output'])
            self.stderr.write(f"Report written to {path}")
        else:
            self.stdout.write(render_report(report, request['format']), ending='')
        if not report.passed:
            raise CommandError(f"{report.mode}: {len(report.failures)} failure(s)", returncode=CHECK_FAILED)
