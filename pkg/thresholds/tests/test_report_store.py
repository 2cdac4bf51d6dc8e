import tempfile
from pathlib import Path

from django.test import TestCase

from thresholds.exceptions import UnknownFormat
from thresholds.models import PrefixResult, VerificationRun
from thresholds.report_store import CSV_COLUMNS, ReportStore, render_report
from thresholds.verify import MIN_INDSETS, survey, survey_prefix, verify_min_indsets


class ReportStoreTests(TestCase):

    def setUp(self):
        self.store = ReportStore()

    def test_record_and_reload_prefix(self):
        run = self.store.start_run(6, MIN_INDSETS, 2)
        prefix, stats, visited = survey_prefix(6, '01', 8)
        self.store.record_prefix(run, prefix, stats, visited)
        self.store.record_prefix(run, prefix, stats, visited)

        self.assertEqual(run.prefixes.count(), 1)
        completed = self.store.completed_prefixes(run)
        reloaded, code_count = completed['01']
        self.assertEqual(code_count, 8)
        self.assertEqual(reloaded, stats)

    def test_resume_reuses_running_run(self):
        run = self.store.start_run(6, MIN_INDSETS, 2)
        self.assertEqual(self.store.start_run(6, MIN_INDSETS, 2, resume=True), run)
        self.assertNotEqual(self.store.start_run(6, MIN_INDSETS, 2), run)

        self.store.finish_run(run, passed=True)
        self.assertEqual(VerificationRun.objects.get(pk=run.pk).status, 'passed')
        resumed = self.store.start_run(6, MIN_INDSETS, 3, resume=True)
        self.assertNotEqual(resumed, run)

    def test_checkpointed_verification(self):
        checkpoint = self.store.checkpoint(MIN_INDSETS, 2)
        report = verify_min_indsets(6, workers=1, prefix_length=2, checkpoint=checkpoint)
        self.store.finish(report)

        run = VerificationRun.objects.get()
        self.assertEqual((run.n, run.prefix_length, run.status, run.failure_count), (6, 2, 'passed', 0))
        self.assertEqual(
            sorted(run.prefixes.values_list('prefix', flat=True)),
            ['00', '01', '10', '11'],
        )
        self.assertEqual(sum(run.prefixes.values_list('code_count', flat=True)), 32)

    def test_resumed_verification_matches_fresh(self):
        checkpoint = self.store.checkpoint(MIN_INDSETS, 2)
        verify_min_indsets(6, workers=1, prefix_length=2, checkpoint=checkpoint)
        PrefixResult.objects.filter(prefix__in=['01', '11']).delete()

        store = ReportStore()
        report = verify_min_indsets(6, workers=1, prefix_length=2,
                                    checkpoint=store.checkpoint(MIN_INDSETS, 2, resume=True))
        store.finish(report)

        self.assertEqual(VerificationRun.objects.count(), 1)
        self.assertEqual(report.surveys[0].resumed_prefixes, 2)
        self.assertTrue(report.passed)
        fresh = survey(6, workers=1, prefix_length=0)
        self.assertEqual(
            {e: s.to_dict() for e, s in report.surveys[0].stats.items()},
            {e: s.to_dict() for e, s in fresh.stats.items()},
        )

    def test_prefix_length_capped_for_small_n(self):
        checkpoint = self.store.checkpoint(MIN_INDSETS, 4)
        verify_min_indsets(2, workers=1, prefix_length=4, checkpoint=checkpoint)
        self.assertEqual(VerificationRun.objects.get().prefix_length, 1)

    def test_write_report(self):
        report = verify_min_indsets(4, workers=1)
        with tempfile.TemporaryDirectory() as tmp:
            store = ReportStore(Path(tmp) / 'reports')
            path = store.write_report(report, 'csv')
            self.assertEqual(path.name, 'min-indsets-n4.csv')
            lines = path.read_text().splitlines()
            self.assertEqual(lines[0], ','.join(CSV_COLUMNS))
            self.assertEqual(len(lines), 1 + 7)

            explicit = store.write_report(report, 'text', Path(tmp) / 'out.txt')
            self.assertTrue(explicit.read_text().endswith('min-indsets n=4: PASS\n'))

    def test_unknown_format(self):
        with self.assertRaises(UnknownFormat):
            render_report(verify_min_indsets(2, workers=1), 'xml')
