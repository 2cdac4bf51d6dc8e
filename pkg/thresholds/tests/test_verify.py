import json
from unittest.mock import patch

from django.test import SimpleTestCase

from thresholds.exceptions import ThresholdError
from thresholds.extremal import colex_code
from thresholds.report_store import render_report
from thresholds.verify import (
    CONJECTURE,
    MAX_MATCHINGS,
    EdgeClassStats,
    Extreme,
    check_max_matchings,
    conjecture_scan,
    enumerate_codes,
    remark_witness,
    survey,
    verify_max_matchings,
    verify_min_indsets,
)


def snapshot(report):
    return {e: stats.to_dict() for e, stats in report.stats.items()}


class EnumerateTests(SimpleTestCase):

    def test_sizes(self):
        self.assertEqual([str(code) for code in enumerate_codes(1)], ['*'])
        self.assertEqual([str(code) for code in enumerate_codes(3)], ['00*', '01*', '10*', '11*'])
        codes = list(enumerate_codes(10))
        self.assertEqual(len(codes), 512)
        self.assertEqual(len(set(codes)), 512)
        self.assertEqual(str(codes[0]), '000000000*')

    def test_no_vertices(self):
        with self.assertRaises(ThresholdError):
            list(enumerate_codes(0))
        with self.assertRaises(ThresholdError):
            survey(0)


class ExtremeTests(SimpleTestCase):

    def test_merge_keeps_smallest_witnesses(self):
        left, right = Extreme(maximize=True), Extreme(maximize=True)
        for code in ('011*', '110*'):
            left.observe(5, code, 2)
        right.observe(5, '001*', 2)
        right.observe(3, '000*', 2)
        left.merge(right, 2)
        self.assertEqual((left.value, left.count, left.witnesses), (5, 3, ['001*', '011*']))

    def test_minimum(self):
        lowest = Extreme(maximize=False)
        lowest.observe(4, '11*', 8)
        lowest.observe(6, '01*', 8)
        self.assertEqual((lowest.value, lowest.count), (4, 1))

    def test_stats_round_trip_through_dict(self):
        report = survey(6, workers=1, prefix_length=0)
        for stats in report.stats.values():
            self.assertEqual(EdgeClassStats.from_dict(stats.to_dict()), stats)

    def test_merge_rejects_other_edge_count(self):
        with self.assertRaises(ThresholdError):
            EdgeClassStats.empty(4, 2).merge(EdgeClassStats.empty(4, 3), 8)


class SurveyTests(SimpleTestCase):

    def test_counts(self):
        report = survey(8, workers=1)
        self.assertEqual(report.code_count, 128)
        self.assertEqual(sum(stats.count for stats in report.stats.values()), 128)
        self.assertEqual(list(report.stats), list(range(29)))

    def test_prefix_split_and_workers_agree(self):
        whole = survey(9, workers=1, prefix_length=0)
        split = survey(9, workers=1, prefix_length=3)
        pooled = survey(9, workers=2, prefix_length=3)
        self.assertEqual(split.prefix_length, 3)
        self.assertEqual(snapshot(split), snapshot(whole))
        self.assertEqual(snapshot(pooled), snapshot(whole))

    def test_prefix_length_capped(self):
        self.assertEqual(survey(3, workers=1, prefix_length=6).prefix_length, 2)

    def test_resume_from_finished_prefixes(self):
        finished = {}

        def on_prefix(prefix, stats, code_count):
            finished[prefix] = (stats, code_count)

        first = survey(8, workers=1, prefix_length=2, on_prefix=on_prefix)
        self.assertEqual(sorted(finished), ['00', '01', '10', '11'])

        done = {prefix: finished[prefix] for prefix in ('00', '11')}
        fresh = []
        resumed = survey(8, workers=1, prefix_length=2, done=done,
                         on_prefix=lambda prefix, stats, count: fresh.append(prefix))
        self.assertEqual(resumed.resumed_prefixes, 2)
        self.assertEqual(sorted(fresh), ['01', '10'])
        self.assertEqual(snapshot(resumed), snapshot(first))


class TheoremTests(SimpleTestCase):

    def test_max_matchings(self):
        for n in range(1, 13):
            report = verify_max_matchings(n, workers=1)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report.n_values, [n])

    def test_min_indsets(self):
        for n in range(1, 13):
            report = verify_min_indsets(n, workers=1)
            self.assertTrue(report.passed, report.failures)

    def test_unique_colex_witness(self):
        stats = verify_min_indsets(4, workers=1).surveys[0].stats[4]
        self.assertEqual(stats.min_i.witnesses, ['101*'])
        self.assertEqual(stats.min_i.count, 1)

    def test_tampered_maximum_is_reported(self):
        report = survey(5, workers=1)
        report.stats[4].max_m.value += 1
        with self.assertLogs('thresholds.verify', 'WARNING') as logs:
            failures = check_max_matchings(report)
        self.assertIn('max-value', [failure.clause for failure in failures])
        self.assertIn('Counterexample n=5 e=4', logs.output[0])


class ConjectureTests(SimpleTestCase):

    def test_scan(self):
        report = conjecture_scan(14, workers=1)
        self.assertEqual(report.mode, CONJECTURE)
        self.assertTrue(report.passed, report.failures)
        self.assertFalse(report.truncated)
        self.assertEqual(report.n_values, list(range(1, 15)))

    def test_spent_budget_stops_early(self):
        report = conjecture_scan(10, budget=-1, workers=1, n_min=3)
        self.assertTrue(report.truncated)
        self.assertEqual(report.n_values, [])
        self.assertTrue(report.passed)

    def test_tie_at_zero_matchings(self):
        stats = conjecture_scan(8, workers=1, n_min=8).surveys[0].stats[13]
        self.assertEqual(stats.max_m_k[4].value, 0)
        self.assertEqual(stats.max_non_aa_m_k[4].value, 0)
        self.assertEqual(stats.max_non_aa_m_k[1].value, 13)

    def test_counterexamples_logged_while_surveying(self):
        seen = []

        def checkpoint(n):
            return {}, lambda prefix, stats, code_count: seen.append(len(logs.records))

        with patch('thresholds.verify.almost_alternating_code', colex_code):
            with self.assertLogs('thresholds.verify', 'WARNING') as logs:
                report = conjecture_scan(6, workers=1, prefix_length=2, checkpoint=checkpoint, n_min=6)

        self.assertFalse(report.passed)
        self.assertEqual(len(seen), 4)
        self.assertGreater(seen[-1], 0)
        self.assertEqual(len(logs.records), seen[-1])
        self.assertEqual(len(logs.records), len({(f.e, f.k, f.clause) for f in report.failures}))

    def test_remark_witness(self):
        witness = remark_witness()
        self.assertFalse(witness.code_is_almost_alternating)
        self.assertEqual(witness.code_m_k, 0)
        self.assertEqual(str(witness.representative), '0101011*')
        self.assertEqual(witness.representative_m_k, 0)
        self.assertFalse(witness.strictness_applies)
        self.assertEqual(witness.printed_code_edges, 15)


class RenderTests(SimpleTestCase):

    def setUp(self):
        self.report = verify_max_matchings(3, workers=1)

    def test_csv(self):
        self.assertEqual(render_report(self.report, 'csv'), (
            "n,e,codes,almost_alternating,max_m,max_m_codes,max_non_aa_m,aa_vectors,"
            "min_i,min_i_codes,extremal_code,passed,failures\n"
            "3,0,1,1,1,1,,1,8,1,00*,True,\n"
            "3,1,1,1,2,1,,1,6,1,01*,True,\n"
            "3,2,1,1,3,1,,1,5,1,10*,True,\n"
            "3,3,1,1,4,1,,1,4,1,11*,True,\n"
        ))

    def test_json_counts_are_strings(self):
        data = json.loads(render_report(self.report, 'json'))
        self.assertEqual(data['mode'], MAX_MATCHINGS)
        self.assertTrue(data['passed'])
        self.assertEqual(data['rows'][3]['max_m'], '4')
        self.assertEqual(data['surveys'][0]['stats'][2]['max_m']['value'], '3')

    def test_json_without_meta_is_fixed(self):
        def extreme(value, code, count=1):
            return {'value': value, 'count': count if value is not None else 0,
                    'witnesses': [code] if value is not None else []}

        empty = extreme(None, None)
        expected = {
            'mode': 'max-matchings',
            'passed': True,
            'truncated': False,
            'n_values': [2],
            'rows': [
                {'n': 2, 'e': 0, 'codes': 1, 'almost_alternating': 1, 'max_m': '1', 'max_m_codes': 1,
                 'max_non_aa_m': None, 'aa_vectors': 1, 'min_i': '4', 'min_i_codes': 1,
                 'extremal_code': '0*', 'passed': True, 'failures': ''},
                {'n': 2, 'e': 1, 'codes': 1, 'almost_alternating': 1, 'max_m': '2', 'max_m_codes': 1,
                 'max_non_aa_m': None, 'aa_vectors': 1, 'min_i': '3', 'min_i_codes': 1,
                 'extremal_code': '1*', 'passed': True, 'failures': ''},
            ],
            'failures': [],
            'surveys': [{
                'n': 2,
                'code_count': 2,
                'prefix_length': 1,
                'resumed_prefixes': 0,
                'stats': [
                    {'n': 2, 'e': 0, 'count': 1, 'aa_count': 1,
                     'max_m': extreme('1', '0*'), 'aa_min_m': extreme('1', '0*'),
                     'max_non_aa_m': empty, 'min_i': extreme('4', '0*'),
                     'aa_match_vectors': [['1', '0']],
                     'max_m_k': [extreme('1', '0*'), extreme('0', '0*')],
                     'max_non_aa_m_k': [empty, empty],
                     'min_i_k': [extreme('1', '0*'), extreme('2', '0*'), extreme('1', '0*')]},
                    {'n': 2, 'e': 1, 'count': 1, 'aa_count': 1,
                     'max_m': extreme('2', '1*'), 'aa_min_m': extreme('2', '1*'),
                     'max_non_aa_m': empty, 'min_i': extreme('3', '1*'),
                     'aa_match_vectors': [['1', '1']],
                     'max_m_k': [extreme('1', '1*'), extreme('1', '1*')],
                     'max_non_aa_m_k': [empty, empty],
                     'min_i_k': [extreme('1', '1*'), extreme('2', '1*'), extreme('0', '1*')]},
                ],
            }],
        }
        data = json.loads(render_report(verify_max_matchings(2, workers=1, prefix_length=1), 'json'))
        meta = data['surveys'][0].pop('meta')
        self.assertEqual(sorted(meta), ['elapsed', 'workers'])
        self.assertEqual(data, expected)

    def test_json_identical_across_workers(self):
        def without_meta(workers):
            data = json.loads(render_report(conjecture_scan(8, workers=workers, prefix_length=3, n_min=7), 'json'))
            for survey_data in data['surveys']:
                survey_data.pop('meta')
            return json.dumps(data, indent=2)

        self.assertEqual(without_meta(1), without_meta(2))

    def test_text(self):
        lines = render_report(self.report, 'text').splitlines()
        self.assertEqual(len(lines), 5)
        self.assertEqual(lines[-1], 'max-matchings n=3: PASS')
