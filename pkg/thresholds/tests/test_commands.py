import json
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings

from thresholds import cli
from thresholds.codes import parse_code
from thresholds.models import VerificationRun
from thresholds.verify import MAX_MATCHINGS, Failure


def run_command(*args):
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


class CodeCommandTests(SimpleTestCase):

    def test_count(self):
        self.assertEqual(run_command('count', '0110*').splitlines(), [
            'matchings         [1, 5, 2] total 8',
            'independent sets  [1, 5, 5, 1] total 12',
        ])

    def test_count_json(self):
        data = json.loads(run_command('count', '0110*', '--format', 'json'))
        self.assertEqual(data['edges'], 5)
        self.assertEqual(data['matchings']['total'], '8')
        self.assertEqual(data['independent_sets']['counts'][:4], ['1', '5', '5', '1'])

    def test_edges_and_complement(self):
        self.assertEqual(run_command('edges', '0101011*').strip(), '13')
        self.assertEqual(run_command('complement', '001001*').strip(), '110110*')

    def test_analyze(self):
        out = run_command('analyze', '011011*')
        self.assertIn('almost alternating  no', out)
        self.assertIn('separation-issue', out)

        out = run_command('analyze', '--ab', '0aa')
        self.assertIn('code                0010*', out)

    def test_analyze_json(self):
        data = json.loads(run_command('analyze', '101010*', '--format', 'json'))
        self.assertTrue(data['almost_alternating'])
        self.assertEqual([form['text'] for form in data['forms']], ['1aaa', 'bbb*'])
        self.assertEqual(data['defects'], [])

    def test_bad_code(self):
        with self.assertRaises(CommandError) as ctx:
            run_command('count', '01x1*')
        self.assertIn('position 2', str(ctx.exception))
        self.assertEqual(ctx.exception.returncode, 2)

    def test_extremal(self):
        self.assertEqual(run_command('extremal', '--n', '4', '--e', '4', '--kind', 'indsets').strip(), '101*')
        self.assertEqual(run_command('extremal', '--n', '8', '--e', '13', '--kind', 'matchings').strip(), '0101011*')
        self.assertEqual(run_command('extremal', '--n', '8', '--e', '13', '--kind', 'indsets').strip(), '0011101*')

    def test_extremal_out_of_range(self):
        with self.assertRaises(CommandError) as ctx:
            run_command('extremal', '--n', '4', '--e', '7', '--kind', 'matchings')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('at most 6 edges', str(ctx.exception))

    def test_reduce(self):
        lines = run_command('reduce', '1001*', '--objective', 'indsets').splitlines()
        self.assertEqual(len(lines), 2)
        self.assertIn('indset-0-move', lines[0])
        self.assertEqual(lines[-1], 'final 0110* after 1 step(s)')

    def test_reduce_json(self):
        data = json.loads(run_command('reduce', '1001*', '--objective', 'indsets', '--format', 'json'))
        self.assertEqual(data['final'], '0110*')
        step = data['steps'][0]
        self.assertEqual((step['i_total_before'], step['i_total_after']), ('13', '12'))
        self.assertNotIn('m_total_before', step)

    @override_settings(MAX_REWRITE_STEPS=0)
    def test_reduction_limit_is_not_a_usage_error(self):
        with self.assertLogs('thresholds.commands', 'ERROR'):
            with self.assertRaises(CommandError) as ctx:
                run_command('reduce', '1001*', '--objective', 'indsets')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_disagreeing_constructions_are_not_a_usage_error(self):
        with patch('thresholds.extremal._complement_route', return_value=parse_code('011010*')):
            with self.assertRaises(CommandError) as ctx:
                run_command('extremal', '--n', '7', '--e', '12', '--kind', 'matchings')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_export(self):
        self.assertEqual(run_command('export', '011*').splitlines(), ['v2 v1', 'v3 v1', 'v3 v2'])
        self.assertIn('v2 -- v1', run_command('export', '01*', '--format', 'dot').replace(';', ''))


class RunCommandTests(TestCase):

    def test_verify(self):
        out = run_command('verify', '--n', '6', '--theorem', 'max-matchings', '--workers', '1')
        self.assertEqual(out.splitlines()[-1], 'max-matchings n=6: PASS')

    def test_verify_csv(self):
        out = run_command('verify', '--n', '3', '--theorem', 'min-indsets', '--workers', '1', '--format', 'csv')
        self.assertEqual(out.splitlines()[1], '3,0,1,1,1,1,,1,8,1,00*,True,')

    def test_scan(self):
        out = run_command('scan', '--n-max', '9', '--workers', '1')
        self.assertEqual(out.splitlines()[-1], 'conjecture n=1,2,3,4,5,6,7,8,9: PASS')

    def test_scan_remark(self):
        out = run_command('scan', '--n-max', '2', '--workers', '1', '--remark')
        self.assertIn('"printed_code_edges": 15', out)
        self.assertIn('"representative": "0101011*"', out)

    def test_scan_bounds(self):
        with self.assertRaises(CommandError) as ctx:
            run_command('scan', '--n-max', '3', '--n-min', '5')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_verify_store(self):
        run_command('verify', '--n', '5', '--theorem', 'min-indsets', '--workers', '1',
                    '--prefix-length', '2', '--store')
        run = VerificationRun.objects.get()
        self.assertEqual((run.status, run.prefixes.count()), ('passed', 4))

    def test_failed_check(self):
        failure = Failure(3, 1, 'max-value', 'planted')
        with patch.dict('thresholds.verify.CHECKS', {MAX_MATCHINGS: lambda report: [failure]}):
            with self.assertRaises(CommandError) as ctx:
                run_command('verify', '--n', '3', '--theorem', 'max-matchings', '--workers', '1')
        self.assertEqual(ctx.exception.returncode, 1)


class ExitStatusTests(TestCase):

    def run_cli(self, *argv):
        out, err = StringIO(), StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            status = cli.run(list(argv))
        return status, out.getvalue(), err.getvalue()

    def test_success(self):
        status, out, _ = self.run_cli('complement', '001001*')
        self.assertEqual((status, out.strip()), (0, '110110*'))

    def test_usage(self):
        self.assertEqual(self.run_cli()[0], 2)
        self.assertEqual(self.run_cli('frobnicate')[0], 2)
        self.assertEqual(self.run_cli('count')[0], 2)

    def test_domain_error(self):
        status, _, err = self.run_cli('count', '0*1')
        self.assertEqual(status, 2)
        self.assertIn('position 1', err)

    @override_settings(MAX_REWRITE_STEPS=0)
    def test_computation_failure(self):
        status, _, err = self.run_cli('reduce', '1001*', '--objective', 'indsets')
        self.assertEqual(status, 1)
        self.assertIn('exceeded 0 steps', err)

    def test_failed_check(self):
        failure = Failure(3, 1, 'max-value', 'planted')
        with patch.dict('thresholds.verify.CHECKS', {MAX_MATCHINGS: lambda report: [failure]}):
            status, out, _ = self.run_cli('verify', '--n', '3', '--theorem', 'max-matchings', '--workers', '1')
        self.assertEqual(status, 1)
        self.assertIn('counterexample n=3 e=1 [max-value] planted', out)
