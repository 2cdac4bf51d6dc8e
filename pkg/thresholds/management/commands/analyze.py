from ...codes import (
    ab_forms,
    find_bracketed_string,
    find_separation_issue,
    is_alternating,
    is_colex,
)
from ...graph import edge_count
from ...moves import MOVE_KINDS, find_move_windows
from ...serializers import AnalysisSerializer, CodeRequestSerializer
from ._common import ThresholdCommand


def analyze(code) -> dict:
    forms = ab_forms(code)
    defects = [d for d in (find_bracketed_string(code), find_separation_issue(code)) if d is not None]
    return {
        'code': str(code),
        'n': code.n,
        'edges': edge_count(code),
        'almost_alternating': bool(forms),
        'alternating': is_alternating(code),
        'small': any(f.is_small for f in forms) if forms else None,
        'large': any(f.is_large for f in forms) if forms else None,
        'colex': is_colex(code),
        'forms': list(forms),
        'defects': defects,
        'move_windows': {kind: find_move_windows(code, kind) for kind in MOVE_KINDS},
    }


def _yes(flag) -> str:
    return '-' if flag is None else ('yes' if flag else 'no')


class Command(ThresholdCommand):
    help = 'Classify a code: ab-forms, structural defects and applicable moves'

    def add_arguments(self, parser):
        self.add_code_argument(parser)
        self.add_format_argument(parser)

    def run(self, **options):
        request = self.validated(CodeRequestSerializer, {'code': options['code'], 'ab': options['ab']})
        code = request['parsed']
        result = analyze(code)

        if options['output_format'] == 'json':
            self.write_json(AnalysisSerializer(result, context={'code': code}).data)
            return

        self.stdout.write(f"code                {result['code']}")
        self.stdout.write(f"vertices            {result['n']}")
        self.stdout.write(f"edges               {result['edges']}")
        self.stdout.write(f"almost alternating  {_yes(result['almost_alternating'])}")
        self.stdout.write(f"alternating         {_yes(result['alternating'])}")
        self.stdout.write(f"small               {_yes(result['small'])}")
        self.stdout.write(f"large               {_yes(result['large'])}")
        self.stdout.write(f"colex               {_yes(result['colex'])}")
        for form in result['forms']:
            starred = 'starred' if form.starred else 'unstarred'
            self.stdout.write(f"ab-form             {form} (alpha={form.alpha}, beta={form.beta}, {starred})")
        for defect in result['defects']:
            pieces = ' | '.join(defect.read(code))
            self.stdout.write(f"{defect.kind:<20}{defect.highlight(code)} ({pieces})")
        for kind, positions in result['move_windows'].items():
            if positions:
                self.stdout.write(f"{kind:<20}at {', '.join(str(p) for p in positions)}")
