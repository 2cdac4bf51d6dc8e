from ...moves import MATCHINGS, maximize_matchings_by_moves, minimize_indsets_by_moves
from ...serializers import ReduceRequestSerializer, RewriteTraceSerializer
from ._common import ThresholdCommand


class Command(ThresholdCommand):
    help = 'Rewrite a code by local moves towards the most matchings or the fewest independent sets'

    def add_arguments(self, parser):
        self.add_code_argument(parser)
        parser.add_argument('--objective', choices=['matchings', 'indsets'], required=True)
        self.add_format_argument(parser)

    def run(self, **options):
        request = self.validated(ReduceRequestSerializer, {
            'code': options['code'],
            'ab': options['ab'],
            'objective': options['objective'],
        })
        reduce = maximize_matchings_by_moves if request['objective'] == MATCHINGS else minimize_indsets_by_moves
        trace = reduce(request['parsed'])

        if options['output_format'] == 'json':
            self.write_json(RewriteTraceSerializer(trace, context={'objective': trace.objective}).data)
            return

        total = 'm' if trace.objective == MATCHINGS else 'i'
        for step in trace.steps:
            star = ' (uses *)' if step.star_used else ''
            self.stdout.write(
                f"{step.kind:<28}at {step.position:<3}{step.before} -> {step.after}  "
                f"{total}: {step.total_before} -> {step.total_after}{star}"
            )
        self.stdout.write(f"final {trace.final} after {len(trace)} step(s)")
