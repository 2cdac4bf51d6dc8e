from ...counting import count_vectors
from ...graph import edge_count
from ...serializers import CodeRequestSerializer, CountsSerializer
from ._common import ThresholdCommand


class Command(ThresholdCommand):
    help = 'Matching and independent-set counts of a code'

    def add_arguments(self, parser):
        self.add_code_argument(parser)
        self.add_format_argument(parser)

    def run(self, **options):
        code = self.validated(CodeRequestSerializer, {'code': options['code'], 'ab': options['ab']})['parsed']
        matchings, indsets = count_vectors(code)

        if options['output_format'] == 'json':
            self.write_json(CountsSerializer({
                'code': code,
                'n': code.n,
                'edges': edge_count(code),
                'matchings': matchings,
                'independent_sets': indsets,
            }).data)
            return

        self.stdout.write(f"matchings         {matchings}")
        self.stdout.write(f"independent sets  {indsets}")
