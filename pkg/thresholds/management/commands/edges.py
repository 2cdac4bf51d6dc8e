from ...graph import edge_count
from ...serializers import CodeRequestSerializer
from ._common import ThresholdCommand


class Command(ThresholdCommand):
    help = 'Number of edges of the graph of a code'

    def add_arguments(self, parser):
        self.add_code_argument(parser)
        self.add_format_argument(parser)

    def run(self, **options):
        code = self.validated(CodeRequestSerializer, {'code': options['code'], 'ab': options['ab']})['parsed']
        edges = edge_count(code)
        if options['output_format'] == 'json':
            self.write_json({'code': str(code), 'n': code.n, 'edges': edges})
        else:
            self.stdout.write(str(edges))
