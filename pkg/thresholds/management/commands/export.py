from pathlib import Path

from ...graph import build_graph, export
from ...serializers import ExportRequestSerializer
from ._common import ThresholdCommand


class Command(ThresholdCommand):
    help = 'Export the graph of a code as an edge list or in dot format'

    def add_arguments(self, parser):
        self.add_code_argument(parser)
        parser.add_argument('--format', dest='graph_format', choices=['edge-list', 'dot'], default='edge-list')
        parser.add_argument('--output', default=None, help="Write to this file instead of stdout")

    def run(self, **options):
        request = self.validated(ExportRequestSerializer, {
            'code': options['code'],
            'ab': options['ab'],
            'format': options['graph_format'],
        })
        text = export(build_graph(request['parsed']), request['format'])
        if options['output']:
            Path(options['output']).write_text(text)
            self.stderr.write(f"Graph written to {options['output']}")
        else:
            self.stdout.write(text, ending='')
