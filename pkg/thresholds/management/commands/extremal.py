from ...extremal import almost_alternating_code, colex_code
from ...moves import MATCHINGS
from ...serializers import ExtremalRequestSerializer
from ._common import ThresholdCommand


class Command(ThresholdCommand):
    help = 'Extremal code for n vertices and e edges: most matchings or fewest independent sets'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--e', type=int, required=True)
        parser.add_argument('--kind', choices=['matchings', 'indsets'], required=True)

    def run(self, **options):
        request = self.validated(ExtremalRequestSerializer, {
            'n': options['n'],
            'e': options['e'],
            'kind': options['kind'],
        })
        build = almost_alternating_code if request['kind'] == MATCHINGS else colex_code
        self.stdout.write(str(build(request['n'], request['e'])))
