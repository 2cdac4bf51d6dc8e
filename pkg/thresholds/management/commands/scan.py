from ...serializers import RemarkWitnessSerializer, ScanRequestSerializer
from ...verify import CONJECTURE, conjecture_scan, remark_witness
from ._common import RunCommand


class Command(RunCommand):
    help = 'Check matchings of every size for all codes up to n-max vertices'

    def add_arguments(self, parser):
        parser.add_argument('--n-max', type=int, required=True)
        parser.add_argument('--n-min', type=int, default=1)
        parser.add_argument('--budget', type=float, default=None, help="Stop starting new sizes after this many seconds")
        parser.add_argument('--remark', action='store_true',
                            help="Also print the n=8, e=13 instance where strictness must not apply")
        self.add_run_arguments(parser)

    def run(self, **options):
        request = self.validated(ScanRequestSerializer, {
            'n_max': options['n_max'],
            'n_min': options['n_min'],
            'budget': options['budget'],
            **self.run_request(options),
        })
        if options['remark']:
            self.write_json(RemarkWitnessSerializer(remark_witness()).data)

        store = self.open_store(options)
        checkpoint = store.checkpoint(CONJECTURE, request.get('prefix_length'), request['resume']) if store else None
        report = conjecture_scan(
            request['n_max'],
            budget=request.get('budget'),
            workers=request['workers'],
            prefix_length=request.get('prefix_length'),
            checkpoint=checkpoint,
            n_min=request['n_min'],
        )
        self.deliver(report, request, store)
