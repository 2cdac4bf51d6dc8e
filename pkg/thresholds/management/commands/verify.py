from ...serializers import VerifyRequestSerializer
from ...verify import MAX_MATCHINGS, verify_max_matchings, verify_min_indsets
from ._common import RunCommand


class Command(RunCommand):
    help = 'Check every code on n vertices against the most-matchings or fewest-independent-sets theorem'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--theorem', choices=['max-matchings', 'min-indsets'], required=True)
        self.add_run_arguments(parser)

    def run(self, **options):
        request = self.validated(VerifyRequestSerializer, {
            'n': options['n'],
            'theorem': options['theorem'],
            **self.run_request(options),
        })
        store = self.open_store(options)
        checkpoint = store.checkpoint(request['theorem'], request.get('prefix_length'), request['resume']) if store else None
        check = verify_max_matchings if request['theorem'] == MAX_MATCHINGS else verify_min_indsets
        report = check(
            request['n'],
            workers=request['workers'],
            prefix_length=request.get('prefix_length'),
            checkpoint=checkpoint,
        )
        self.deliver(report, request, store)
