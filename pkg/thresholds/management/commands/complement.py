from ...codes import complement_code
from ...serializers import CodeRequestSerializer
from ._common import ThresholdCommand


class Command(ThresholdCommand):
    help = 'Code of the complement graph'

    def add_arguments(self, parser):
        self.add_code_argument(parser)

    def run(self, **options):
        code = self.validated(CodeRequestSerializer, {'code': options['code'], 'ab': options['ab']})['parsed']
        self.stdout.write(str(complement_code(code)))
