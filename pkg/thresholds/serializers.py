"""
Serializers for command input and JSON output.

Counts are rendered as decimal strings so that values beyond 2^53 survive
any JSON reader.
"""
from math import comb

from rest_framework import serializers

from .codes import parse_ab, parse_code
from .exceptions import CodeParseError
from .graph import EXPORT_FORMATS
from .moves import INDSETS, MATCHINGS
from .verify import MAX_MATCHINGS, MIN_INDSETS

OUTPUT_FORMATS = ['text', 'json', 'csv']


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

class CountVectorSerializer(serializers.Serializer):
    """Serializer for matching and independence vectors."""

    counts = serializers.ListField(child=serializers.CharField())
    total = serializers.CharField()


class CountsSerializer(serializers.Serializer):
    code = serializers.CharField()
    n = serializers.IntegerField()
    edges = serializers.IntegerField()
    matchings = CountVectorSerializer()
    independent_sets = CountVectorSerializer()


class ABFormSerializer(serializers.Serializer):
    text = serializers.SerializerMethodField()
    block_digit = serializers.CharField(allow_null=True)
    block_len = serializers.IntegerField()
    word = serializers.CharField(allow_blank=True)
    starred = serializers.BooleanField()
    alpha = serializers.IntegerField()
    beta = serializers.IntegerField()
    small = serializers.BooleanField(source='is_small')
    large = serializers.BooleanField(source='is_large')

    def get_text(self, obj):
        return str(obj)


class StructuralDefectSerializer(serializers.Serializer):
    """Defect spans; needs the analysed code in the context to quote them."""

    kind = serializers.CharField()
    spans = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    pieces = serializers.SerializerMethodField()
    highlight = serializers.SerializerMethodField()

    def get_pieces(self, obj):
        return list(obj.read(self.context['code']))

    def get_highlight(self, obj):
        return obj.highlight(self.context['code'])


class AnalysisSerializer(serializers.Serializer):
    code = serializers.CharField()
    n = serializers.IntegerField()
    edges = serializers.IntegerField()
    almost_alternating = serializers.BooleanField()
    alternating = serializers.BooleanField()
    small = serializers.BooleanField(allow_null=True)
    large = serializers.BooleanField(allow_null=True)
    colex = serializers.BooleanField()
    forms = ABFormSerializer(many=True)
    defects = StructuralDefectSerializer(many=True)
    move_windows = serializers.DictField(child=serializers.ListField(child=serializers.IntegerField()))


class RewriteStepSerializer(serializers.Serializer):
    kind = serializers.CharField()
    position = serializers.IntegerField()
    before = serializers.CharField()
    after = serializers.CharField()
    star_used = serializers.BooleanField()
    total_before = serializers.CharField(allow_null=True)
    total_after = serializers.CharField(allow_null=True)

    def to_representation(self, instance):
        """Totals are named after the objective: m_total_* or i_total_*."""
        data = super().to_representation(instance)
        letter = 'i' if self.context.get('objective') == INDSETS else 'm'
        data[f'{letter}_total_before'] = data.pop('total_before')
        data[f'{letter}_total_after'] = data.pop('total_after')
        return data


class RewriteTraceSerializer(serializers.Serializer):
    objective = serializers.CharField()
    initial = serializers.CharField()
    final = serializers.CharField()
    steps = RewriteStepSerializer(many=True)


class ExtremeSerializer(serializers.Serializer):
    value = serializers.CharField(allow_null=True)
    count = serializers.IntegerField()
    witnesses = serializers.ListField(child=serializers.CharField())


class EdgeClassStatsSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    e = serializers.IntegerField()
    count = serializers.IntegerField()
    aa_count = serializers.IntegerField()
    max_m = ExtremeSerializer()
    aa_min_m = ExtremeSerializer()
    max_non_aa_m = ExtremeSerializer()
    min_i = ExtremeSerializer()
    aa_match_vectors = serializers.SerializerMethodField()
    max_m_k = ExtremeSerializer(many=True)
    max_non_aa_m_k = ExtremeSerializer(many=True)
    min_i_k = ExtremeSerializer(many=True)

    def get_aa_match_vectors(self, obj):
        return [[str(c) for c in vector] for vector in sorted(obj.aa_match_vectors)]


class RunMetaSerializer(serializers.Serializer):
    """Run circumstances; these differ between otherwise identical runs."""

    workers = serializers.IntegerField()
    elapsed = serializers.FloatField()


class EnumerationReportSerializer(serializers.Serializer):
    """
    Survey of one n. Everything outside ``meta`` depends only on n, the
    prefix length and the resumed prefixes.
    """

    n = serializers.IntegerField()
    code_count = serializers.IntegerField()
    prefix_length = serializers.IntegerField()
    resumed_prefixes = serializers.IntegerField()
    stats = serializers.SerializerMethodField()
    meta = RunMetaSerializer(source='*')

    def get_stats(self, obj):
        return EdgeClassStatsSerializer(list(obj.stats.values()), many=True).data


class EdgeClassRowSerializer(serializers.Serializer):
    """One (n, e) row, the same columns as the CSV report."""

    n = serializers.IntegerField()
    e = serializers.IntegerField()
    codes = serializers.IntegerField()
    almost_alternating = serializers.IntegerField()
    max_m = serializers.CharField()
    max_m_codes = serializers.IntegerField()
    max_non_aa_m = serializers.CharField(allow_null=True)
    aa_vectors = serializers.IntegerField()
    min_i = serializers.CharField()
    min_i_codes = serializers.IntegerField()
    extremal_code = serializers.CharField()
    passed = serializers.BooleanField()
    failures = serializers.CharField(allow_blank=True)


class FailureSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    e = serializers.IntegerField()
    k = serializers.IntegerField(allow_null=True)
    clause = serializers.CharField()
    detail = serializers.CharField()
    codes = serializers.ListField(child=serializers.CharField())


class VerificationReportSerializer(serializers.Serializer):
    mode = serializers.CharField()
    passed = serializers.BooleanField()
    truncated = serializers.BooleanField()
    n_values = serializers.ListField(child=serializers.IntegerField())
    rows = serializers.SerializerMethodField()
    failures = FailureSerializer(many=True)
    surveys = EnumerationReportSerializer(many=True)

    def get_rows(self, obj):
        return EdgeClassRowSerializer(obj.rows(), many=True).data


class RemarkWitnessSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    e = serializers.IntegerField()
    k = serializers.IntegerField()
    code = serializers.CharField()
    code_is_almost_alternating = serializers.BooleanField()
    code_m_k = serializers.CharField()
    representative = serializers.CharField()
    representative_m_k = serializers.CharField()
    strictness_applies = serializers.BooleanField()
    printed_code = serializers.CharField()
    printed_code_edges = serializers.IntegerField()


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------

class CodeRequestSerializer(serializers.Serializer):
    """Serializer for a code argument, plain or block+word (``ab``)."""

    code = serializers.CharField(max_length=4096, trim_whitespace=True)
    ab = serializers.BooleanField(default=False)

    def validate(self, attrs):
        parser = parse_ab if attrs['ab'] else parse_code
        try:
            attrs['parsed'] = parser(attrs['code'])
        except CodeParseError as e:
            raise serializers.ValidationError({'code': f"position {e.position}: {e.reason}"})
        return attrs


class ReduceRequestSerializer(CodeRequestSerializer):
    objective = serializers.ChoiceField(choices=[MATCHINGS, INDSETS])


class ExportRequestSerializer(CodeRequestSerializer):
    format = serializers.ChoiceField(choices=list(EXPORT_FORMATS))


class ExtremalRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    e = serializers.IntegerField(min_value=0)
    kind = serializers.ChoiceField(choices=[MATCHINGS, INDSETS])

    def validate(self, attrs):
        limit = comb(attrs['n'], 2)
        if attrs['e'] > limit:
            raise serializers.ValidationError({'e': f"at most {limit} edges on {attrs['n']} vertices"})
        return attrs


class RunRequestSerializer(serializers.Serializer):
    """Options shared by the exhaustive commands."""

    workers = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    prefix_length = serializers.IntegerField(min_value=0, max_value=20, required=False, allow_null=True)
    format = serializers.ChoiceField(choices=OUTPUT_FORMATS, default='text')
    output = serializers.CharField(required=False, allow_null=True, allow_blank=True)
    resume = serializers.BooleanField(default=False)


class VerifyRequestSerializer(RunRequestSerializer):
    n = serializers.IntegerField(min_value=1, max_value=32)
    theorem = serializers.ChoiceField(choices=[MAX_MATCHINGS, MIN_INDSETS])


class ScanRequestSerializer(RunRequestSerializer):
    n_max = serializers.IntegerField(min_value=1, max_value=32)
    n_min = serializers.IntegerField(min_value=1, default=1)
    budget = serializers.FloatField(min_value=0, required=False, allow_null=True)

    def validate(self, attrs):
        if attrs['n_min'] > attrs['n_max']:
            raise serializers.ValidationError({'n_min': "must not exceed n_max"})
        return attrs
