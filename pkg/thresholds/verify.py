"""
Exhaustive enumeration of codes on n vertices and the checks run on it.

One pass over all 2^(n-1) codes collects per-edge-count statistics
(EdgeClassStats). The pass is split by code prefix so prefixes can run in
worker processes and be stored one by one; merging is associative and
commutative, so the result does not depend on the order prefixes finish in.
"""
import logging
import time
from bisect import insort
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from django.conf import settings

from .codes import ThresholdCode, is_almost_alternating, parse_code
from .counting import add_digit, add_isolated, empty_state, ind_vector, match_vector
from .exceptions import ComputationError, ThresholdError
from .extremal import almost_alternating_code, colex_code
from .graph import edge_count

logger = logging.getLogger(__name__)

MAX_MATCHINGS = 'max-matchings'
MIN_INDSETS = 'min-indsets'
CONJECTURE = 'conjecture'
MODES = (MAX_MATCHINGS, MIN_INDSETS, CONJECTURE)

# prefix -> (stats by edge count, number of codes under the prefix)
PrefixStats = Tuple[Dict[int, 'EdgeClassStats'], int]
OnPrefix = Callable[[str, Dict[int, 'EdgeClassStats'], int], None]
Checkpoint = Callable[[int], Tuple[Dict[str, PrefixStats], Optional[OnPrefix]]]


def enumerate_codes(n: int) -> Iterator[ThresholdCode]:
    """All 2^(n-1) normalized codes on n vertices in lexicographic order."""
    if n < 1:
        raise ThresholdError(f"Codes need at least one vertex, got n={n}")
    for bits in product('01', repeat=n - 1):
        yield ThresholdCode(''.join(bits))


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

@dataclass
class Extreme:
    """Running maximum (or minimum) with the number of codes attaining it
    and the smallest few of them."""

    maximize: bool
    value: Optional[int] = None
    count: int = 0
    witnesses: List[str] = field(default_factory=list)

    def _beats(self, value: int) -> bool:
        if self.value is None:
            return True
        return value > self.value if self.maximize else value < self.value

    def observe(self, value: int, code: str, keep: int) -> None:
        if self._beats(value):
            self.value, self.count, self.witnesses = value, 1, [code]
        elif value == self.value:
            self.count += 1
            insort(self.witnesses, code)
            del self.witnesses[keep:]

    def merge(self, other: 'Extreme', keep: int) -> None:
        if other.value is None:
            return
        if self._beats(other.value):
            self.value, self.count, self.witnesses = other.value, other.count, list(other.witnesses[:keep])
        elif other.value == self.value:
            self.count += other.count
            self.witnesses = sorted(set(self.witnesses) | set(other.witnesses))[:keep]

    def to_dict(self) -> dict:
        return {
            'maximize': self.maximize,
            'value': self.value,
            'count': self.count,
            'witnesses': list(self.witnesses),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Extreme':
        return cls(data['maximize'], data['value'], data['count'], list(data['witnesses']))


def _highest() -> Extreme:
    return Extreme(maximize=True)


def _lowest() -> Extreme:
    return Extreme(maximize=False)


@dataclass
class EdgeClassStats:
    """Everything the checks need to know about the codes with n vertices and e edges."""

    n: int
    e: int
    count: int = 0
    aa_count: int = 0
    max_m: Extreme = field(default_factory=_highest)
    aa_min_m: Extreme = field(default_factory=_lowest)
    max_non_aa_m: Extreme = field(default_factory=_highest)
    min_i: Extreme = field(default_factory=_lowest)
    aa_match_vectors: Set[Tuple[int, ...]] = field(default_factory=set)
    max_m_k: List[Extreme] = field(default_factory=list)
    max_non_aa_m_k: List[Extreme] = field(default_factory=list)
    min_i_k: List[Extreme] = field(default_factory=list)

    @classmethod
    def empty(cls, n: int, e: int) -> 'EdgeClassStats':
        return cls(
            n=n,
            e=e,
            max_m_k=[_highest() for _ in range(n // 2 + 1)],
            max_non_aa_m_k=[_highest() for _ in range(n // 2 + 1)],
            min_i_k=[_lowest() for _ in range(n + 1)],
        )

    def observe(self, code: str, matchings: List[int], indsets: List[int], almost_alternating: bool, keep: int) -> None:
        m_total = sum(matchings)
        self.count += 1
        self.max_m.observe(m_total, code, keep)
        self.min_i.observe(sum(indsets), code, keep)
        for k, value in enumerate(matchings):
            self.max_m_k[k].observe(value, code, 1)
        for k, value in enumerate(indsets):
            self.min_i_k[k].observe(value, code, 1)

        if almost_alternating:
            self.aa_count += 1
            self.aa_min_m.observe(m_total, code, keep)
            self.aa_match_vectors.add(tuple(matchings))
        else:
            self.max_non_aa_m.observe(m_total, code, keep)
            for k, value in enumerate(matchings):
                self.max_non_aa_m_k[k].observe(value, code, 1)

    def merge(self, other: 'EdgeClassStats', keep: int) -> None:
        if (other.n, other.e) != (self.n, self.e):
            raise ComputationError(f"Cannot merge stats for (n={other.n}, e={other.e}) into (n={self.n}, e={self.e})")
        self.count += other.count
        self.aa_count += other.aa_count
        self.max_m.merge(other.max_m, keep)
        self.aa_min_m.merge(other.aa_min_m, keep)
        self.max_non_aa_m.merge(other.max_non_aa_m, keep)
        self.min_i.merge(other.min_i, keep)
        self.aa_match_vectors |= other.aa_match_vectors
        for mine, theirs in zip(self.max_m_k, other.max_m_k):
            mine.merge(theirs, 1)
        for mine, theirs in zip(self.max_non_aa_m_k, other.max_non_aa_m_k):
            mine.merge(theirs, 1)
        for mine, theirs in zip(self.min_i_k, other.min_i_k):
            mine.merge(theirs, 1)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'e': self.e,
            'count': self.count,
            'aa_count': self.aa_count,
            'max_m': self.max_m.to_dict(),
            'aa_min_m': self.aa_min_m.to_dict(),
            'max_non_aa_m': self.max_non_aa_m.to_dict(),
            'min_i': self.min_i.to_dict(),
            'aa_match_vectors': sorted(list(v) for v in self.aa_match_vectors),
            'max_m_k': [x.to_dict() for x in self.max_m_k],
            'max_non_aa_m_k': [x.to_dict() for x in self.max_non_aa_m_k],
            'min_i_k': [x.to_dict() for x in self.min_i_k],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'EdgeClassStats':
        return cls(
            n=data['n'],
            e=data['e'],
            count=data['count'],
            aa_count=data['aa_count'],
            max_m=Extreme.from_dict(data['max_m']),
            aa_min_m=Extreme.from_dict(data['aa_min_m']),
            max_non_aa_m=Extreme.from_dict(data['max_non_aa_m']),
            min_i=Extreme.from_dict(data['min_i']),
            aa_match_vectors={tuple(v) for v in data['aa_match_vectors']},
            max_m_k=[Extreme.from_dict(x) for x in data['max_m_k']],
            max_non_aa_m_k=[Extreme.from_dict(x) for x in data['max_non_aa_m_k']],
            min_i_k=[Extreme.from_dict(x) for x in data['min_i_k']],
        )


@dataclass
class EnumerationReport:
    n: int
    stats: Dict[int, EdgeClassStats]
    code_count: int
    prefix_length: int
    workers: int
    resumed_prefixes: int = 0
    elapsed: float = 0.0


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _extend(n: int, prefix: str, suffix: str, matchings: List[int], indsets: List[int], edges: int,
            stats: Dict[int, EdgeClassStats], keep: int) -> int:
    """
    Depth-first over the free digits right of ``prefix``; codes sharing a
    suffix share its counting work. Returns the number of codes visited.
    """
    free = n - 1 - len(prefix)
    if len(suffix) == free:
        matchings, indsets = matchings[:], indsets[:]
        for p in range(len(prefix) - 1, -1, -1):
            t = n - 1 - p
            add_digit(matchings, indsets, prefix[p], t)
            if prefix[p] == '1':
                edges += t
        code = ThresholdCode(prefix + suffix)
        record = stats.get(edges)
        if record is None:
            record = stats[edges] = EdgeClassStats.empty(n, edges)
        record.observe(str(code), matchings, indsets, is_almost_alternating(code), keep)
        return 1

    # next position to the left of the suffix has len(suffix) + 1 vertices to its right
    t = len(suffix) + 1
    visited = 0
    for digit in '01':
        m, i = matchings[:], indsets[:]
        add_digit(m, i, digit, t)
        visited += _extend(n, prefix, digit + suffix, m, i, edges + (t if digit == '1' else 0), stats, keep)
    return visited


def survey_prefix(n: int, prefix: str, keep: int) -> Tuple[str, Dict[int, EdgeClassStats], int]:
    """Statistics for every code on n vertices starting with ``prefix``."""
    matchings, indsets = empty_state(n)
    add_isolated(matchings, indsets)
    stats: Dict[int, EdgeClassStats] = {}
    visited = _extend(n, prefix, '', matchings, indsets, 0, stats, keep)
    return prefix, stats, visited


def survey(n: int, workers: Optional[int] = None, prefix_length: Optional[int] = None,
           done: Optional[Dict[str, PrefixStats]] = None, on_prefix: Optional[OnPrefix] = None) -> EnumerationReport:
    """
    Enumerate every code on n vertices, prefix by prefix.

    ``done`` holds prefixes finished by an earlier run; they are merged
    without being recomputed. ``on_prefix`` is called as each new prefix
    finishes.
    """
    if n < 1:
        raise ThresholdError(f"Codes need at least one vertex, got n={n}")
    workers = workers or getattr(settings, 'VERIFY_WORKERS', 1)
    if prefix_length is None:
        prefix_length = getattr(settings, 'VERIFY_PREFIX_LENGTH', 4)
    keep = getattr(settings, 'VERIFY_MAX_WITNESSES', 8)
    prefix_length = max(0, min(prefix_length, n - 1))
    done = done or {}

    started = time.monotonic()
    prefixes = [''.join(bits) for bits in product('01', repeat=prefix_length)]
    merged: Dict[int, EdgeClassStats] = {}
    code_count = 0

    def collect(prefix: str, stats: Dict[int, EdgeClassStats], visited: int, fresh: bool) -> None:
        nonlocal code_count
        code_count += visited
        for e, record in stats.items():
            if e in merged:
                merged[e].merge(record, keep)
            else:
                merged[e] = EdgeClassStats.from_dict(record.to_dict())
        if fresh and on_prefix is not None:
            on_prefix(prefix, stats, visited)

    resumed = [p for p in prefixes if p in done]
    for prefix in resumed:
        stats, visited = done[prefix]
        collect(prefix, stats, visited, fresh=False)

    pending = [p for p in prefixes if p not in done]
    if workers <= 1 or len(pending) <= 1:
        for prefix in pending:
            collect(*survey_prefix(n, prefix, keep), fresh=True)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(survey_prefix, n, prefix, keep) for prefix in pending]
            for future in as_completed(futures):
                collect(*future.result(), fresh=True)

    if code_count != 2 ** (n - 1):
        raise ComputationError(f"Enumerated {code_count} codes on {n} vertices, expected {2 ** (n - 1)}")

    elapsed = time.monotonic() - started
    logger.info(
        f"Surveyed {code_count} codes on {n} vertices: {len(pending)} prefixes computed, "
        f"{len(resumed)} resumed, {workers} worker(s), {elapsed:.2f}s"
    )
    return EnumerationReport(
        n=n,
        stats=dict(sorted(merged.items())),
        code_count=code_count,
        prefix_length=prefix_length,
        workers=workers,
        resumed_prefixes=len(resumed),
        elapsed=elapsed,
    )


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    n: int
    e: int
    clause: str
    detail: str
    codes: Tuple[str, ...] = ()
    k: Optional[int] = None


@dataclass
class VerificationReport:
    mode: str
    surveys: List[EnumerationReport] = field(default_factory=list)
    failures: List[Failure] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def n_values(self) -> List[int]:
        return [s.n for s in self.surveys]

    def rows(self) -> List[dict]:
        """One row per (n, e)."""
        failed = {}
        for failure in self.failures:
            failed.setdefault((failure.n, failure.e), []).append(failure.clause)
        rows = []
        for report in self.surveys:
            for e, stats in report.stats.items():
                extremal = colex_code(report.n, e) if self.mode == MIN_INDSETS else almost_alternating_code(report.n, e)
                clauses = failed.get((report.n, e), [])
                rows.append({
                    'n': report.n,
                    'e': e,
                    'codes': stats.count,
                    'almost_alternating': stats.aa_count,
                    'max_m': stats.max_m.value,
                    'max_m_codes': stats.max_m.count,
                    'max_non_aa_m': stats.max_non_aa_m.value,
                    'aa_vectors': len(stats.aa_match_vectors),
                    'min_i': stats.min_i.value,
                    'min_i_codes': stats.min_i.count,
                    'extremal_code': str(extremal),
                    'passed': not clauses,
                    'failures': ' '.join(clauses),
                })
        return rows


def _fail(failures: List[Failure], failure: Failure, announced: Optional[Set[tuple]] = None) -> None:
    """Record a failure; with ``announced``, each (n, e, k, clause) is logged once."""
    failures.append(failure)
    if announced is not None:
        key = (failure.n, failure.e, failure.k, failure.clause)
        if key in announced:
            return
        announced.add(key)
    logger.warning(
        f"Counterexample n={failure.n} e={failure.e}"
        f"{f' k={failure.k}' if failure.k is not None else ''} [{failure.clause}]: {failure.detail}"
        f"{' ' + ', '.join(failure.codes) if failure.codes else ''}"
    )


def check_max_matchings(report: EnumerationReport) -> List[Failure]:
    """Almost alternating codes, and only they, attain the most matchings,
    all with the same matching vector."""
    failures: List[Failure] = []
    n = report.n
    for e, stats in report.stats.items():
        expected = match_vector(almost_alternating_code(n, e))
        best = stats.max_m.value
        if stats.aa_count == 0:
            _fail(failures, Failure(n, e, 'no-almost-alternating', "no almost alternating code"))
            continue
        if best != expected.total:
            _fail(failures, Failure(n, e, 'max-value', f"max m {best} differs from the constructed code's {expected.total}",
                                    tuple(stats.max_m.witnesses)))
        if stats.aa_min_m.value != best:
            _fail(failures, Failure(n, e, 'almost-alternating-below-max',
                                    f"almost alternating code with m={stats.aa_min_m.value} < {best}",
                                    tuple(stats.aa_min_m.witnesses)))
        if stats.max_non_aa_m.value is not None and stats.max_non_aa_m.value >= best:
            _fail(failures, Failure(n, e, 'not-strict', f"non almost alternating code with m={stats.max_non_aa_m.value}",
                                    tuple(stats.max_non_aa_m.witnesses)))
        if stats.aa_match_vectors != {expected.counts}:
            _fail(failures, Failure(n, e, 'vectors-differ',
                                    f"{len(stats.aa_match_vectors)} distinct matching vectors among almost alternating codes"))
    return failures


def check_min_indsets(report: EnumerationReport) -> List[Failure]:
    """The colex code alone has the fewest independent sets and the fewest of each size."""
    failures: List[Failure] = []
    n = report.n
    for e, stats in report.stats.items():
        colex = str(colex_code(n, e))
        expected = ind_vector(parse_code(colex))
        if stats.min_i.value != expected.total or stats.min_i.count != 1 or stats.min_i.witnesses != [colex]:
            _fail(failures, Failure(n, e, 'colex-not-unique-minimum',
                                    f"min i {stats.min_i.value} attained by {stats.min_i.count} code(s); colex has {expected.total}",
                                    tuple(stats.min_i.witnesses)))
        for k, record in enumerate(stats.min_i_k):
            if record.value < expected[k]:
                _fail(failures, Failure(n, e, 'colex-not-minimal', f"i_{k}={record.value} < colex's {expected[k]}",
                                        tuple(record.witnesses), k))
    return failures


class ConjectureTargets(dict):
    """Matching vector of the almost alternating code, by edge count, built on first use."""

    def __init__(self, n: int):
        super().__init__()
        self.n = n

    def __missing__(self, e: int):
        target = self[e] = match_vector(almost_alternating_code(self.n, e))
        return target


def _compare_conjecture(n: int, edge_classes: Dict[int, EdgeClassStats], targets: ConjectureTargets,
                        failures: List[Failure], announced: Optional[Set[tuple]]) -> None:
    for e, stats in edge_classes.items():
        target = targets[e]
        for k in range(1, n // 2 + 1):
            best = stats.max_m_k[k]
            if best.value > target[k]:
                _fail(failures, Failure(n, e, 'weak', f"m_{k}={best.value} > {target[k]}", tuple(best.witnesses), k), announced)
            rival = stats.max_non_aa_m_k[k]
            if k >= 2 and target[k] > 0 and rival.value is not None and rival.value >= target[k]:
                _fail(failures, Failure(n, e, 'strict', f"m_{k}={rival.value} >= {target[k]}", tuple(rival.witnesses), k), announced)


def check_conjecture(report: EnumerationReport, announced: Optional[Set[tuple]] = None) -> List[Failure]:
    """
    Size by size, no code has more k-matchings than the almost alternating
    one; for k >= 2 with a nonzero count, codes that are not almost
    alternating have strictly fewer.

    Counterexamples already in ``announced`` are returned without being
    logged again.
    """
    failures: List[Failure] = []
    _compare_conjecture(report.n, report.stats, ConjectureTargets(report.n), failures, announced)
    return failures


class ConjectureWatch:
    """
    Checks the statistics of each prefix as it finishes, so counterexamples
    are logged while the survey of n is still running.
    """

    def __init__(self, n: int):
        self.n = n
        self.targets = ConjectureTargets(n)
        self.announced: Set[tuple] = set()
        self.failures: List[Failure] = []

    def __call__(self, prefix: str, stats: Dict[int, EdgeClassStats], code_count: int) -> None:
        found = len(self.failures)
        _compare_conjecture(self.n, stats, self.targets, self.failures, self.announced)
        if len(self.failures) > found:
            logger.info(f"Prefix {prefix or '(empty)'} of n={self.n}: {len(self.failures) - found} counterexample(s)")


CHECKS = {
    MAX_MATCHINGS: check_max_matchings,
    MIN_INDSETS: check_min_indsets,
    CONJECTURE: check_conjecture,
}


def _run(mode: str, n: int, workers: Optional[int], prefix_length: Optional[int],
         checkpoint: Optional[Checkpoint], report: VerificationReport) -> None:
    done, stored = checkpoint(n) if checkpoint else ({}, None)
    watch = ConjectureWatch(n) if mode == CONJECTURE else None

    def on_prefix(prefix: str, stats: Dict[int, EdgeClassStats], code_count: int) -> None:
        if watch is not None:
            watch(prefix, stats, code_count)
        if stored is not None:
            stored(prefix, stats, code_count)

    enumeration = survey(n, workers=workers, prefix_length=prefix_length, done=done, on_prefix=on_prefix)
    report.surveys.append(enumeration)
    if watch is not None:
        report.failures.extend(CHECKS[mode](enumeration, watch.announced))
    else:
        report.failures.extend(CHECKS[mode](enumeration))


def verify_max_matchings(n: int, workers: Optional[int] = None, prefix_length: Optional[int] = None,
                         checkpoint: Optional[Checkpoint] = None) -> VerificationReport:
    report = VerificationReport(MAX_MATCHINGS)
    _run(MAX_MATCHINGS, n, workers, prefix_length, checkpoint, report)
    logger.info(f"{MAX_MATCHINGS} n={n}: {'pass' if report.passed else f'{len(report.failures)} failure(s)'}")
    return report


def verify_min_indsets(n: int, workers: Optional[int] = None, prefix_length: Optional[int] = None,
                       checkpoint: Optional[Checkpoint] = None) -> VerificationReport:
    report = VerificationReport(MIN_INDSETS)
    _run(MIN_INDSETS, n, workers, prefix_length, checkpoint, report)
    logger.info(f"{MIN_INDSETS} n={n}: {'pass' if report.passed else f'{len(report.failures)} failure(s)'}")
    return report


def conjecture_scan(n_max: int, budget: Optional[float] = None, workers: Optional[int] = None,
                    prefix_length: Optional[int] = None, checkpoint: Optional[Checkpoint] = None,
                    n_min: int = 1) -> VerificationReport:
    """
    Check every n from n_min to n_max. Counterexamples are logged as soon as
    the prefix holding them finishes. ``budget`` is a time limit in seconds;
    once spent, no further n is started and the report is marked truncated.
    """
    report = VerificationReport(CONJECTURE)
    started = time.monotonic()
    for n in range(n_min, n_max + 1):
        if budget is not None and time.monotonic() - started > budget:
            report.truncated = True
            logger.warning(f"Conjecture scan stopped before n={n}: budget of {budget}s spent")
            break
        _run(CONJECTURE, n, workers, prefix_length, checkpoint, report)
    logger.info(f"Conjecture scan n<={n_max}: {len(report.failures)} counterexample(s)")
    return report


# ---------------------------------------------------------------------------
# The n = 8, e = 13 non-strictness instance
# ---------------------------------------------------------------------------

PRINTED_REMARK_CODE = '1010100*'


@dataclass(frozen=True)
class RemarkWitness:
    n: int
    e: int
    k: int
    code: ThresholdCode
    code_is_almost_alternating: bool
    code_m_k: int
    representative: ThresholdCode
    representative_m_k: int
    printed_code: str
    printed_code_edges: int

    @property
    def strictness_applies(self) -> bool:
        return self.representative_m_k > 0


def remark_witness() -> RemarkWitness:
    """
    1000111* is not almost alternating and ties the almost alternating codes
    at m_4 = 0, which is why strictness needs m_k(A) > 0. The code printed
    for this case, 1010100*, has 15 edges rather than 13; the almost
    alternating code actually used is constructed for (8, 13).
    """
    n, e, k = 8, 13, 4
    code = parse_code('1000111*')
    representative = almost_alternating_code(n, e)
    return RemarkWitness(
        n=n,
        e=e,
        k=k,
        code=code,
        code_is_almost_alternating=is_almost_alternating(code),
        code_m_k=match_vector(code)[k],
        representative=representative,
        representative_m_k=match_vector(representative)[k],
        printed_code=PRINTED_REMARK_CODE,
        printed_code_edges=edge_count(parse_code(PRINTED_REMARK_CODE)),
    )
