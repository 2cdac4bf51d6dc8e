"""
Local rewrites of creation codes and the reductions built from them.

Every move keeps the vertex and edge counts. Positions name the leftmost
symbol of the rewritten window; the ``*`` may supply the window's last digit,
in which case the rewritten last digit is dropped by normalization.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from django.conf import settings

from .codes import (
    BRACKETED_ONE,
    STAR,
    ThresholdCode,
    find_bracketed_string,
    find_separation_issue,
    is_almost_alternating,
    is_colex,
)
from .counting import ind_vector, match_vector
from .exceptions import (
    ComputationError,
    InvariantViolation,
    PatternMismatch,
    ReductionDidNotConverge,
    ThresholdError,
)
from .graph import edge_count

logger = logging.getLogger(__name__)

AB_SWITCH = 'ab-switch'
BRACKETED_ONE_MOVE = 'bracketed-1-move'
BRACKETED_ZERO_MOVE = 'bracketed-0-move'
INDSET_CONSECUTIVE_MOVE = 'indset-0-move'
INDSET_NONCONSECUTIVE_MOVE = 'indset-nonconsecutive-move'

MATCHINGS = 'matchings'
INDSETS = 'indsets'


@dataclass(frozen=True)
class RewriteStep:
    kind: str
    position: int
    before: ThresholdCode
    after: ThresholdCode
    star_used: bool = False
    total_before: Optional[int] = None
    total_after: Optional[int] = None


@dataclass
class RewriteTrace:
    objective: str
    initial: ThresholdCode
    steps: List[RewriteStep] = field(default_factory=list)

    @property
    def final(self) -> ThresholdCode:
        return self.steps[-1].after if self.steps else self.initial

    def __len__(self) -> int:
        return len(self.steps)


# ---------------------------------------------------------------------------
# Window matching
# ---------------------------------------------------------------------------

def _run_after(text: str, start: int, digit: str) -> int:
    """Length of the run of stored ``digit`` symbols starting at ``start``."""
    j = 0
    while start + j < len(text) and text[start + j] == digit:
        j += 1
    return j


def _check_start(kind: str, code: ThresholdCode, at: int, digit: str) -> str:
    text = str(code)
    if not 0 <= at < len(code.bits):
        raise PatternMismatch(kind, at, f"position outside the stored digits of {code}")
    if text[at] != digit:
        raise PatternMismatch(kind, at, f"expected {digit!r}, found {text[at]!r}")
    return text


def _ab_switch_window(code: ThresholdCode, at: int) -> str:
    if at < 0 or at + 4 > code.n:
        raise PatternMismatch(AB_SWITCH, at, f"no 4-symbol window in {code}")
    window = str(code)[at:at + 4]
    for pattern, replacement in (('0110', '1001'), ('1001', '0110')):
        if window == pattern or (window[3] == STAR and window[:3] == pattern[:3]):
            return replacement
    raise PatternMismatch(AB_SWITCH, at, f"window reads {window!r}")


def _bracket_window(kind: str, code: ThresholdCode, at: int, bracket: str, min_run: int) -> str:
    """
    Rewrite for ``bracket inner^j bracket`` with j maximal and j >= min_run;
    the closing bracket may be the ``*``.
    """
    text = _check_start(kind, code, at, bracket)
    inner = '1' if bracket == '0' else '0'
    j = _run_after(text, at + 1, inner)
    if j < min_run:
        raise PatternMismatch(kind, at, f"run of {j} {inner}'s, need at least {min_run}")
    return inner + bracket + inner * (j - 2) + bracket + inner


def _nonconsecutive_window(code: ThresholdCode, at: int) -> str:
    kind = INDSET_NONCONSECUTIVE_MOVE
    text = _check_start(kind, code, at, '1')
    if text[at + 1:at + 2] != '0':
        raise PatternMismatch(kind, at, "expected '10' at the window start")
    j = _run_after(text, at + 2, '1')
    if j < 1:
        raise PatternMismatch(kind, at, "no 1 between the two 0's")
    tail = text[at + 2 + j:at + 4 + j]
    if len(tail) < 2 or tail[0] != '0' or tail[1] not in ('1', STAR):
        raise PatternMismatch(kind, at, f"expected '01' after 1^{j}, found {tail!r}")
    return '0' + '1' * (j + 2) + '0'


_WINDOWS: Dict[str, Callable[[ThresholdCode, int], str]] = {
    AB_SWITCH: _ab_switch_window,
    BRACKETED_ONE_MOVE: lambda code, at: _bracket_window(BRACKETED_ONE_MOVE, code, at, '0', 3),
    BRACKETED_ZERO_MOVE: lambda code, at: _bracket_window(BRACKETED_ZERO_MOVE, code, at, '1', 3),
    INDSET_CONSECUTIVE_MOVE: lambda code, at: _bracket_window(INDSET_CONSECUTIVE_MOVE, code, at, '1', 2),
    INDSET_NONCONSECUTIVE_MOVE: _nonconsecutive_window,
}

MOVE_KINDS = tuple(_WINDOWS)


def _rewrite(kind: str, code: ThresholdCode, at: int) -> Tuple[ThresholdCode, bool]:
    """Apply a move; returns the new code and whether the ``*`` was in the window."""
    window = _WINDOWS[kind](code, at)
    after = code.replace(at, window)
    if after.n != code.n or edge_count(after) != edge_count(code):
        raise InvariantViolation(
            f"{kind} at {at} turned {code} ({edge_count(code)} edges) into {after} ({edge_count(after)} edges)"
        )
    return after, at + len(window) > len(code.bits)


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------

def ab_switch(code: ThresholdCode, at: int) -> ThresholdCode:
    """0110 <-> 1001; matching counts of every size are unchanged."""
    return _rewrite(AB_SWITCH, code, at)[0]


def bracketed_1_move(code: ThresholdCode, at: int) -> ThresholdCode:
    """0 1^j 0 -> 1 0 1^(j-2) 0 1 for j >= 3; total matchings go up."""
    return _rewrite(BRACKETED_ONE_MOVE, code, at)[0]


def bracketed_0_move(code: ThresholdCode, at: int) -> ThresholdCode:
    """1 0^j 1 -> 0 1 0^(j-2) 1 0 for j >= 3; total matchings go up."""
    return _rewrite(BRACKETED_ZERO_MOVE, code, at)[0]


def indset_consecutive_move(code: ThresholdCode, at: int) -> ThresholdCode:
    """1 0^j 1 -> 0 1 0^(j-2) 1 0 for j >= 2; independent sets go down."""
    return _rewrite(INDSET_CONSECUTIVE_MOVE, code, at)[0]


def indset_nonconsecutive_move(code: ThresholdCode, at: int) -> ThresholdCode:
    """1 0 1^j 0 1 -> 0 1^(j+2) 0 for j >= 1; independent sets go down."""
    return _rewrite(INDSET_NONCONSECUTIVE_MOVE, code, at)[0]


MOVES: Dict[str, Callable[[ThresholdCode, int], ThresholdCode]] = {
    AB_SWITCH: ab_switch,
    BRACKETED_ONE_MOVE: bracketed_1_move,
    BRACKETED_ZERO_MOVE: bracketed_0_move,
    INDSET_CONSECUTIVE_MOVE: indset_consecutive_move,
    INDSET_NONCONSECUTIVE_MOVE: indset_nonconsecutive_move,
}


def find_move_windows(code: ThresholdCode, kind: str) -> List[int]:
    """Every position where a move of ``kind`` applies, left to right."""
    if kind not in _WINDOWS:
        raise ThresholdError(f"Unknown move kind {kind!r}")
    positions = []
    for at in range(len(code.bits)):
        try:
            _WINDOWS[kind](code, at)
        except PatternMismatch:
            continue
        positions.append(at)
    return positions


# ---------------------------------------------------------------------------
# Reductions
# ---------------------------------------------------------------------------

def _step(kind: str, code: ThresholdCode, at: int, total: Callable[[ThresholdCode], int]) -> RewriteStep:
    after, star_used = _rewrite(kind, code, at)
    return RewriteStep(
        kind=kind,
        position=at,
        before=code,
        after=after,
        star_used=star_used,
        total_before=total(code),
        total_after=total(after),
    )


def _guard(trace: RewriteTrace) -> None:
    limit = getattr(settings, 'MAX_REWRITE_STEPS', 10000)
    if len(trace) >= limit:
        raise ReductionDidNotConverge(
            f"{trace.objective} reduction of {trace.initial} exceeded {limit} steps"
        )


def _matching_total(code: ThresholdCode) -> int:
    return match_vector(code).total


def _indset_total(code: ThresholdCode) -> int:
    return ind_vector(code).total


def maximize_matchings_by_moves(code: ThresholdCode) -> RewriteTrace:
    """
    Rewrite towards an almost alternating code without losing matchings.

    A bracketed string is removed by its bracketed move. Otherwise the
    shortest separation issue is shortened by an ab-switch on the digit before
    its first pair and that pair; the shortest issue turns into a bracketed
    string.
    """
    trace = RewriteTrace(MATCHINGS, code)
    current = code
    while not is_almost_alternating(current):
        _guard(trace)
        bracketed = find_bracketed_string(current)
        if bracketed is not None:
            kind = BRACKETED_ONE_MOVE if bracketed.kind == BRACKETED_ONE else BRACKETED_ZERO_MOVE
            at = bracketed.start
        else:
            issue = find_separation_issue(current)
            if issue is None:
                raise ComputationError(f"{current} has no ab-form and no structural defect")
            kind, at = AB_SWITCH, issue.start - 1
        step = _step(kind, current, at, _matching_total)
        trace.steps.append(step)
        current = step.after

    logger.info(f"Matchings reduction {code} -> {current} in {len(trace)} steps")
    return trace


def minimize_indsets_by_moves(code: ThresholdCode) -> RewriteTrace:
    """
    Rewrite towards the colex code, each step lowering the number of
    independent sets and the binary value of the code.

    The leftmost 1 0^j 1 with j >= 2 is preferred; when every 0-run after the
    first 1 is a single 0, the leftmost 1 0 1^j 0 1 is used.
    """
    trace = RewriteTrace(INDSETS, code)
    current = code
    while not is_colex(current):
        _guard(trace)
        kind = INDSET_CONSECUTIVE_MOVE
        windows = find_move_windows(current, kind)
        if not windows:
            kind = INDSET_NONCONSECUTIVE_MOVE
            windows = find_move_windows(current, kind)
        if not windows:
            raise ComputationError(f"{current} is not colex but no independent-set move applies")
        step = _step(kind, current, windows[0], _indset_total)
        trace.steps.append(step)
        current = step.after

    logger.info(f"Independent-set reduction {code} -> {current} in {len(trace)} steps")
    return trace
