"""
Creation codes of threshold graphs: parsing, normalization, ab-forms and
structural defects.

A code is read left to right; the rightmost symbol is the first vertex added
and is always stored as ``*`` because its digit does not change the graph.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from .exceptions import CodeParseError, NotAlmostAlternating


STAR = '*'
DIGITS = '01'
LETTERS = {'a': '01', 'b': '10'}

BRACKETED_ZERO = 'bracketed-0-string'
BRACKETED_ONE = 'bracketed-1-string'
SEPARATION_ISSUE = 'separation-issue'


def _flip(digit: str) -> str:
    return '1' if digit == '0' else '0'


@dataclass(frozen=True, order=True)
class ThresholdCode:
    """Normalized creation code: ``bits`` holds the n - 1 stored digits."""

    bits: str

    def __post_init__(self):
        bad = next((i for i, ch in enumerate(self.bits) if ch not in DIGITS), None)
        if bad is not None:
            raise CodeParseError(self.bits, bad, "stored symbols must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits) + 1

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return self.bits + STAR

    def symbol(self, position: int) -> str:
        """Symbol at a position, ``*`` for the last one."""
        if position == len(self.bits):
            return STAR
        return self.bits[position]

    def digit(self, position: int) -> str:
        """Digit used for adjacency; the ``*`` vertex reads as 0."""
        if position == len(self.bits):
            return '0'
        return self.bits[position]

    def replace(self, position: int, window: str) -> 'ThresholdCode':
        """Overwrite stored digits starting at ``position``.

        A window that runs onto the ``*`` keeps the ``*``: its last digit is
        dropped by normalization.
        """
        text = self.bits[:position] + window + self.bits[position + len(window):]
        return ThresholdCode(text[:len(self.bits)])


def render(code: ThresholdCode) -> str:
    return str(code)


def parse_code(text: str) -> ThresholdCode:
    """
    Parse a code over {0, 1, *}.
    A final 0 or 1 is normalized to ``*``; ``*`` may only appear last.
    """
    text = (text or '').strip()
    if not text:
        raise CodeParseError(text, 0, "empty code")

    for position, ch in enumerate(text):
        if ch == STAR:
            if position != len(text) - 1:
                raise CodeParseError(text, position, "'*' must be the last symbol")
        elif ch not in DIGITS:
            raise CodeParseError(text, position, f"illegal character {ch!r}")

    return ThresholdCode(text[:-1])


def parse_ab(text: str) -> ThresholdCode:
    """
    Parse block + word syntax such as ``000aaba*`` or ``111aba``.

    Without a trailing ``*`` the last letter (or block digit) absorbs the star.
    """
    text = (text or '').strip()
    if not text:
        raise CodeParseError(text, 0, "empty code")

    position = 0
    block_digit = text[0] if text[0] in DIGITS else None
    while position < len(text) and text[position] == block_digit:
        position += 1

    expanded = text[:position]
    while position < len(text) and text[position] in LETTERS:
        expanded += LETTERS[text[position]]
        position += 1

    if position < len(text):
        if text[position] == STAR and position == len(text) - 1:
            expanded += STAR
        elif text[position] == STAR:
            raise CodeParseError(text, position, "'*' must be the last symbol")
        else:
            raise CodeParseError(text, position, f"unexpected {text[position]!r} in block+word code")

    return parse_code(expanded)


def complement_code(code: ThresholdCode) -> ThresholdCode:
    """Flip every stored digit; the graph of the result is the complement."""
    return ThresholdCode(''.join(_flip(d) for d in code.bits))


def value(code: ThresholdCode) -> int:
    """Binary value of the stored digits."""
    return int(code.bits, 2) if code.bits else 0


def leading_run(code: ThresholdCode) -> int:
    bits = code.bits
    if not bits:
        return 0
    run = 1
    while run < len(bits) and bits[run] == bits[0]:
        run += 1
    return run


# ---------------------------------------------------------------------------
# ab-forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ABForm:
    """
    A block of equal digits followed by a word over {a, b}.

    ``starred`` forms keep the ``*`` on its own after the word; unstarred
    forms use it as the last digit of the final letter (or the word is empty
    and the block runs up to it).
    """

    block_digit: Optional[str]
    block_len: int
    word: str
    starred: bool

    @property
    def alpha(self) -> int:
        return self.word.count('a')

    @property
    def beta(self) -> int:
        return self.word.count('b')

    @property
    def is_small(self) -> bool:
        return self.block_digit in (None, '0')

    @property
    def is_large(self) -> bool:
        return self.block_digit == '1'

    def expand(self) -> str:
        """Digit text of block + word (+ ``*`` when starred)."""
        text = (self.block_digit or '') * self.block_len
        text += ''.join(LETTERS[letter] for letter in self.word)
        return text + STAR if self.starred else text

    def to_code(self) -> ThresholdCode:
        return parse_code(self.expand())

    def canonical(self) -> 'ABForm':
        """Same letters with every a before every b."""
        return ABForm(self.block_digit, self.block_len, 'a' * self.alpha + 'b' * self.beta, self.starred)

    def signature(self) -> Tuple[Optional[str], int, int, int, bool]:
        return (self.block_digit, self.block_len, self.alpha, self.beta, self.starred)

    def __str__(self) -> str:
        return f"{(self.block_digit or '') * self.block_len}{self.word}{STAR if self.starred else ''}"


def code_from_form(form: ABForm) -> ThresholdCode:
    return form.to_code()


def letter_signature(form: ABForm) -> Tuple[Optional[str], int, int, int, bool]:
    """(block_digit, block_len, alpha, beta, starred); letter order is dropped."""
    return form.signature()


def _read_letters(rest: str) -> Optional[Tuple[str, bool]]:
    """Split ``rest`` (ending in ``*``) into letters; None if some pair repeats."""
    starred = len(rest) % 2 == 1
    body = rest[:-1] if starred else rest
    word = []
    for i in range(0, len(body), 2):
        first, second = body[i], body[i + 1]
        if first == second:
            return None
        word.append('a' if first == '0' else 'b')
    return ''.join(word), starred


def ab_forms(code: ThresholdCode) -> Tuple[ABForm, ...]:
    """
    Every decomposition of the code into block + ab-word, largest block first.
    Empty for codes that are not almost alternating; two forms exactly for
    alternating codes on at least two vertices.
    """
    text = str(code)
    run = leading_run(code)
    forms = []
    for block_len in (run, run - 1):
        if block_len < 0:
            continue
        letters = _read_letters(text[block_len:])
        if letters is None:
            continue
        word, starred = letters
        block_digit = code.bits[0] if block_len else None
        forms.append(ABForm(block_digit, block_len, word, starred))
    return tuple(forms)


def is_almost_alternating(code: ThresholdCode) -> bool:
    return bool(ab_forms(code))


def is_alternating(code: ThresholdCode) -> bool:
    """Block of equal digits followed by a strictly alternating string."""
    rest = str(code)[leading_run(code):]
    return all(
        rest[i] != rest[i + 1]
        for i in range(len(rest) - 1)
        if rest[i + 1] != STAR
    )


def is_small(code: ThresholdCode) -> bool:
    forms = ab_forms(code)
    if not forms:
        raise NotAlmostAlternating(f"{code} is not almost alternating")
    return any(form.is_small for form in forms)


def is_large(code: ThresholdCode) -> bool:
    forms = ab_forms(code)
    if not forms:
        raise NotAlmostAlternating(f"{code} is not almost alternating")
    return any(form.is_large for form in forms)


def is_colex(code: ThresholdCode) -> bool:
    """At most one 0 after the first 1."""
    first_one = code.bits.find('1')
    if first_one < 0:
        return True
    return code.bits.count('0', first_one) <= 1


# ---------------------------------------------------------------------------
# Structural defects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructuralDefect:
    """
    A bracketed string or a separation issue located in a code.

    ``spans`` are half-open position ranges. Bracketed strings have one span
    covering both brackets; separation issues have three: first pair, odd
    middle, last pair.
    """

    kind: str
    spans: Tuple[Tuple[int, int], ...]

    @property
    def start(self) -> int:
        return self.spans[0][0]

    @property
    def end(self) -> int:
        return self.spans[-1][1]

    def read(self, code: ThresholdCode) -> Tuple[str, ...]:
        """Re-read the cited spans from the code."""
        text = str(code)
        return tuple(text[start:end] for start, end in self.spans)

    def highlight(self, code: ThresholdCode) -> str:
        """Code text with the cited spans in brackets."""
        text = str(code)
        marks = self.spans
        if self.kind == SEPARATION_ISSUE:
            marks = (self.spans[0], self.spans[2])
        out, cursor = [], 0
        for start, end in marks:
            out.append(text[cursor:start])
            out.append(f"[{text[start:end]}]")
            cursor = end
        out.append(text[cursor:])
        return ''.join(out)


def find_bracketed_string(code: ThresholdCode) -> Optional[StructuralDefect]:
    """
    Leftmost digit followed by at least three copies of the opposite digit.

    The run of opposite digits always ends at the bracketing digit or at the
    ``*``, which reads as whichever digit is needed.
    """
    bits = code.bits
    for i, bracket in enumerate(bits):
        inner = _flip(bracket)
        j = 0
        while i + 1 + j < len(bits) and bits[i + 1 + j] == inner:
            j += 1
        if j >= 3:
            kind = BRACKETED_ZERO if bracket == '1' else BRACKETED_ONE
            return StructuralDefect(kind, ((i, i + j + 2),))
    return None


def find_separation_issue(code: ThresholdCode) -> Optional[StructuralDefect]:
    """
    Shortest separation issue, leftmost among the shortest.

    A first pair must be preceded by the opposite digit; the last pair must
    be followed by at least one symbol (possibly the ``*``).
    """
    bits = code.bits
    pairs = [k for k in range(len(bits) - 1) if bits[k] == bits[k + 1]]
    best = None
    for i in pairs:
        if i == 0 or bits[i - 1] == bits[i]:
            continue
        for k in pairs:
            gap = k - i
            if gap < 3 or gap % 2 == 0:
                continue
            if best is None or (gap, i) < (best[1] - best[0], best[0]):
                best = (i, k)
            break
    if best is None:
        return None
    i, k = best
    return StructuralDefect(SEPARATION_ISSUE, ((i, i + 2), (i + 2, k), (k, k + 2)))
