"""
Closed-form edge counts and the extremal codes for given (n, e).
"""
import logging
from dataclasses import dataclass
from math import comb, isqrt
from typing import Optional

from .codes import ABForm, ThresholdCode, ab_forms, complement_code
from .exceptions import ConstructionMismatch, EdgeCountOutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtremalRequest:
    n: int
    e: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.e <= comb(self.n, 2):
            raise EdgeCountOutOfRange(self.n, self.e)

    @property
    def max_edges(self) -> int:
        return comb(self.n, 2)


def sm(n: int) -> int:
    """Most edges of a small almost alternating graph on n vertices."""
    return n * n // 4


def s(alpha: int, beta: int) -> int:
    """Edges of an unstarred word with alpha a's and beta b's."""
    return (alpha + beta) ** 2 - alpha


def s_star(alpha: int, beta: int) -> int:
    """Edges of a starred word with alpha a's and beta b's."""
    return (alpha + beta) ** 2 + beta


def _small_form(n: int, e: int) -> Optional[ABForm]:
    k = isqrt(e)
    candidates = []
    if e <= k * (k + 1):
        beta = e - k * k
        candidates.append((k - beta, beta, True, n - 2 * k - 1))
    if e >= k * (k + 1):
        alpha = (k + 1) ** 2 - e
        candidates.append((alpha, k + 1 - alpha, False, n - 2 * k - 2))
    if e == k * k:
        candidates.append((0, k, False, n - 2 * k))

    for alpha, beta, starred, block_len in candidates:
        if block_len >= 0:
            return ABForm('0' if block_len else None, block_len, 'a' * alpha + 'b' * beta, starred)
    return None


def _small_code(n: int, e: int) -> ThresholdCode:
    form = _small_form(n, e)
    if form is None:
        raise EdgeCountOutOfRange(n, e)
    return form.to_code()


def _complement_route(n: int, e: int) -> ThresholdCode:
    flipped = complement_code(_small_code(n, comb(n, 2) - e))
    return ab_forms(flipped)[0].canonical().to_code()


def almost_alternating_code(n: int, e: int) -> ThresholdCode:
    """
    Canonical almost alternating code with n vertices and e edges: block,
    then every a before every b.

    Up to sm(n) edges the code is small and built directly; above that it is
    the complement of the small code for the missing edges. Where both routes
    exist they must agree.
    """
    request = ExtremalRequest(n, e)
    small_range = e <= sm(n)
    large_range = request.max_edges - e <= sm(n)

    code = _small_code(n, e) if small_range else _complement_route(n, e)
    if small_range and large_range:
        other = _complement_route(n, e)
        if other != code:
            logger.error(f"Almost alternating routes disagree at n={n}, e={e}: {code} vs {other}")
            raise ConstructionMismatch(f"Small and complement constructions disagree at n={n}, e={e}")
    return code


def colex_code(n: int, e: int) -> ThresholdCode:
    """
    Code of the graph on the first e pairs in colex order: a clique on t
    vertices, one more vertex joined to r of them, then isolated vertices.
    """
    ExtremalRequest(n, e)
    t = 1
    while t < n and comb(t + 1, 2) <= e:
        t += 1
    if t == n:
        return ThresholdCode('1' * (n - 1))
    r = e - comb(t, 2)
    return ThresholdCode('0' * (n - t - 1) + '1' * r + '0' + '1' * (t - r - 1))


def is_boundary_edge_count(n: int, e: int) -> bool:
    """Edge counts where two almost alternating encodings meet."""
    total = comb(n, 2)
    for k in range((n + 1) // 2):
        for edges in (k * k, k * (k + 1)):
            if e in (edges, total - edges):
                return True
    return False
