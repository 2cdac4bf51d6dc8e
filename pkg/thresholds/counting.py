"""
Matching and independent-set counts of threshold graphs.

The fast path walks the code right to left, adding one vertex at a time.
The brute-force oracles work on any simple graph and exist to check it.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

import networkx as nx
from django.conf import settings

from .codes import ThresholdCode
from .exceptions import OracleLimitExceeded
from .graph import ThresholdGraph

logger = logging.getLogger(__name__)

GraphLike = Union[ThresholdGraph, nx.Graph]


@dataclass(frozen=True)
class CountVector:
    """Counts by size, index k holding the number of size-k objects."""

    counts: Tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def trimmed(self) -> Tuple[int, ...]:
        """Counts without trailing zeros."""
        end = len(self.counts)
        while end > 1 and self.counts[end - 1] == 0:
            end -= 1
        return self.counts[:end]

    def dominates(self, other: 'CountVector') -> bool:
        """Entry-wise >= other."""
        size = max(len(self), len(other))
        return all(self[k] >= other[k] for k in range(size))

    def __str__(self) -> str:
        return f"[{', '.join(str(c) for c in self.trimmed())}] total {self.total}"


class MatchingVector(CountVector):
    """m_0..m_{n//2}."""


class IndependenceVector(CountVector):
    """i_0..i_n."""


# ---------------------------------------------------------------------------
# Incremental steps
# ---------------------------------------------------------------------------

def add_dominating(matchings: List[int], indsets: List[int], t: int) -> None:
    """
    Add a vertex adjacent to all ``t`` current vertices, in place.

    A new k-matching uses the new vertex with one of the t - 2(k-1) vertices
    left free by a (k-1)-matching; the only new independent set is {v}.
    """
    for k in range(len(matchings) - 1, 0, -1):
        free = t - 2 * (k - 1)
        if free > 0:
            matchings[k] += free * matchings[k - 1]
    if len(indsets) > 1:
        indsets[1] += 1


def add_isolated(matchings: List[int], indsets: List[int]) -> None:
    """Add a vertex with no neighbours, in place; matchings are unchanged."""
    for k in range(len(indsets) - 1, 0, -1):
        indsets[k] += indsets[k - 1]


def add_digit(matchings: List[int], indsets: List[int], digit: str, t: int) -> None:
    if digit == '1':
        add_dominating(matchings, indsets, t)
    else:
        add_isolated(matchings, indsets)


def empty_state(n: int) -> Tuple[List[int], List[int]]:
    """Count lists sized for n vertices, describing the graph with no vertices."""
    return [1] + [0] * (n // 2), [1] + [0] * n


def count_vectors(code: ThresholdCode) -> Tuple[MatchingVector, IndependenceVector]:
    n = code.n
    matchings, indsets = empty_state(n)
    for t, p in enumerate(range(n - 1, -1, -1)):
        add_digit(matchings, indsets, code.digit(p), t)
    return MatchingVector(tuple(matchings)), IndependenceVector(tuple(indsets))


def match_vector(code: ThresholdCode) -> MatchingVector:
    return count_vectors(code)[0]


def ind_vector(code: ThresholdCode) -> IndependenceVector:
    return count_vectors(code)[1]


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def _bitsets(graph: GraphLike) -> Tuple[int, Tuple[int, ...]]:
    """Vertex count and neighbourhood bitsets of any simple graph."""
    if isinstance(graph, ThresholdGraph):
        return graph.n, graph.adjacency
    nodes = list(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    adjacency = [0] * len(nodes)
    for u, v in graph.edges():
        if u == v:
            continue
        adjacency[index[u]] |= 1 << index[v]
        adjacency[index[v]] |= 1 << index[u]
    return len(nodes), tuple(adjacency)


def _add_shifted(target: List[int], source: Sequence[int]) -> None:
    for k, count in enumerate(source):
        target[k + 1] += count


def brute_force_match_vector(graph: GraphLike) -> MatchingVector:
    """Count matchings by size: the lowest vertex is unmatched or matched to a neighbour."""
    n, adjacency = _bitsets(graph)
    limit = getattr(settings, 'ORACLE_MATCHING_LIMIT', 12)
    if n > limit:
        raise OracleLimitExceeded(n, limit)
    size = n // 2 + 1

    @lru_cache(maxsize=None)
    def count(available: int) -> Tuple[int, ...]:
        result = [0] * size
        if not available:
            result[0] = 1
            return tuple(result)
        low = available & -available
        v = low.bit_length() - 1
        rest = available ^ low
        for k, c in enumerate(count(rest)):
            result[k] += c
        partners = adjacency[v] & rest
        while partners:
            bit = partners & -partners
            partners ^= bit
            _add_shifted(result, count(rest ^ bit)[:-1])
        return tuple(result)

    return MatchingVector(count((1 << n) - 1))


def brute_force_ind_vector(graph: GraphLike) -> IndependenceVector:
    """Count independent sets by size: branch on the lowest available vertex."""
    n, adjacency = _bitsets(graph)
    limit = getattr(settings, 'ORACLE_INDEPENDENCE_LIMIT', 24)
    if n > limit:
        raise OracleLimitExceeded(n, limit)
    size = n + 1

    @lru_cache(maxsize=None)
    def count(available: int) -> Tuple[int, ...]:
        result = [0] * size
        if not available:
            result[0] = 1
            return tuple(result)
        low = available & -available
        v = low.bit_length() - 1
        rest = available ^ low
        for k, c in enumerate(count(rest)):
            result[k] += c
        _add_shifted(result, count(rest & ~adjacency[v])[:-1])
        return tuple(result)

    return IndependenceVector(count((1 << n) - 1))


def clique_vector(graph: GraphLike) -> Tuple[int, ...]:
    """Number of cliques of each size 0..n, the empty clique included."""
    if isinstance(graph, ThresholdGraph):
        graph = graph.to_networkx()
    counts = [0] * (graph.number_of_nodes() + 1)
    counts[0] = 1
    for clique in nx.enumerate_all_cliques(graph):
        counts[len(clique)] += 1
    return tuple(counts)
