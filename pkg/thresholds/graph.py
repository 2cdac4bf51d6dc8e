"""
Explicit graphs for creation codes, and the way back from a graph to its code.
"""
import logging
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, List, Tuple, Union

import networkx as nx
import pydot

from .codes import ThresholdCode
from .exceptions import NotThreshold, UnknownFormat

logger = logging.getLogger(__name__)

EXPORT_FORMATS = ('edge-list', 'dot')


@dataclass(frozen=True)
class ThresholdGraph:
    """
    Graph of a code. Vertex ``p`` is code position ``p``; ``adjacency[p]`` is
    the neighbourhood of ``p`` as a bitset over positions.
    """

    code: ThresholdCode
    adjacency: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def neighbors(self, position: int) -> frozenset:
        bits = self.adjacency[position]
        return frozenset(q for q in range(self.n) if bits >> q & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as position pairs (p, q), p < q."""
        return [
            (p, q)
            for p in range(self.n)
            for q in range(p + 1, self.n)
            if self.adjacency[p] >> q & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(bin(bits).count('1') for bits in self.adjacency) // 2

    def label(self, position: int) -> str:
        """Vertex name; v1 is the ``*`` vertex, vn the leftmost one."""
        return f"v{self.n - position}"

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph


def build_graph(code: ThresholdCode) -> ThresholdGraph:
    """
    Vertices p < q are adjacent exactly when position p holds a 1: a 1 is a
    dominating vertex over every vertex added before it, i.e. to its right.
    """
    n = code.n
    full = (1 << n) - 1
    ones_to_left = 0
    adjacency = []
    for p in range(n):
        dominating = code.digit(p) == '1'
        to_right = full & ~((1 << (p + 1)) - 1) if dominating else 0
        adjacency.append(ones_to_left | to_right)
        if dominating:
            ones_to_left |= 1 << p
    return ThresholdGraph(code=code, adjacency=tuple(adjacency))


def edge_count(code: ThresholdCode) -> int:
    """Each 1 at position p contributes its n - 1 - p edges to the right."""
    n = code.n
    return sum(n - 1 - p for p, digit in enumerate(code.bits) if digit == '1')


def code_from_graph(graph: Union[nx.Graph, ThresholdGraph]) -> ThresholdCode:
    """
    Peel isolated or dominating vertices until one vertex is left.

    Isolated vertices are peeled first; both kinds can only coexist when a
    single vertex remains, so the resulting code is canonical.
    """
    if isinstance(graph, ThresholdGraph):
        graph = graph.to_networkx()
    if graph.number_of_nodes() == 0:
        raise NotThreshold("The empty graph has no creation code")

    remaining = set(graph.nodes)
    degree = {v: sum(1 for u in graph.neighbors(v) if u != v) for v in remaining}
    symbols = []

    while len(remaining) > 1:
        ordered = sorted(remaining, key=str)
        vertex = next((v for v in ordered if degree[v] == 0), None)
        symbol = '0'
        if vertex is None:
            vertex = next((v for v in ordered if degree[v] == len(remaining) - 1), None)
            symbol = '1'
        if vertex is None:
            raise NotThreshold(
                f"No isolated or dominating vertex among {len(remaining)} remaining vertices"
            )
        symbols.append(symbol)
        remaining.discard(vertex)
        for u in graph.neighbors(vertex):
            if u in remaining:
                degree[u] -= 1

    return ThresholdCode(''.join(symbols))


def colex_pairs(n: int) -> Iterator[Tuple[int, int]]:
    """Pairs of [n] in colex order: {1,2}, {1,3}, {2,3}, {1,4}, ..."""
    for j in range(2, n + 1):
        for i in range(1, j):
            yield (i, j)


def colex_graph(n: int, e: int) -> nx.Graph:
    """Graph on [n] whose edges are the first e pairs in colex order."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(islice(colex_pairs(n), e))
    return graph


def _labelled_edges(graph: ThresholdGraph) -> List[Tuple[int, int]]:
    return sorted((graph.n - p, graph.n - q) for p, q in graph.edges())


def export(graph: ThresholdGraph, fmt: str) -> str:
    """
    Render as ``edge-list`` (one "vi vj" line per edge, i > j, sorted) or
    ``dot`` (undirected, vertices v1..vn).
    """
    if fmt == 'edge-list':
        return ''.join(f"v{i} v{j}\n" for i, j in _labelled_edges(graph))

    if fmt == 'dot':
        dot = pydot.Dot(graph_name='T', graph_type='graph')
        for i in range(1, graph.n + 1):
            dot.add_node(pydot.Node(f"v{i}"))
        for i, j in _labelled_edges(graph):
            dot.add_edge(pydot.Edge(f"v{i}", f"v{j}"))
        return dot.to_string()

    raise UnknownFormat(f"Unknown export format {fmt!r}; expected one of {', '.join(EXPORT_FORMATS)}")
