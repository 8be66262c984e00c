"""Immutable simple graphs on dense vertex indices ``0..n-1``."""
from fractions import Fraction

import networkx as nx

from ..errors import DomainError
from ..utils.cached_property import threaded_cached_property
from ..utils.utils import bits_of, mask_of, popcount


def _edge(u, v, n):
    if not (isinstance(u, int) and isinstance(v, int)):
        raise DomainError('vertex indices must be integers: ({0!r}, {1!r})'.format(u, v))
    if u == v:
        raise DomainError('loop at vertex {0}'.format(u))
    if not (0 <= u < n and 0 <= v < n):
        raise DomainError('edge ({0}, {1}) outside vertex range 0..{2}'.format(u, v, n - 1))
    return (u, v) if u < v else (v, u)


def vertex_set(vertices, n=None):
    """Sorted tuple of distinct vertex indices, checked against ``n`` when given."""
    s = tuple(sorted(set(vertices)))
    if n is not None:
        for v in s:
            if not (isinstance(v, int) and 0 <= v < n):
                raise DomainError('vertex {0!r} invalid for a graph of order {1}'.format(v, n))
    return s


class Graph(object):
    """
    A finite simple undirected graph.

    Edges are stored as ``(u, v)`` pairs with ``u < v`` in lexicographic order;
    equal graphs compare and hash equal. Adjacency bitsets are derived lazily.
    """

    def __init__(self, vertex_count, edges=()):
        if not isinstance(vertex_count, int) or vertex_count < 0:
            raise DomainError('vertex_count must be a non-negative integer, got {0!r}'.format(vertex_count))
        normalized = set()
        for e in edges:
            u, v = e
            normalized.add(_edge(u, v, vertex_count))
        self._n = vertex_count
        self._edges = tuple(sorted(normalized))
        self._edge_set = frozenset(normalized)

    @property
    def vertex_count(self):
        return self._n

    @property
    def edges(self):
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def vertices(self):
        return range(self._n)

    @threaded_cached_property
    def adjacency(self):
        adj = [0] * self._n
        for u, v in self._edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @threaded_cached_property
    def degrees(self):
        return tuple(popcount(a) for a in self.adjacency)

    def degree(self, v):
        self._check_vertex(v)
        return self.degrees[v]

    def neighbors(self, v):
        self._check_vertex(v)
        return bits_of(self.adjacency[v])

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._edge_set

    @property
    def max_degree(self):
        return max(self.degrees) if self._n else 0

    @property
    def min_degree(self):
        return min(self.degrees) if self._n else 0

    def count_edges_within(self, vertices):
        """e(S) for a vertex set given as an iterable or a bitmask."""
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        total = 0
        for v in bits_of(mask):
            total += popcount(self.adjacency[v] & mask)
        return total // 2

    def density(self, vertices):
        """2e(S)/|S| for a non-empty vertex set S."""
        s = vertex_set(vertices, self._n)
        if not s:
            raise DomainError('density of an empty vertex set')
        return Fraction(2 * self.count_edges_within(s), len(s))

    def remove_edge(self, u, v):
        e = _edge(u, v, self._n)
        if e not in self._edge_set:
            raise DomainError('edge {0} not in graph'.format(e))
        return Graph(self._n, (f for f in self._edges if f != e))

    def add_edges(self, edges):
        return Graph(self._n, list(self._edges) + list(edges))

    def with_vertex_count(self, n):
        if n < self._n:
            raise DomainError('cannot shrink a graph from {0} to {1} vertices'.format(self._n, n))
        return Graph(n, self._edges)

    def relabel(self, mapping, n=None):
        """Image of the graph under ``mapping`` (dict or sequence) into order ``n``."""
        n = self._n if n is None else n
        return Graph(n, ((mapping[u], mapping[v]) for u, v in self._edges))

    def components(self):
        """Vertex sets of the connected components, ordered by least vertex."""
        seen = 0
        comps = []
        for v in range(self._n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits_of(frontier):
                    nxt |= self.adjacency[u]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(tuple(bits_of(comp)))
        return comps

    def is_connected(self):
        return self._n <= 1 or len(self.components()) == 1

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self._edges)
        return g

    @classmethod
    def from_networkx(cls, g):
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in g.edges()))

    def _check_vertex(self, v):
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise DomainError('vertex {0!r} invalid for a graph of order {1}'.format(v, self._n))

    def __eq__(self, other):
        return isinstance(other, Graph) and self._n == other._n and self._edges == other._edges

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return '<Graph n={0} m={1}>'.format(self._n, len(self._edges))
