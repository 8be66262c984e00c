from fractions import Fraction
from itertools import combinations

import networkx as nx

from ..errors import DomainError
from .graph import Graph, vertex_set


def average_degree(g):
    if g.vertex_count < 1:
        raise DomainError('average degree of the empty vertex set is undefined')
    return Fraction(2 * g.edge_count, g.vertex_count)


def support(g):
    """Induced subgraph on the positive-degree vertices; K_1 if ``g`` has no edges."""
    if g.edge_count == 0:
        return Graph(1)
    return induced(g, [v for v in g.vertices if g.degrees[v] > 0])


def essential_average_degree(g):
    if g.edge_count == 0:
        return Fraction(0)
    return average_degree(support(g))


def complement(g):
    n = g.vertex_count
    return Graph(n, (e for e in combinations(range(n), 2) if not g.has_edge(*e)))


def induced(g, s):
    """Subgraph induced on ``s``, relabelled to ``0..|s|-1`` in increasing order."""
    s = vertex_set(s, g.vertex_count)
    index = {v: i for i, v in enumerate(s)}
    return Graph(len(s), ((index[u], index[v]) for u, v in g.edges if u in index and v in index))


def disjoint_union(a, b):
    shift = a.vertex_count
    return Graph(shift + b.vertex_count,
                 list(a.edges) + [(u + shift, v + shift) for u, v in b.edges])


def join(a, b):
    shift = a.vertex_count
    cross = [(u, v + shift) for u in range(a.vertex_count) for v in range(b.vertex_count)]
    return Graph(shift + b.vertex_count,
                 list(a.edges) + [(u + shift, v + shift) for u, v in b.edges] + cross)


def blow_up(g, factor, fill_parts=False):
    """
    Replace vertex ``v`` by the independent set ``v*factor .. v*factor+factor-1``
    and every edge by a complete bipartite bundle; ``fill_parts`` turns the
    classes into cliques.
    """
    if not isinstance(factor, int) or factor < 1:
        raise DomainError('blow-up factor must be a positive integer, got {0!r}'.format(factor))
    edges = []
    for u, v in g.edges:
        for i in range(factor):
            for j in range(factor):
                edges.append((u * factor + i, v * factor + j))
    if fill_parts:
        for v in g.vertices:
            edges.extend(combinations(range(v * factor, (v + 1) * factor), 2))
    return Graph(g.vertex_count * factor, edges)


def maximum_clique(g):
    """Lexicographically least clique of maximum order (``()`` for the empty graph)."""
    if g.vertex_count == 0:
        return ()
    best = (0,)
    for c in nx.find_cliques(g.to_networkx()):
        c = tuple(sorted(c))
        if len(c) > len(best) or (len(c) == len(best) and c < best):
            best = c
    return best


def clique_number(g):
    return len(maximum_clique(g))
