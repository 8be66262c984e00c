from itertools import combinations

from ..errors import DomainError
from .graph import Graph


def _size(name, n, least=0):
    if not isinstance(n, int) or n < least:
        raise DomainError('{0} needs an integer >= {1}, got {2!r}'.format(name, least, n))


def empty(n):
    _size('empty', n)
    return Graph(n)


def complete(n):
    _size('complete', n)
    return Graph(n, combinations(range(n), 2))


def path(n):
    _size('path', n)
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n):
    _size('cycle', n, 3)
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(leaves):
    _size('star', leaves)
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_multipartite(part_sizes):
    sizes = list(part_sizes)
    for s in sizes:
        _size('complete_multipartite', s)
    owner = []
    for i, s in enumerate(sizes):
        owner.extend([i] * s)
    n = len(owner)
    return Graph(n, ((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]))


def complete_bipartite(a, b):
    return complete_multipartite([a, b])


def complete_split(p, q):
    """K_p minus the edges inside the q-subset ``{0..q-1}``."""
    if not (isinstance(p, int) and isinstance(q, int) and p > q > 1):
        raise DomainError('complete_split requires p > q > 1, got p={0!r}, q={1!r}'.format(p, q))
    return Graph(p, ((u, v) for u, v in combinations(range(p), 2) if v >= q))


def complete_minus_edge(n):
    _size('complete_minus_edge', n, 2)
    return complete(n).remove_edge(0, 1)


def wheel(rim):
    _size('wheel', rim, 3)
    return Graph(rim + 1, [(0, i) for i in range(1, rim + 1)] +
                 [(i, i + 1) for i in range(1, rim)] + [(1, rim)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def max_degenerate(delta, n):
    """Maximal delta-degenerate graph: K_delta plus vertices joined to delta earlier ones."""
    if not (isinstance(delta, int) and isinstance(n, int) and 1 <= delta < n):
        raise DomainError('max_degenerate requires 1 <= delta < n, got delta={0!r}, n={1!r}'.format(delta, n))
    edges = list(combinations(range(delta), 2))
    for v in range(delta, n):
        edges.extend((u, v) for u in range(v - delta, v))
    return Graph(n, edges)
