"""
Transformations between decompositions: apex extension, edge splitting,
recursive blow-up, First-Fit canonicalization of subset sequences and the
part/point incidence graph.
"""
import logging
from itertools import combinations
from math import comb

from ..consts import DECOMPOSITION
from ..consts import PACKING
from ..core.graph import Graph, vertex_set
from ..core.operations import blow_up, maximum_clique
from ..errors import DomainError, ValidationError
from ..mad import is_free_edge
from .decomposition import Decomposition

log = logging.getLogger(__name__)


def apex_extend(d):
    """Add vertex ``n`` and give all its edges to the last part."""
    if d.k == 0:
        raise DomainError('apex extension needs at least one part')
    w = d.n
    parts = [g.with_vertex_count(d.n + 1) for g in d.parts]
    parts[-1] = parts[-1].add_edges((v, w) for v in range(d.n))
    return Decomposition(d.n + 1, parts, d.mode, tag='apex')


def _split_choice(d):
    for i, g in enumerate(d.parts):
        if g.edge_count < 2:
            continue
        for e in g.edges:
            if is_free_edge(g, e):
                return i, e
    largest = max(range(d.k), key=lambda i: (d.parts[i].edge_count, -i))
    return largest, d.parts[largest].edges[0]


def split_edge(d):
    """
    Move one edge into a new K_2 part: the first free edge of any part with
    two or more edges, otherwise the first edge of a largest part.
    """
    if d.k >= comb(d.n, 2):
        raise DomainError('k={0} already equals C({1},2)'.format(d.k, d.n))
    if all(g.edge_count <= 1 for g in d.parts):
        raise DomainError('no part has more than one edge')
    i, (u, v) = _split_choice(d)
    parts = list(d.parts)
    parts[i] = parts[i].remove_edge(u, v)
    parts.append(Graph(d.n, [(u, v)]))
    log.debug('split edge %d-%d off part %d', u, v, i)
    return Decomposition(d.n, parts, d.mode, tag='split')


def recursive_blowup(d, t):
    """Blow every part up by ``t`` and add one clique K_t per original vertex."""
    if not isinstance(t, int) or t < 1:
        raise DomainError('blow-up factor must be a positive integer, got {0!r}'.format(t))
    parts = [blow_up(g, t) for g in d.parts]
    for v in range(d.n):
        parts.append(Graph(d.n * t, combinations(range(v * t, (v + 1) * t), 2)))
    return Decomposition(d.n * t, parts, d.mode, tag='recursive')


def canonicalize_packing(subsets, n, mode=PACKING):
    """
    First-Fit parts from vertex sets: sets are taken in order of size
    (stable), and each part receives the pairs inside its set that no
    earlier part has taken.
    """
    sets = [vertex_set(s, n) for s in subsets]
    order = sorted(range(len(sets)), key=lambda i: len(sets[i]))
    used = set()
    parts = []
    for i in order:
        fresh = [e for e in combinations(sets[i], 2) if e not in used]
        used.update(fresh)
        parts.append(Graph(n, fresh))
    if mode == DECOMPOSITION and len(used) != comb(n, 2):
        mode = PACKING
    return Decomposition(n, parts, mode, tag='first-fit')


def packing_to_c4free_bipartite(d):
    """
    Incidence graph between parts ``0..k-1`` and points ``k..k+n-1`` of a
    maximum clique of each part; edge-disjoint cliques share at most one
    point, so the result has no 4-cycle.
    """
    k = d.k
    edges = []
    cliques = []
    for i, g in enumerate(d.parts):
        clique = maximum_clique(g)
        cliques.append(set(clique))
        edges.extend((i, k + v) for v in clique)
    for i, j in combinations(range(k), 2):
        if len(cliques[i] & cliques[j]) > 1:
            raise ValidationError('parts {0} and {1} share the points {2}'.format(
                i, j, sorted(cliques[i] & cliques[j])), kind='c4')
    return Graph(k + d.n, edges)
