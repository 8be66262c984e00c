"""Colouring and connectivity invariants of small graphs."""
import logging
from collections import namedtuple
from math import comb, floor

import networkx as nx

from ..consts import INVARIANTS_MAX_VERTICES
from ..core.operations import clique_number, support
from ..errors import DomainError
from ..formulas import is_extremal_member
from ..mad import mad_sum, mad_value
from ..utils.decorators import refuse_above
from ..utils.utils import bits_of, popcount

log = logging.getLogger(__name__)


class InvariantRecord(namedtuple('InvariantRecord',
                                 ['omega', 'chi', 'degeneracy', 'col', 'kappa_plus', 'lambda_plus'])):

    def to_json(self):
        return dict(self._asdict())


PPReport = namedtuple('PPReport', ['holds', 'p', 'k', 'total', 'sums'])


def degeneracy(g):
    """Largest minimum degree met while peeling minimum-degree vertices."""
    alive = set(g.vertices)
    degree = list(g.degrees)
    best = 0
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        best = max(best, degree[v])
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                degree[u] -= 1
    return best


def _dsatur_order(adjacency, colors, uncolored):
    def key(v):
        seen = {colors[u] for u in bits_of(adjacency[v]) if colors[u] is not None}
        return (-len(seen), -popcount(adjacency[v]), v)
    return min(uncolored, key=key)


def _greedy_colors(adjacency, n):
    colors = [None] * n
    uncolored = set(range(n))
    while uncolored:
        v = _dsatur_order(adjacency, colors, uncolored)
        taken = {colors[u] for u in bits_of(adjacency[v])}
        colors[v] = next(c for c in range(n) if c not in taken)
        uncolored.discard(v)
    return max(colors) + 1


def chromatic_number(g):
    """
    Exact chromatic number: DSATUR branching, bounded below by the clique
    number and above by the DSATUR greedy colouring.
    """
    n = g.vertex_count
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    adjacency = g.adjacency
    lower = clique_number(g)
    best = [_greedy_colors(adjacency, n)]
    colors = [None] * n
    uncolored = set(range(n))
    nodes = [0]

    def branch(used):
        nodes[0] += 1
        if best[0] == lower:
            return
        if not uncolored:
            best[0] = used
            return
        v = _dsatur_order(adjacency, colors, uncolored)
        taken = {colors[u] for u in bits_of(adjacency[v])}
        # a fresh colour only when it stays below the incumbent
        for c in range(min(used + 1, best[0] - 1)):
            if c in taken:
                continue
            colors[v] = c
            uncolored.discard(v)
            branch(max(used, c + 1))
            uncolored.add(v)
            colors[v] = None

    branch(0)
    log.debug('chromatic number of n=%d m=%d: %d after %d nodes', n, g.edge_count, best[0], nodes[0])
    return best[0]


def _max_over_induced(g, connectivity):
    """Largest ``connectivity(H)`` over induced subgraphs H with at least two vertices."""
    n = g.vertex_count
    adjacency = g.adjacency
    nxg = g.to_networkx()
    best = 0
    for mask in range(1, 1 << n):
        if popcount(mask) < 2:
            continue
        vertices = bits_of(mask)
        # both connectivities are at most the minimum degree
        if min(popcount(adjacency[v] & mask) for v in vertices) <= best:
            continue
        best = max(best, connectivity(nxg.subgraph(vertices)))
    return best


def kappa_plus(g):
    return _max_over_induced(g, nx.node_connectivity)


def lambda_plus(g):
    return _max_over_induced(g, nx.edge_connectivity)


@refuse_above('invariants vertices', INVARIANTS_MAX_VERTICES, lambda g: support(g).vertex_count)
def invariants_small(g):
    """
    Clique number, chromatic number, degeneracy, colouring number and the
    largest vertex and edge connectivity of an induced subgraph, all taken
    on the support of ``g``.
    """
    h = support(g)
    delta = degeneracy(h)
    return InvariantRecord(
        omega=clique_number(h),
        chi=chromatic_number(h),
        degeneracy=delta,
        col=delta + 1,
        kappa_plus=kappa_plus(h),
        lambda_plus=lambda_plus(h),
    )


def check_chain(g):
    """Mad + 1 >= col >= chi >= omega."""
    record = invariants_small(g)
    value = mad_value(g) if g.vertex_count else 0
    return value + 1 >= record.col >= record.chi >= record.omega


def _shape_order(parts):
    """The p of a packing by K_p, K_(p+1) and at most one F_(p,r) member."""
    cliques, others = [], []
    for g in parts:
        h = support(g)
        if h.edge_count == comb(h.vertex_count, 2):
            cliques.append(h.vertex_count)
        else:
            others.append(g)
    if len(others) > 1:
        raise DomainError('{0} parts are neither complete nor a single extremal member'.format(len(others)))
    if others:
        g = others[0]
        p = clique_number(g)
        r = g.edge_count - comb(p, 2)
        if not (0 < r < p and is_extremal_member(g, p, r)):
            raise DomainError('part {0!r} is not in F_(p,r) with clique number p={1}'.format(g, p))
    else:
        p = min(cliques)
    if any(order not in (p, p + 1) for order in cliques):
        raise DomainError('clique orders {0} are not all p={1} or p+1'.format(sorted(set(cliques)), p))
    return p


def pp_report(d):
    """Sum-level colouring and connectivity identities on a K_p/K_(p+1) packing."""
    parts = list(d.parts)
    p = _shape_order(parts)
    total = mad_sum(parts)
    records = [invariants_small(g) for g in parts]
    sums = {name: sum(getattr(r, name) for r in records) for name in InvariantRecord._fields}
    whole = floor(total)
    k = len(parts)
    holds = (sums['omega'] == sums['chi'] == sums['col'] == whole + k and
             sums['degeneracy'] == sums['lambda_plus'] == sums['kappa_plus'] == whole)
    log.info('clique-packing identities on k=%d p=%d total=%s: %s', k, p, total, 'hold' if holds else 'fail')
    return PPReport(holds, p, k, total, sums)


def check_pp_theorem(d):
    return pp_report(d).holds
