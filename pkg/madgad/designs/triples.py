"""
Steiner triple systems and maximum partial triple systems.

Complete systems come from the Bose (n = 6t+3) and Skolem (n = 6t+1)
quasigroup constructions. Packings for the other residues are derived by
deleting a point, or, for n = 6t+5, by hill-climbing a triangle
decomposition of K_n minus a 4-cycle.
"""
import logging
import random
from itertools import combinations

import networkx as nx

from ..consts import GREEDY_MAX_RESTARTS, GREEDY_MAX_STEPS
from ..core import builders
from ..core.graph import Graph
from ..errors import DomainError, ValidationError
from .design import BOSE, GREEDY, SKOLEM, TRUNCATED, BlockDesign, leave_graph

log = logging.getLogger(__name__)


def _bose(n):
    t = (n - 3) // 6
    v = 2 * t + 1

    def point(x, i):
        return x + v * (i % 3)

    def op(a, b):
        return (a + b) * (t + 1) % v

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(v)]
    for x, y in combinations(range(v), 2):
        for i in range(3):
            blocks.append((point(x, i), point(y, i), point(op(x, y), i + 1)))
    return BlockDesign(n, blocks, BOSE, params={'n': n})


def _skolem(n):
    t = (n - 1) // 6
    order = 2 * t
    infinity = n - 1

    def point(x, i):
        return x + order * (i % 3)

    def op(a, b):
        s = (a + b) % order
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + t

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            blocks.append((infinity, point(x + t, i), point(x, i + 1)))
    for x, y in combinations(range(order), 2):
        for i in range(3):
            blocks.append((point(x, i), point(y, i), point(op(x, y), i + 1)))
    return BlockDesign(n, blocks, SKOLEM, params={'n': n})


def steiner_triple_system(n):
    """STS(n) for admissible ``n`` (1 or 3 mod 6, at least 3)."""
    if not isinstance(n, int) or n < 3 or n % 6 not in (1, 3):
        raise DomainError('a Steiner triple system needs n = 1 or 3 (mod 6), n >= 3; got {0!r}'.format(n))
    design = _bose(n) if n % 6 == 3 else _skolem(n)
    design.validate()
    if design.block_count != n * (n - 1) // 6:
        raise ValidationError('STS({0}) has {1} blocks'.format(n, design.block_count), kind='design')
    return design


def delete_point(design, point, meta=TRUNCATED):
    """Drop ``point`` and every block through it; relabel the others downwards."""
    if not 0 <= point < design.point_count:
        raise DomainError('point {0} not in a design on {1} points'.format(point, design.point_count))
    relabel = {x: x if x < point else x - 1 for x in range(design.point_count) if x != point}
    blocks = [tuple(relabel[x] for x in b) for b in design.blocks if point not in b]
    return BlockDesign(design.point_count - 1, blocks, meta, complete=False, params=design.params)


def _hill_climb(graph, rng):
    """
    Triangle decomposition of ``graph`` (every degree even, 3 | e) by
    hill-climbing, or None when the step budget runs out.
    """
    n = graph.vertex_count
    allowed = set(graph.edges)
    live = {v: set(graph.neighbors(v)) for v in graph.vertices}
    third = {}
    uncovered = len(allowed)
    steps = 0
    while uncovered:
        steps += 1
        if steps > GREEDY_MAX_STEPS:
            return None
        candidates = [v for v in range(n) if len(live[v]) >= 2]
        x = rng.choice(candidates)
        y, z = rng.sample(sorted(live[x]), 2)
        if (min(y, z), max(y, z)) not in allowed:
            continue
        live[x].discard(y)
        live[y].discard(x)
        live[x].discard(z)
        live[z].discard(x)
        uncovered -= 2
        if z in live[y]:
            live[y].discard(z)
            live[z].discard(y)
            uncovered -= 1
        else:
            w = third[(min(y, z), max(y, z))]
            for a, b in ((y, w), (z, w), (y, z)):
                del third[(min(a, b), max(a, b))]
            # y-w and z-w become uncovered again
            live[y].add(w)
            live[w].add(y)
            live[z].add(w)
            live[w].add(z)
            uncovered += 2
        for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
            third[(min(a, b), max(a, b))] = c
    return sorted({tuple(sorted((a, b, c))) for (a, b), c in third.items()})


def _c4_leave_packing(n, seed):
    leave = builders.cycle(4).with_vertex_count(n)
    target = Graph(n, (e for e in builders.complete(n).edges if not leave.has_edge(*e)))
    rng = random.Random(seed)
    for restart in range(GREEDY_MAX_RESTARTS):
        blocks = _hill_climb(target, rng)
        if blocks is not None:
            log.debug('hill-climb packing for n=%d found after %d restarts', n, restart)
            return BlockDesign(n, blocks, GREEDY, complete=False, params={'n': n, 'seed': seed})
        log.debug('hill-climb for n=%d restarting (%d)', n, restart + 1)
    raise ValidationError('no triangle packing of K_{0} minus C_4 found with seed {1}'.format(n, seed),
                          kind='design')


def expected_leave(n):
    """The leave graph of a maximum triangle packing of K_n, up to isomorphism."""
    if not isinstance(n, int) or n < 3:
        raise DomainError('leave graphs are tabulated for n >= 3, got {0!r}'.format(n))
    residue = n % 6
    if residue in (1, 3):
        return builders.empty(n)
    if residue in (0, 2):
        return Graph(n, ((v, v + 1) for v in range(0, n, 2)))
    if residue == 4:
        return Graph(n, [(0, 1), (0, 2), (0, 3)] + [(v, v + 1) for v in range(4, n, 2)])
    return builders.cycle(4).with_vertex_count(n)


def max_partial_triple_system(n, seed=0):
    """
    A maximum packing of K_n with triangles and its leave graph. The leave
    is checked against :func:`expected_leave` before returning.
    """
    if not isinstance(n, int) or n < 3:
        raise DomainError('triangle packings need n >= 3, got {0!r}'.format(n))
    residue = n % 6
    if residue in (1, 3):
        design = steiner_triple_system(n)
    elif residue in (0, 2):
        design = delete_point(steiner_triple_system(n + 1), n)
    elif residue == 5:
        design = _c4_leave_packing(n, seed)
    else:
        design = delete_point(_c4_leave_packing(n + 1, seed), 0, meta=GREEDY)
    design.validate()
    leave = leave_graph(design)
    if not nx.is_isomorphic(leave.to_networkx(), expected_leave(n).to_networkx()):
        raise ValidationError('leave of the packing for n={0} is not the tabulated one'.format(n), kind='design')
    log.info('maximum triangle packing of K_%d: %d triangles, leave with %d edges',
             n, design.block_count, leave.edge_count)
    return design, leave
