"""Maximum average degree with exact certificates.

Mad(G) is the largest density 2e(S)/|S| over non-empty vertex sets S. A
candidate density a/b is beaten by some S iff max_S (2b*e(S) - a|S|) > 0,
which is one integer-capacity minimum cut. Bisection on exact rationals
stops once the bracket is narrower than 1/(n(n-1)), the least gap between
two distinct densities of sets of at most n vertices.
"""
import logging
from collections import namedtuple
from fractions import Fraction
from math import ceil

import networkx as nx
from networkx.algorithms.flow import minimum_cut

from .core.graph import vertex_set
from .core.rational import to_str
from .errors import DomainError, ValidationError

log = logging.getLogger(__name__)

_SOURCE = ('source',)
_SINK = ('sink',)


class MadCertificate(namedtuple('MadCertificate', ['value', 'witness'])):
    """Exact Mad value and a vertex set attaining it."""

    def check(self, g):
        s = vertex_set(self.witness, g.vertex_count)
        if not s:
            raise ValidationError('empty witness', kind='mad')
        if density(g, s) != self.value:
            raise ValidationError('witness density {0} differs from value {1}'.format(
                density(g, s), self.value), kind='mad')
        from .core.operations import induced
        if not induced(g, s).is_connected():
            raise ValidationError('witness {0} does not induce a connected graph'.format(s), kind='mad')
        return True

    def to_json(self):
        return {'mad': to_str(self.value), 'witness': list(self.witness)}


def _max_excess(g, vertices, a, b, scale=1, penalty=0, forced_in=(), forced_out=()):
    """
    Maximize ``scale*(2b*e(S) - a|S|) - penalty*|S|`` over ``S`` within ``vertices``
    containing ``forced_in`` and avoiding ``forced_out``.

    Returns the optimum and one optimal set (the source side of a minimum cut).
    """
    inside = set(vertices)
    weights = {}
    for v in vertices:
        d = sum(1 for u in g.neighbors(v) if u in inside)
        weights[v] = scale * (b * d - a) - penalty
    bundle = scale * b
    edges = [(u, v) for u, v in g.edges if u in inside and v in inside]
    positive = sum(w for w in weights.values() if w > 0)
    infinite = positive + sum(-w for w in weights.values() if w < 0) + 2 * bundle * len(edges) + 1

    net = nx.DiGraph()
    net.add_node(_SOURCE)
    net.add_node(_SINK)
    forced_in, forced_out = set(forced_in), set(forced_out)
    for v, w in weights.items():
        if v in forced_in:
            net.add_edge(_SOURCE, v, capacity=infinite)
        elif w > 0:
            net.add_edge(_SOURCE, v, capacity=w)
        if v in forced_out:
            net.add_edge(v, _SINK, capacity=infinite)
        elif w < 0:
            net.add_edge(v, _SINK, capacity=-w)
    if bundle:
        for u, v in edges:
            net.add_edge(u, v, capacity=bundle)
            net.add_edge(v, u, capacity=bundle)
    cut_value, (source_side, _) = minimum_cut(net, _SOURCE, _SINK)
    chosen = tuple(sorted(v for v in source_side if v != _SOURCE))
    return positive - cut_value, chosen


def _bisect(g, vertices):
    n = g.vertex_count
    best = tuple(vertices)
    lo = density(g, best)
    hi = Fraction(max(g.degrees[v] for v in vertices))
    gap = Fraction(1, n * (n - 1))
    cuts = 0
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        excess, s = _max_excess(g, vertices, mid.numerator, mid.denominator)
        cuts += 1
        if excess > 0:
            best = s
            lo = density(g, s)
        else:
            hi = mid
    log.debug('mad bisection on n=%d m=%d: %d cuts, value %s', n, g.edge_count, cuts, lo)
    return lo, best


def _peel(g, threshold):
    """Vertices surviving repeated removal of those with degree <= threshold."""
    alive = set(g.vertices)
    degree = {v: g.degrees[v] for v in alive}
    queue = [v for v in alive if degree[v] <= threshold]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                degree[u] -= 1
                if degree[u] <= threshold:
                    queue.append(u)
    return sorted(alive)


def _canonical_witness(g, value):
    """Lexicographically least maximizer among those of minimum cardinality."""
    n = g.vertex_count
    a, b = value.numerator, value.denominator
    # in a smallest maximizer every vertex has more than value/2 neighbours inside it
    core = _peel(g, value / 2)

    def smallest(forced_in, forced_out):
        excess, s = _max_excess(g, core, a, b, scale=n + 1, penalty=1,
                                forced_in=forced_in, forced_out=forced_out)
        if excess < -n:
            return None, None
        return -excess, s

    floor_card = ceil(value) + 1
    best_card, first, solution = None, None, None
    for i, v in enumerate(core):
        card, s = smallest({v}, core[:i])
        if card is not None and (best_card is None or card < best_card):
            best_card, first, solution = card, v, set(s)
            if best_card == floor_card:
                break
    if best_card is None:
        raise ValidationError('no maximizer found at density {0}'.format(value), kind='mad')

    chosen = {first}
    excluded = {u for u in core if u < first}
    for u in core:
        if u <= first:
            continue
        if len(chosen) == best_card:
            break
        if u in solution:
            chosen.add(u)
            continue
        card, s = smallest(chosen | {u}, excluded)
        if card == best_card:
            chosen.add(u)
            solution = set(s)
        else:
            excluded.add(u)
    return tuple(sorted(chosen))


def _positive_vertices(g):
    return [v for v in g.vertices if g.degrees[v] > 0]


def mad_value(g):
    """Exact Mad(g) without building a canonical witness."""
    if g.vertex_count == 0:
        raise DomainError('Mad of a graph without vertices is undefined')
    if g.edge_count == 0:
        return Fraction(0)
    return _bisect(g, _positive_vertices(g))[0]


def mad(g):
    """
    Exact Mad(g) with a canonical witness: among all vertex sets attaining the
    maximum density, the lexicographically least one of minimum cardinality
    (such a set always induces a connected subgraph).
    """
    if g.vertex_count == 0:
        raise DomainError('Mad of a graph without vertices is undefined')
    if g.edge_count == 0:
        return MadCertificate(Fraction(0), (0,))
    value, _ = _bisect(g, _positive_vertices(g))
    witness = _canonical_witness(g, value)
    if density(g, witness) != value:
        raise ValidationError('canonical witness {0} misses density {1}'.format(witness, value), kind='mad')
    return MadCertificate(value, witness)


def density(g, s):
    """Exact density 2e(S)/|S| of the non-empty vertex set ``s``."""
    return g.density(s)


def is_free_edge(g, e):
    """True iff deleting ``e`` leaves Mad unchanged."""
    u, v = e
    if not g.has_edge(u, v):
        raise DomainError('edge ({0}, {1}) is not in the graph'.format(u, v))
    return mad_value(g.remove_edge(u, v)) == mad_value(g)


def mad_sum(graphs):
    return sum((mad_value(g) for g in graphs), Fraction(0))
