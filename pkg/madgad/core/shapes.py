"""Human-readable names for the graph shapes that occur in decompositions."""
from math import comb

from .operations import complement, induced, support


def _connected_shape(g):
    n, m = g.vertex_count, g.edge_count
    if m == 0:
        return 'K_1'
    if m == comb(n, 2):
        return 'K_{0}'.format(n)
    degrees = g.degrees
    if m == n - 1 and max(degrees) <= 2:
        return 'P_{0}'.format(n)
    if m == n and all(d == 2 for d in degrees):
        return 'C_{0}'.format(n)
    if m == comb(n, 2) - 1:
        return 'K_{0}-e'.format(n)
    p = n - 1
    r = m - comb(p, 2)
    if 0 < r < p:
        for w in g.vertices:
            if degrees[w] == r and induced(g, [v for v in g.vertices if v != w]).edge_count == comb(p, 2):
                return 'G_{{{0},{1}}}'.format(p, r)
    co = complement(g)
    classes = co.components()
    if all(co.count_edges_within(c) == comb(len(c), 2) for c in classes):
        return 'K_{{{0}}}'.format(','.join(str(len(c)) for c in sorted(classes, key=len)))
    return 'graph(n={0},m={1})'.format(n, m)


def shape_name(g):
    """Name of the support of ``g``; disconnected supports join their component names with '+'."""
    s = support(g)
    comps = s.components()
    if len(comps) == 1:
        return _connected_shape(s)
    names = sorted((_connected_shape(induced(s, c)) for c in comps), key=lambda x: (len(x), x))
    return '+'.join(names)
