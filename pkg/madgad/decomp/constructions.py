"""Concrete decompositions and packings of K_n with known Mad-sums."""
import inspect
import logging
from itertools import combinations
from math import comb

from ..consts import DECOMPOSITION
from ..consts import PACKING
from ..core.graph import Graph
from ..designs.planes import DELETE_LINE, DELETE_POINT, affine_plane, cyclic_plane_difference_set
from ..designs.planes import projective_plane, truncate_plane
from ..designs.triples import max_partial_triple_system, steiner_triple_system
from ..errors import DomainError, create_unexpected_params_error
from ..formulas import m_upper_range
from .decomposition import Decomposition
from .transforms import apex_extend, canonicalize_packing, recursive_blowup, split_edge

log = logging.getLogger(__name__)

SMALL_K_VARIANTS = ('A', 'B')


def _clique(n, vertices):
    return Graph(n, combinations(sorted(vertices), 2))


def _retag(d, tag):
    return Decomposition(d.n, d.parts, d.mode, tag=tag)


def _check_n(n, least=3):
    if not isinstance(n, int) or n < least:
        raise DomainError('n must be an integer >= {0}, got {1!r}'.format(least, n))


def construct_k2(n):
    """A clique on the first ceil(n/2) vertices and its complement."""
    _check_n(n)
    x = (n + 1) // 2
    first = _clique(n, range(x))
    second = Graph(n, (e for e in combinations(range(n), 2) if not first.has_edge(*e)))
    return Decomposition(n, [first, second], DECOMPOSITION, tag='k2')


def _chunks(vertices, sizes):
    out, start = [], 0
    for size in sizes:
        out.append(list(vertices[start:start + size]))
        start += size
    return out


def _thirds(n):
    base, extra = divmod(n, 3)
    return _chunks(range(n), [base + (1 if i >= 3 - extra else 0) for i in range(3)])


def _halves(vertices):
    half = len(vertices) // 2
    return list(vertices[:half]), list(vertices[half:])


def _small_k_sets(k, n, variant):
    if k not in (3, 4, 5, 6):
        raise DomainError('small-k constructions exist for k in 3..6, got {0!r}'.format(k))
    if variant not in SMALL_K_VARIANTS:
        raise DomainError('variant must be one of {0}, got {1!r}'.format(SMALL_K_VARIANTS, variant))
    _check_n(n)
    if variant == 'A':
        a1, a2, a3 = _thirds(n)
        return {
            3: [a1 + a2, a1 + a3, a2 + a3],
            4: [a1, a2, a3, a1 + a2 + a3],
            5: [a1, a2, a1 + a2, a1 + a3, a2 + a3],
            6: [a1, a2, a3, a1 + a2, a1 + a3, a2 + a3],
        }[k]
    b1, b2 = _halves(list(range(n)))
    if k == 3:
        return [b1, b2, b1 + b2]
    if k == 4:
        y, y2 = _halves(b2)
        return [b1, b2, b1 + y, b1 + y2]
    b1a, b1b = _halves(b1)
    b2a, b2b = _halves(b2)
    if k == 5:
        return [b1, b2, b1a + b2a, b1b + b2a, b1 + b2b]
    return [b1, b2, b1a + b2a, b1b + b2a, b1a + b2b, b1b + b2b]


def small_k_feasible(k, n, variant):
    """Whether the variant yields ``k`` parts that all carry at least one edge."""
    try:
        sets = _small_k_sets(k, n, variant)
    except DomainError:
        return False
    if any(not s for s in sets):
        return False
    d = canonicalize_packing(sets, n, DECOMPOSITION)
    return d.mode == DECOMPOSITION and all(g.edge_count for g in d.parts)


def construct_small_k(k, n, variant='A'):
    """
    First-Fit decompositions for k in 3..6 built from three near-equal
    classes (variant A) or two halves cut further into quarters (variant B).

    The sets are handed to First-Fit smallest first, so parts need not come
    out in the order the sets are listed (k=6, n=7, variant B moves the
    second half behind the size-3 sets). Serving smaller sets first never
    lowers the total: that example gives 12 where the listed order gives
    35/3.
    """
    if not small_k_feasible(k, n, variant):
        raise DomainError('no small-k construction for k={0}, n={1}, variant {2!r}'.format(k, n, variant))
    d = canonicalize_packing(_small_k_sets(k, n, variant), n, DECOMPOSITION)
    return _retag(d, 'small-k-' + variant)


_FANO_THROUGH_FIRST = [(0, 1, 2), (0, 3, 4), (0, 5, 6)]
_FANO_OTHERS = [(1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


def construct_k7_K8():
    """
    K_8 as 4 triangles, 2 copies of K_4-e and one K_4: a Fano plane on
    vertices 0..6 whose three lines through 0 are extended by vertex 7,
    the edge 0-7 going to the first of them only.
    """
    n = 8
    parts = [_clique(n, _FANO_THROUGH_FIRST[0] + (7,))]
    for line in _FANO_THROUGH_FIRST[1:]:
        parts.append(_clique(n, line + (7,)).remove_edge(0, 7))
    parts.extend(_clique(n, line) for line in _FANO_OTHERS)
    return Decomposition(n, parts, DECOMPOSITION, tag='k7-k8')


def construct_from_design(design, n=None):
    """One clique part per block; partial designs give packings."""
    n = design.point_count if n is None else n
    if n < design.point_count:
        raise DomainError('design on {0} points does not fit in K_{1}'.format(design.point_count, n))
    design.validate()
    mode = DECOMPOSITION if design.complete and n == design.point_count else PACKING
    return Decomposition(n, [_clique(n, b) for b in design.blocks], mode, tag='design-' + design.meta.lower())


def construct_psts_decomposition(n, t, seed=0):
    """
    C(n,2)-t parts: t/2 triangles (or (t-1)/2 and one P_3) from a maximum
    triangle packing, every other edge on its own.
    """
    m_upper_range(n, t)
    packing, leave = max_partial_triple_system(n, seed)
    triangles = list(packing.blocks)
    wanted = t // 2
    if wanted > len(triangles):
        raise DomainError('K_{0} packs only {1} edge-disjoint triangles, t={2} needs {3}'.format(
            n, len(triangles), t, wanted))
    parts = [_clique(n, b) for b in triangles[:wanted]]
    if t % 2:
        if len(triangles) > wanted:
            a, b, c = triangles[wanted]
            parts.append(Graph(n, [(a, b), (a, c)]))
        else:
            path = _leave_path(leave)
            if path is None:
                raise DomainError('no P_3 left over for odd t={0} on K_{1}'.format(t, n))
            parts.append(Graph(n, path))
    used = set(e for g in parts for e in g.edges)
    parts.extend(Graph(n, [e]) for e in combinations(range(n), 2) if e not in used)
    return Decomposition(n, parts, DECOMPOSITION, tag='psts')


def _leave_path(leave):
    for v in leave.vertices:
        nbrs = leave.neighbors(v)
        if len(nbrs) >= 2:
            return [(min(v, nbrs[0]), max(v, nbrs[0])), (min(v, nbrs[1]), max(v, nbrs[1]))]
    return None


def blow_up_design_decomposition(design, n):
    """
    Replace point ``x`` by the class ``x*f .. x*f+f-1`` (``f = n/v``); every
    block becomes a complete multipartite part, and the edges inside each
    class go round-robin to the parts whose block contains that class.
    """
    v = design.point_count
    if not design.complete:
        raise DomainError('blow-ups need a complete design')
    if not isinstance(n, int) or n < v or n % v:
        raise DomainError('n={0} is not a multiple of v={1}'.format(n, v))
    design.validate()
    f = n // v
    classes = [list(range(x * f, (x + 1) * f)) for x in range(v)]
    edges = []
    for block in design.blocks:
        edges.append([(a, b) for x, y in combinations(block, 2) for a in classes[x] for b in classes[y]])
    for x in range(v):
        owners = [i for i, block in enumerate(design.blocks) if x in block]
        for j, e in enumerate(combinations(classes[x], 2)):
            edges[owners[j % len(owners)]].append(e)
    return Decomposition(n, [Graph(n, es) for es in edges], DECOMPOSITION, tag='blowup')


def plane_plus_r_decomposition(q, r, n):
    """
    k = q^2+q+1+r parts from a cyclic PG(2,q) blown up by f = n/(q^2+q+1):
    lines 0..r-1 stay multipartite, the other lines also take the clique on
    their own point class, and classes 0..r-1 become r clique parts.
    """
    plane = cyclic_plane_difference_set(q)
    v = plane.modulus
    if not isinstance(r, int) or not 1 <= r <= v:
        raise DomainError('r must lie in 1..{0}, got {1!r}'.format(v, r))
    if not isinstance(n, int) or n < v or n % v:
        raise DomainError('n={0} is not a multiple of q^2+q+1={1}'.format(n, v))
    f = n // v
    classes = [list(range(x * f, (x + 1) * f)) for x in range(v)]
    parts = []
    for i, line in enumerate(plane.lines):
        edges = [(a, b) for x, y in combinations(line, 2) for a in classes[x] for b in classes[y]]
        if i >= r:
            edges.extend(combinations(classes[i], 2))
        parts.append(Graph(n, edges))
    parts.extend(_clique(n, classes[i]) for i in range(r))
    return Decomposition(n, parts, DECOMPOSITION, tag='plane-plus-r')


def construct_triangular(t, n):
    """t class cliques and C(t,2) complete bipartite graphs between classes."""
    if not isinstance(t, int) or t < 2:
        raise DomainError('t must be an integer >= 2, got {0!r}'.format(t))
    if not isinstance(n, int) or n < t or n % t:
        raise DomainError('n={0} is not a multiple of t={1}'.format(n, t))
    f = n // t
    classes = [range(i * f, (i + 1) * f) for i in range(t)]
    parts = [_clique(n, c) for c in classes]
    for a, b in combinations(classes, 2):
        parts.append(Graph(n, ((x, y) for x in a for y in b)))
    return Decomposition(n, parts, DECOMPOSITION, tag='triangular')


def _plane(q, kind='pg', truncate=None, target=0):
    if kind not in ('pg', 'ag'):
        raise DomainError('plane kind must be pg or ag, got {0!r}'.format(kind))
    design = projective_plane(q) if kind == 'pg' else affine_plane(q)
    if truncate == 'point':
        design = truncate_plane(design, DELETE_POINT, target)
    elif truncate == 'line':
        design = truncate_plane(design, DELETE_LINE, target)
    elif truncate is not None:
        raise DomainError('truncate must be point or line, got {0!r}'.format(truncate))
    return _retag(construct_from_design(design), 'plane-{0}{1}'.format(kind, '-' + truncate if truncate else ''))


def _blowup(source, order, n):
    if source == 'sts':
        design = steiner_triple_system(order)
    elif source == 'pg':
        design = projective_plane(order)
    elif source == 'ag':
        design = affine_plane(order)
    else:
        raise DomainError('blow-up source must be sts, pg or ag, got {0!r}'.format(source))
    return blow_up_design_decomposition(design, n)


def _sts(n):
    return construct_from_design(steiner_triple_system(n))


def _psts_packing(n, seed=0):
    return construct_from_design(max_partial_triple_system(n, seed)[0])


CONSTRUCTIONS = {
    'k2': construct_k2,
    'small-k': construct_small_k,
    'k7-k8': construct_k7_K8,
    'design': construct_from_design,
    'sts': _sts,
    'packing': _psts_packing,
    'plane': _plane,
    'psts': construct_psts_decomposition,
    'blowup': _blowup,
    'plane-plus-r': plane_plus_r_decomposition,
    'apex': apex_extend,
    'split': split_edge,
    'recursive': recursive_blowup,
    'triangular': construct_triangular,
}


def bind_params(name, params):
    """
    The construction registered under ``name``, after checking ``params``
    against its signature. Unknown names and missing parameters raise
    ``DomainError``; parameters it does not take raise ``TypeError``.
    """
    try:
        fn = CONSTRUCTIONS[name]
    except KeyError:
        raise DomainError('unknown construction {0!r}; known: {1}'.format(name, ', '.join(sorted(CONSTRUCTIONS))))
    signature = inspect.signature(fn)
    unexpected = [p for p in params if p not in signature.parameters]
    if unexpected:
        raise create_unexpected_params_error(name, unexpected)
    try:
        signature.bind(**params)
    except TypeError as e:
        raise DomainError('{0}: {1}'.format(name, e))
    return fn


def construct(name, **params):
    """Run the construction registered under ``name`` with keyword parameters."""
    d = bind_params(name, params)(**params)
    log.info('constructed %s: n=%d k=%d', name, d.n, d.k)
    return d
