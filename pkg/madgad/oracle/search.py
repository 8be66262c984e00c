"""
Exhaustive searches used as ground truth for the closed forms and the
constructions: subset enumeration for Mad, a dynamic program over edge
compositions for M^L(k, N), and two independent searches for M(k, n).
"""
import logging
from collections import namedtuple
from fractions import Fraction
from itertools import combinations, product
from math import comb, lcm
from multiprocessing.pool import ThreadPool

from ..consts import COLORINGS_MAX_COUNT
from ..consts import DECOMPOSITION
from ..consts import MAD_BRUTEFORCE_MAX_VERTICES
from ..core.graph import Graph
from ..errors import BudgetExceeded, DomainError
from ..formulas import g_max_mad
from ..mad import MadCertificate
from ..utils.decorators import refuse_above
from ..utils.utils import bits_of, mask_of, popcount
from .budget import OracleBudget

log = logging.getLogger(__name__)

# deadline checks happen every this many search nodes
_CLOCK_EVERY = 4096

SearchResult = namedtuple('SearchResult', ['value', 'subsets', 'nodes'])
ColoringResult = namedtuple('ColoringResult', ['value', 'coloring', 'count'])


def _edges_within(adjacency, n):
    """``e(S)`` for every vertex mask ``S`` of an ``n``-vertex graph."""
    counts = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        counts[mask] = counts[rest] + popcount(adjacency[v] & rest)
    return counts


def _better_witness(e, size, mask, best_e, best_size, best_mask):
    lhs, rhs = e * best_size, best_e * size
    if lhs != rhs:
        return lhs > rhs
    if size != best_size:
        return size < best_size
    return bits_of(mask) < bits_of(best_mask)


@refuse_above('mad_bruteforce vertices', MAD_BRUTEFORCE_MAX_VERTICES, lambda g: g.vertex_count)
def mad_bruteforce(g):
    """
    Mad by enumerating every non-empty vertex set. The witness follows the
    rule of :func:`madgad.mad.mad`: minimum cardinality, then lexicographically
    least, among the densest sets.
    """
    n = g.vertex_count
    if n == 0:
        raise DomainError('Mad of a graph without vertices is undefined')
    counts = _edges_within(g.adjacency, n)
    best_e, best_size, best_mask = 0, 1, 1
    for mask in range(2, 1 << n):
        size = popcount(mask)
        if _better_witness(counts[mask], size, mask, best_e, best_size, best_mask):
            best_e, best_size, best_mask = counts[mask], size, mask
    return MadCertificate(Fraction(2 * best_e, best_size), tuple(bits_of(best_mask)))


def _composition_table(k, N, least):
    """
    ``table[j][e]``: the best sum of g(m_i) over j parts with sum m_i = e and
    every m_i >= ``least``; ``None`` where no composition exists.
    """
    g = [Fraction(0)] + [g_max_mad(m) for m in range(1, N + 1)]
    table = [[None] * (N + 1) for _ in range(k + 1)]
    table[0][0] = Fraction(0)
    for j in range(1, k + 1):
        previous, row = table[j - 1], table[j]
        for e in range(N + 1):
            best = None
            for m in range(least, e + 1):
                rest = previous[e - m]
                if rest is None:
                    continue
                value = rest + g[m]
                if best is None or value > best:
                    best = value
            row[e] = best
    return table


def m_list_dp(k, N, budget=None):
    """M^L(k, N) as the maximum of g(m_1) + ... + g(m_k) over compositions of N."""
    budget = budget or OracleBudget()
    if not isinstance(k, int) or k < 1 or not isinstance(N, int) or N < k:
        raise DomainError('m_list_dp needs integers k >= 1 and N >= k, got k={0!r}, N={1!r}'.format(k, N))
    budget.require('max_list_k', k)
    budget.require('max_N', N)
    return _composition_table(k, N, 1)[k][N]


def _pair_masks(n):
    """Bit index of every pair and, per vertex mask, the mask of its pairs."""
    index = {pair: i for i, pair in enumerate(combinations(range(n), 2))}
    pairs = [0] * (1 << n)
    for mask in range(1, 1 << n):
        vertices = bits_of(mask)
        bits = 0
        for u, v in combinations(vertices, 2):
            bits |= 1 << index[(u, v)]
        pairs[mask] = bits
    return index, pairs


def _stabilizer_representatives(n, first):
    """One set from each orbit of the stabilizer of ``first`` (a prefix set)."""
    inside = bits_of(first)
    outside = [v for v in range(n) if not first >> v & 1]
    for a in range(len(inside) + 1):
        for b in range(len(outside) + 1):
            if a + b:
                yield mask_of(inside[:a] + outside[:b])


class _SubsetSearch(object):
    """
    Depth-first search over size-sorted tuples (X_1, ..., X_k) covering V(K_n)
    with First-Fit edge assignment. Values are kept as integers scaled by
    lcm(1..n). The first two sets are fixed to orbit representatives; later
    sets run in (size, mask) order and are never smaller than the second.
    """

    def __init__(self, k, n, budget):
        self.k = k
        self.n = n
        self.budget = budget
        self.full = (1 << n) - 1
        self.scale = lcm(*range(1, n + 1))
        _, self.pairs = _pair_masks(n)
        self.all_pairs = (1 << comb(n, 2)) - 1
        upto = _composition_table(k, comb(n, 2), 0)
        # best Mad-sum of j more parts given e uncovered pairs, scaled
        self.bound = [[max(v for v in upto[j][:e + 1] if v is not None) * self.scale
                       for e in range(comb(n, 2) + 1)] for j in range(k + 1)]
        self.order = sorted(range(1, 1 << n), key=lambda m: (popcount(m), m))
        self.first_of_size = {}
        for i, m in enumerate(self.order):
            self.first_of_size.setdefault(popcount(m), i)

    def gain(self, mask, covered):
        fresh = popcount(self.pairs[mask] & ~covered)
        return 2 * fresh * self.scale // popcount(mask)

    def roots(self):
        for size in range(1, self.n + 1):
            first = (1 << size) - 1
            if self.k == 1:
                yield (first,)
                continue
            for second in _stabilizer_representatives(self.n, first):
                if popcount(second) >= size:
                    yield (first, second)

    def run(self, root):
        """Best ``(scaled value, subsets)`` below ``root`` and the node count."""
        covered, union, value = 0, 0, 0
        for mask in root:
            value += self.gain(mask, covered)
            covered |= self.pairs[mask]
            union |= mask
        self.nodes = 0
        self.best = None
        start = self.first_of_size[popcount(root[-1])]
        self._extend(list(root), covered, union, value, start)
        return self.best, self.nodes

    def _offer(self, value, chosen):
        candidate = (value, tuple(chosen))
        if self.best is None or _beats(candidate, self.best):
            self.best = candidate

    def _extend(self, chosen, covered, union, value, start):
        self.nodes += 1
        if self.nodes % _CLOCK_EVERY == 0:
            self.budget.check_time()
        left = self.k - len(chosen)
        if left == 0:
            if union == self.full:
                self._offer(value, chosen)
            return
        uncovered = popcount(self.all_pairs & ~covered)
        if self.best is not None and value + self.bound[left][uncovered] < self.best[0]:
            return
        least = popcount(chosen[-1])
        for i in range(start, len(self.order)):
            mask = self.order[i]
            if popcount(mask) < least:
                continue
            chosen.append(mask)
            self._extend(chosen, covered | self.pairs[mask], union | mask,
                         value + self.gain(mask, covered), i)
            chosen.pop()


def _beats(candidate, incumbent):
    """Larger value wins; ties go to the lexicographically least (size, mask) key."""
    if candidate[0] != incumbent[0]:
        return candidate[0] > incumbent[0]
    return _key(candidate[1]) < _key(incumbent[1])


def _key(subsets):
    return tuple((popcount(m), m) for m in subsets)


def m_kn_search(k, n, budget=None, workers=1):
    """
    M(k, n) by exhaustive search over the subset-tuple formulation. Returns a
    :class:`SearchResult` whose ``subsets`` are sorted vertex tuples,
    smallest set first; the result does not depend on ``workers``.
    """
    budget = budget or OracleBudget()
    if not isinstance(k, int) or k < 1 or not isinstance(n, int) or n < 2:
        raise DomainError('m_kn_search needs k >= 1 and n >= 2, got k={0!r}, n={1!r}'.format(k, n))
    budget.require('max_vertices', n)
    budget.require('max_k', k)
    budget.start()

    def explore(root):
        return _SubsetSearch(k, n, budget).run(root)

    roots = list(_SubsetSearch(k, n, budget).roots())
    if workers > 1:
        pool = ThreadPool(workers)
        try:
            outcomes = pool.map(explore, roots)
        finally:
            pool.close()
            pool.join()
    else:
        outcomes = [explore(root) for root in roots]

    best, nodes = None, 0
    for found, count in outcomes:
        nodes += count
        if found is not None and (best is None or _beats(found, best)):
            best = found
    scale = lcm(*range(1, n + 1))
    log.debug('subset search k=%d n=%d: %d roots, %d nodes', k, n, len(roots), nodes)
    return SearchResult(Fraction(best[0], scale), tuple(tuple(bits_of(m)) for m in best[1]), nodes)


def first_fit_decomposition(subsets, n):
    """
    The First-Fit decomposition of K_n induced by size-sorted ``subsets``;
    pairs inside no subset go to the last part.
    """
    from ..decomp.decomposition import Decomposition
    owner = {}
    for i, s in enumerate(subsets):
        for pair in combinations(sorted(s), 2):
            owner.setdefault(pair, i)
    last = len(subsets) - 1
    parts = [[] for _ in subsets]
    for pair in combinations(range(n), 2):
        parts[owner.get(pair, last)].append(pair)
    return Decomposition(n, [Graph(n, edges) for edges in parts], mode=DECOMPOSITION, tag='first-fit')


def m_kn_colorings(k, n):
    """
    M(k, n) by trying every k-colouring of E(K_n); the first edge is fixed to
    colour 0. Refused beyond ``COLORINGS_MAX_COUNT`` colourings.
    """
    if not isinstance(k, int) or k < 1 or not isinstance(n, int) or n < 2:
        raise DomainError('m_kn_colorings needs k >= 1 and n >= 2, got k={0!r}, n={1!r}'.format(k, n))
    edges = list(combinations(range(n), 2))
    count = k ** (len(edges) - 1)
    if count > COLORINGS_MAX_COUNT:
        raise BudgetExceeded('colorings', COLORINGS_MAX_COUNT, count)
    sizes = [popcount(m) for m in range(1 << n)]
    best, best_coloring = None, None
    for tail in product(range(k), repeat=len(edges) - 1):
        coloring = (0,) + tail
        adjacency = [[0] * n for _ in range(k)]
        for (u, v), c in zip(edges, coloring):
            adjacency[c][u] |= 1 << v
            adjacency[c][v] |= 1 << u
        total = Fraction(0)
        for c in range(k):
            counts = _edges_within(adjacency[c], n)
            total += max(Fraction(2 * counts[m], sizes[m]) for m in range(1, 1 << n))
        if best is None or total > best:
            best, best_coloring = total, coloring
    log.debug('coloring search k=%d n=%d: %d colourings, best %s', k, n, count, best)
    return ColoringResult(best, best_coloring, count)
