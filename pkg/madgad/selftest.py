"""
In-process acceptance sweeps behind ``madgad selftest``.

Every check returns a :class:`CheckResult`; a check that raises is reported
as failed with the exception text rather than aborting the run.
"""
import logging
import random
from collections import namedtuple
from fractions import Fraction
from itertools import combinations
from math import comb

import networkx as nx

from . import envs
from .core.graph import Graph
from .decomp.constructions import (
    blow_up_design_decomposition,
    construct_from_design,
    construct_k2,
    construct_k7_K8,
    construct_psts_decomposition,
    construct_triangular
)
from .decomp.decomposition import Decomposition, validate
from .decomp.transforms import apex_extend, recursive_blowup, split_edge
from .designs.planes import DELETE_LINE, DELETE_POINT, affine_plane, projective_plane, truncate_plane
from .designs.triples import max_partial_triple_system, steiner_triple_system
from .errors import MadgadException
from .formulas import g_max_mad, m_list, m_two, m_upper_bound, m_upper_range, split_edges, representative
from .mad import mad, mad_value
from .normalize import normalize
from .oracle.invariants import check_chain, check_pp_theorem
from .oracle.search import m_kn_colorings, m_kn_search, m_list_dp, mad_bruteforce

log = logging.getLogger(__name__)

CheckResult = namedtuple('CheckResult', ['name', 'tag', 'ok', 'detail'])


def random_graph(rng, n, p=0.5):
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_decomposition(rng, n, k):
    """Every edge of K_n gets a uniformly random part out of ``k``."""
    edges = [[] for _ in range(k)]
    for e in combinations(range(n), 2):
        edges[rng.randrange(k)].append(e)
    return Decomposition(n, [Graph(n, es) for es in edges], tag='random')


def _total(d, workers=1):
    return validate(d, workers=workers).total


def check_mad_oracle(rng, quick, workers):
    limit = 5 if quick else 6
    atlas = [Graph.from_networkx(g) for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= limit]
    samples = 20 if quick else 500
    randoms = [random_graph(rng, rng.choice((7, 8)), rng.random()) for _ in range(samples)]
    checked = 0
    for g in atlas + randoms:
        if mad(g) != mad_bruteforce(g):
            return False, 'mismatch on {0!r}'.format(g)
        checked += 1
    return True, '{0} graphs'.format(checked)


def check_g_formula(rng, quick, workers):
    top = 60 if quick else 500
    for m in range(1, top + 1):
        p, r = split_edges(m)
        if g_max_mad(m) != mad_value(representative(p, r)):
            return False, 'g({0}) differs from Mad of G_({1},{2})'.format(m, p, r)
    for _ in range(50 if quick else 1000):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        if g.edge_count and g.edge_count <= 9 and mad_value(g) > g_max_mad(g.edge_count):
            return False, '{0!r} beats g(m)'.format(g)
    return True, 'm <= {0}'.format(top)


def check_list_dp(rng, quick, workers):
    top = 30 if quick else 60
    cells = 0
    for k in range(2, 9):
        for N in range(k, top + 1):
            if m_list(k, N) != m_list_dp(k, N):
                return False, 'M^L({0},{1})'.format(k, N)
            cells += 1
    return True, '{0} cells'.format(cells)


def check_normalization(rng, quick, workers):
    runs = 100 if quick else 10000
    for _ in range(runs):
        k = rng.randint(1, 8)
        n = rng.randint(2, 11)
        if k > comb(n, 2):
            continue
        d = random_decomposition(rng, n, k)
        state = normalize(d)
        if state.mad_sum() != m_list(k, d.edge_total):
            return False, 'terminal sum {0} on {1!r}'.format(state.mad_sum(), d)
    return True, '{0} lists'.format(runs)


def check_k2(rng, quick, workers):
    top = 15 if quick else 40
    for n in range(3, top + 1):
        if _total(construct_k2(n), workers) != m_two(n):
            return False, 'construct_k2({0})'.format(n)
    for n in range(3, (5 if quick else 7) + 1):
        if m_kn_search(2, n, workers=workers).value != m_two(n):
            return False, 'search M(2,{0})'.format(n)
    for n in range(3, 6):
        if m_kn_colorings(2, n).value != m_two(n):
            return False, 'colourings M(2,{0})'.format(n)
    return True, 'n <= {0}'.format(top)


def _plane_cases(quick):
    ag3 = affine_plane(3)
    pg3 = projective_plane(3)
    cases = [
        ('PG(2,2)', projective_plane(2), 14),
        ('PG(2,3)', pg3, 39),
        ('AG(2,3)', ag3, 24),
        ('PG(2,3) minus a point', truncate_plane(pg3, DELETE_POINT), 35),
        ('AG(2,3) minus a point', truncate_plane(ag3, DELETE_POINT), 20),
        ('AG(2,3) minus a line', truncate_plane(ag3, DELETE_LINE), 13),
    ]
    if not quick:
        cases.append(('PG(2,5)', projective_plane(5), 155))
    return cases


def check_planes(rng, quick, workers):
    for name, design, expected in _plane_cases(quick):
        total = _total(construct_from_design(design), workers)
        if total != expected:
            return False, '{0}: {1} != {2}'.format(name, total, expected)
    if m_upper_bound(13, 12) != 35:
        return False, 'M(13,12) upper bound {0}'.format(m_upper_bound(13, 12))
    return True, 'all plane totals exact'


def check_upper_range(rng, quick, workers):
    for n in (7, 9, 13):
        for t in sorted({0, 1, 2, (n - 1) ** 2 // 3}):
            d = construct_psts_decomposition(n, t, seed=rng.randrange(1 << 16))
            if _total(d, workers) != m_upper_range(n, t)[0]:
                return False, 'n={0}, t={1}'.format(n, t)
    for n in range(6, 21):
        max_partial_triple_system(n, seed=rng.randrange(1 << 16))
    return True, 'totals and leaves'


def check_k8(rng, quick, workers):
    total = _total(construct_k7_K8(), workers)
    return total == 16 == m_list(7, 28), 'total {0}'.format(total)


def check_blowups(rng, quick, workers):
    fano = projective_plane(2)
    blown = _total(blow_up_design_decomposition(fano, 14), workers)
    if blown < Fraction(91, 3):
        return False, 'Fano blow-up total {0}'.format(blown)
    if _total(construct_triangular(2, 6), workers) != 7:
        return False, 'triangular k=3 on K_6'
    k2 = Decomposition(2, [Graph(2, [(0, 1)])])
    for d, t in ((k2, 3), (construct_from_design(fano), 2), (k2, 1)):
        base = _total(d, workers)
        total = _total(recursive_blowup(d, t), workers)
        if total < t * (base + d.n) - d.n:
            return False, 'recursive blow-up t={0} of {1!r}'.format(t, d)
    return True, 'Fano blow-up {0}'.format(blown)


def check_invariants(rng, quick, workers):
    for name, d in (('Fano', construct_from_design(projective_plane(2))),
                    ('STS(9)', construct_from_design(steiner_triple_system(9))),
                    ('PG(2,3)', construct_from_design(projective_plane(3)))):
        if not check_pp_theorem(d):
            return False, name
    runs = 100 if quick else 1000
    for _ in range(runs):
        g = random_graph(rng, rng.randint(1, 10 if not quick else 8), rng.random())
        if not check_chain(g):
            return False, 'chain fails on {0!r}'.format(g)
    return True, '{0} random graphs'.format(runs)


def check_monotone_transforms(rng, quick, workers):
    runs = 20 if quick else 200
    for _ in range(runs):
        n = rng.randint(3, 8)
        k = rng.randint(1, min(4, comb(n, 2) - 1))
        d = random_decomposition(rng, n, k)
        base = _total(d, workers)
        if _total(apex_extend(d), workers) - base < 1:
            return False, 'apex on {0!r}'.format(d)
        if any(g.edge_count > 1 for g in d.parts):
            if _total(split_edge(d), workers) - base < Fraction(1, 3):
                return False, 'split on {0!r}'.format(d)
    return True, '{0} decompositions'.format(runs)


CHECKS = (
    ('mad-oracle', 'mad', check_mad_oracle),
    ('g-formula', 'g', check_g_formula),
    ('list-dp', 'm_list', check_list_dp),
    ('normalization', 'normalize', check_normalization),
    ('k2', 'k2', check_k2),
    ('planes', 'plane', check_planes),
    ('upper-range', 'psts', check_upper_range),
    ('k7-k8', 'k7-k8', check_k8),
    ('blow-ups', 'blowup', check_blowups),
    ('invariants', 'oracle', check_invariants),
    ('monotone-transforms', 'apex/split', check_monotone_transforms),
)


def run_checks(quick=False, workers=1, seed=None):
    seed = envs.MADGAD_SEED if seed is None else seed
    results = []
    for name, tag, check in CHECKS:
        rng = random.Random('{0}:{1}'.format(seed, name))
        try:
            ok, detail = check(rng, quick, workers)
        except MadgadException as e:
            ok, detail = False, '{0}: {1}'.format(type(e).__name__, e)
        log.info('selftest %s: %s (%s)', name, 'ok' if ok else 'FAILED', detail)
        results.append(CheckResult(name, tag, bool(ok), detail))
    return results
