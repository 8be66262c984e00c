"""
Closed forms: g(m), parameter triples, the list maximum M^L(k,N), bounds and
exact values of M(k,n), square-root caps, and the lower-bound catalog.
"""
import logging
from collections import namedtuple
from fractions import Fraction
from math import comb, isqrt

from .consts import DIFFERENCE_SETS, LOWER_BOUND_CACHE_SIZE, PLANE_ORDERS
from .core import builders
from .core.graphlist import GraphList
from .core.operations import clique_number, support
from .core.rational import SqrtInterval, le_sqrt, lt_sqrt
from .errors import DomainError
from .utils.utils import memoize

log = logging.getLogger(__name__)

COMPLETE = 'COMPLETE'
SUPSET_OF_KP = 'SUPSET_OF_Kp'
ORDER_P_PLUS_1 = 'ORDER_P_PLUS_1'
BOTH = 'BOTH'
K_P_PLUS_1 = 'K_P_PLUS_1'

ParamTriple = namedtuple('ParamTriple', ['p', 'q', 'r'])
ExtremalFamilySpec = namedtuple('ExtremalFamilySpec', ['p', 'r', 'regime'])
LowerBound = namedtuple('LowerBound', ['value', 'tag', 'detail'])
ProportionalPlan = namedtuple('ProportionalPlan', [
    'ratio', 'p', 'x', 'n', 'k', 'count_p', 'count_p1', 'feasible', 'value'])


def _int(name, x, least):
    if not isinstance(x, int) or isinstance(x, bool) or x < least:
        raise DomainError('{0} must be an integer >= {1}, got {2!r}'.format(name, least, x))


def split_edges(m):
    """(p, r) with m = C(p,2) + r and 0 <= r < p."""
    _int('m', m, 0)
    p = (1 + isqrt(1 + 8 * m)) // 2
    while comb(p, 2) > m:
        p -= 1
    while comb(p + 1, 2) <= m:
        p += 1
    return p, m - comb(p, 2)


def representative_mad(p, r):
    """Mad of G_{p,r}: p-1 when 2r <= p-1, else 2(C(p,2)+r)/(p+1)."""
    _int('p', p, 1)
    if not 0 <= r <= p:
        raise DomainError('representative needs 0 <= r <= p, got p={0}, r={1}'.format(p, r))
    if 2 * r <= p - 1:
        return Fraction(p - 1)
    return Fraction(2 * (comb(p, 2) + r), p + 1)


def g_max_mad(m):
    """g(m): the largest Mad of a graph with m edges."""
    _int('m', m, 1)
    return representative_mad(*split_edges(m))


def representative(p, r):
    """G_{p,r}: K_p plus a vertex adjacent to the r lowest clique vertices."""
    _int('p', p, 1)
    if not 0 <= r <= p:
        raise DomainError('representative needs 0 <= r <= p, got p={0}, r={1}'.format(p, r))
    if r == 0:
        return builders.complete(p)
    return builders.complete(p).with_vertex_count(p + 1).add_edges((v, p) for v in range(r))


def classify_family(p, r):
    _int('p', p, 2)
    if not 0 <= r <= p:
        raise DomainError('family F_(p,r) needs 0 <= r <= p, got p={0}, r={1}'.format(p, r))
    if r == 0:
        regime = COMPLETE
    elif r == p:
        regime = K_P_PLUS_1
    elif 2 * r < p - 1:
        regime = SUPSET_OF_KP
    elif 2 * r == p - 1:
        regime = BOTH
    else:
        regime = ORDER_P_PLUS_1
    return ExtremalFamilySpec(p, r, regime)


def is_extremal_member(g, p, r):
    """
    Whether ``g`` lies in F_(p,r). Orders are measured on the support, so
    isolated vertices never matter.
    """
    family = classify_family(p, r)
    if g.edge_count != comb(p, 2) + r:
        return False
    order = support(g).vertex_count
    if family.regime in (COMPLETE, SUPSET_OF_KP):
        return clique_number(g) >= p
    if family.regime in (ORDER_P_PLUS_1, K_P_PLUS_1):
        return order == p + 1
    return order == p + 1 or clique_number(g) >= p


def _triple(k, N):
    p = 1
    while k * comb(p + 1, 2) <= N:
        p += 1
    q, r = divmod(N - k * comb(p, 2), p)
    return ParamTriple(p, q, r)


def param_triple(k, N):
    """The unique (p, q, r) with N = k*C(p,2) + q*p + r, 0 <= q < k, 0 <= r < p."""
    _int('k', k, 1)
    _int('N', N, k)
    return _triple(k, N)


def _list_value(k, N):
    p, q, r = _triple(k, N)
    low = Fraction(k * p - k + q)
    if 2 * r < p - 1:
        return low
    high = low + 1 - Fraction(2 * (p - r), p + 1)
    if 2 * r == p - 1:
        assert high == low, 'branches of M^L disagree at k={0}, N={1}'.format(k, N)
    return high


def m_list(k, N):
    """M^L(k,N), the maximum Mad-sum of k graphs with N edges in total."""
    _int('k', k, 1)
    _int('N', N, k)
    return _list_value(k, N)


def m_list_extremal_multiset(k, N):
    p, q, r = param_triple(k, N)
    if r == 0:
        counted = [(q, builders.complete(p + 1)), (k - q, builders.complete(p))]
    else:
        counted = [(q, builders.complete(p + 1)), (k - q - 1, builders.complete(p)), (1, representative(p, r))]
    return GraphList.from_counts(counted)


def m_upper_bound(k, n):
    """M(k,n) <= M^L(k, C(n,2)), with equality on the Type 1/2 grid."""
    _int('n', n, 3)
    if not 2 <= k <= comb(n, 2):
        raise DomainError('need 2 <= k <= C(n,2) = {0}, got k={1!r}'.format(comb(n, 2), k))
    return m_list(k, comb(n, 2))


def m_two(n):
    """M(2,n): (5n^2-6n+1)/4n for odd n, (5n^2-6n)/4n for even n."""
    _int('n', n, 3)
    if n % 2:
        return Fraction(5 * n * n - 6 * n + 1, 4 * n)
    return Fraction(5 * n * n - 6 * n, 4 * n)


def m_upper_range(n, t):
    """M(C(n,2)-t, n) and its extremal multiset for 0 <= t <= (n-1)^2/3."""
    _int('n', n, 3)
    _int('t', t, 0)
    if 3 * t > (n - 1) ** 2:
        raise DomainError('t={0} exceeds (n-1)^2/3 for n={1}'.format(t, n))
    total = comb(n, 2)
    if t % 2 == 0:
        value = Fraction(total) - Fraction(t, 2)
        counted = [(t // 2, builders.complete(3)), (total - 3 * t // 2, builders.complete(2))]
    else:
        value = Fraction(total) - Fraction(t + 1, 2) + Fraction(1, 3)
        counted = [((t - 1) // 2, builders.complete(3)),
                   (total - 2 - 3 * (t - 1) // 2, builders.complete(2)),
                   (1, builders.path(3))]
    return value, GraphList.from_counts(counted)


class SqrtBounds(namedtuple('SqrtBounds', ['k', 'n', 'N', 'relaxation', 'cap_list', 'cap_kn'])):
    """
    Square-root bounds for M(k,n) / M^L(k,N). Intervals are certified
    enclosures; the predicates decide the inequalities exactly.
    """

    def below_caps(self, value):
        ok = lt_sqrt(value, 2 * self.k * self.N)
        if self.n is not None:
            ok = ok and lt_sqrt(value, self.k * self.n * self.n)
        return ok

    def within_relaxation(self, value):
        if self.n is None:
            raise DomainError('the relaxation bound needs n')
        radicand = self.k * self.k + 4 * self.k * self.n * self.n - 4 * self.k * self.n
        return le_sqrt(2 * Fraction(value) + self.k, radicand)


def sqrt_upper_bounds(k, n=None, N=None):
    _int('k', k, 1)
    if n is None and N is None:
        raise DomainError('sqrt_upper_bounds needs n or N')
    if n is not None:
        _int('n', n, 1)
        N = comb(n, 2) if N is None else N
    _int('N', N, 0)
    relaxation = cap_kn = None
    if n is not None:
        radicand = k * k + 4 * k * n * n - 4 * k * n
        relaxation = (SqrtInterval(radicand) - k) / 2
        cap_kn = SqrtInterval(k * n * n)
    return SqrtBounds(k, n, N, relaxation, SqrtInterval(2 * k * N), cap_kn)


def gm_relaxation_bound(m):
    """y - 1 where y(y-1)/2 = m, as a certified interval."""
    _int('m', m, 1)
    return (SqrtInterval(8 * m + 1) - 1) / 2


def g_within_relaxation(m):
    return le_sqrt(2 * g_max_mad(m) + 1, 8 * m + 1)


def pbd_value(p, k, large_blocks):
    """Mad-sum of a {p, p+1}-design decomposition with ``large_blocks`` blocks of size p+1."""
    return Fraction((p - 1) * k + large_blocks)


def monotone_lower_bounds(k, n, value):
    """Bounds implied by adding a vertex or splitting off an edge."""
    value = Fraction(value)
    return {(k, n + 1): value + 1, (k + 1, n): value + Fraction(1, 3)}


def _plane_bounds(k, n):
    out = []
    for q in PLANE_ORDERS:
        v = q * q + q + 1
        cases = (
            ('plane-i', v, v, Fraction(q * v)),
            ('plane-ii', q * q, q * q + q, Fraction((q - 1) * (q * q + q))),
            ('plane-iii', q * q + q, v, Fraction(q ** 3 + q * q - 1)),
            ('plane-iv', q * q - 1, q * q + q, Fraction(q ** 3 - 2 * q - 1)),
            ('plane-v', q * q - q, q * q + q - 1, Fraction(q ** 3 - q * q - 2 * q + 1)),
        )
        for tag, nn, kk, value in cases:
            if (nn, kk) == (n, k) and n >= 3 and k <= comb(n, 2):
                out.append(LowerBound(value, tag, 'q={0}'.format(q)))
    return out


def _blow_up_bounds(k, n):
    out = []
    for v in range(3, n + 1):
        if n % v or v % 6 not in (1, 3) or v * (v - 1) // 6 != k:
            continue
        out.append(LowerBound(Fraction(v, 3) * (n - 1), 'blow-steiner', 'v={0}'.format(v)))
    for q in PLANE_ORDERS:
        v = q * q + q + 1
        if k == v and n % v == 0:
            out.append(LowerBound((q + Fraction(1, q + 1)) * (n - 1), 'blow-plane-i', 'q={0}'.format(q)))
        if k == q * q + q and n % (q * q) == 0:
            out.append(LowerBound(Fraction(q * n - q), 'blow-plane-ii', 'q={0}'.format(q)))
    for q in sorted(DIFFERENCE_SETS):
        v = q * q + q + 1
        r = k - v
        if 1 <= r <= v and n % v == 0:
            value = (q + Fraction(1, q + 1)) * n + Fraction(r * q * n, (q + 1) * v) - (q + r)
            out.append(LowerBound(value, 'plane-plus-r', 'q={0}, r={1}'.format(q, r)))
    return out


def _small_k_bounds(k, n):
    if k not in (3, 4, 5, 6):
        return []
    from .decomp.constructions import construct_small_k, small_k_feasible
    from .decomp.decomposition import validate
    out = []
    for variant in ('A', 'B'):
        if small_k_feasible(k, n, variant):
            total = validate(construct_small_k(k, n, variant)).total
            out.append(LowerBound(total, 'small-k-' + variant, 'construction'))
    return out


@memoize(maxsize=LOWER_BOUND_CACHE_SIZE)
def lower_bound_catalog(k, n):
    """Every applicable lower bound on M(k,n), each tagged with its source."""
    _int('k', k, 1)
    _int('n', n, 2)
    if k > comb(n, 2):
        raise DomainError('k={0} exceeds C(n,2)={1}'.format(k, comb(n, 2)))
    out = []
    if k == 1:
        out.append(LowerBound(Fraction(n - 1), 'single', 'K_n'))
    if k == 2 and n >= 3:
        out.append(LowerBound(m_two(n), 'k2', 'exact'))
    out.extend(_plane_bounds(k, n))
    if n >= 3 and n % 6 in (1, 3) and k == n * (n - 1) // 6:
        out.append(LowerBound(Fraction(2 * k), 'steiner-triples', 'exact'))
    t = comb(n, 2) - k
    if n >= 3 and 3 * t <= (n - 1) ** 2:
        out.append(LowerBound(m_upper_range(n, t)[0], 'psts', 't={0}'.format(t)))
    for s in range(2, n + 1):
        if comb(s + 1, 2) == k and n % s == 0:
            out.append(LowerBound(Fraction((s + 1) * n, 2) - s, 'triangular', 't={0}'.format(s)))
    out.extend(_blow_up_bounds(k, n))
    out.extend(_small_k_bounds(k, n))
    for b in range(2, n):
        a = k - b
        if n % b or n // b < 2 or not 1 <= a <= comb(b, 2):
            continue
        inner = lower_bound_table(a, b)
        if inner.value is None:
            continue
        t = n // b
        out.append(LowerBound(t * (inner.value + b) - b, 'recursive',
                              'a={0}, b={1}, t={2} via {3}'.format(a, b, t, inner.tag)))
    return tuple(out)


def lower_bound_table(k, n):
    """Best catalog bound; ``LowerBound(None, 'none', ...)`` when nothing applies."""
    best = None
    for bound in lower_bound_catalog(k, n):
        if best is None or bound.value > best.value:
            best = bound
    if best is None:
        return LowerBound(None, 'none', 'no catalog entry applies to k={0}, n={1}'.format(k, n))
    return best


def proportional_plan(ratio, n=None):
    """Mix of K_p and K_(p+1) parts with average edge count ``ratio``."""
    ratio = Fraction(ratio)
    if ratio < 3:
        raise DomainError('ratio must be >= 3, got {0}'.format(ratio))
    p = 3
    while comb(p + 1, 2) <= ratio:
        p += 1
    x = Fraction(p + 1, 2) - ratio / p
    if n is None:
        return ProportionalPlan(ratio, p, x, None, None, None, None, None, None)
    _int('n', n, 3)
    k = comb(n, 2) / ratio
    feasible = k.denominator == 1 and (x * k).denominator == 1
    if not feasible:
        return ProportionalPlan(ratio, p, x, n, k, None, None, False, None)
    k = int(k)
    count_p = int(x * k)
    count_p1 = k - count_p
    value = Fraction(count_p * (p - 1) + count_p1 * p)
    return ProportionalPlan(ratio, p, x, n, k, count_p, count_p1, True, value)
