"""Edge decompositions and packings of K_n, their validator and Mad-sum report."""
import logging
from collections import namedtuple
from fractions import Fraction
from math import comb
from multiprocessing.pool import ThreadPool

from .. import envs
from ..consts import DECOMPOSITION
from ..consts import DECOMPOSITION_MODES
from ..core.graphlist import GraphList
from ..core.rational import lt_sqrt, to_str
from ..core.serialize import graph_from_json, graph_to_json
from ..errors import DomainError, FormatError, ValidationError, create_validation_error
from ..formulas import m_list, pbd_value
from ..mad import mad
from ..utils.utils import pairs_of

log = logging.getLogger(__name__)


class Decomposition(object):
    """
    ``k`` spanning subgraphs of K_n with pairwise disjoint edge sets.

    In DECOMPOSITION mode the parts cover every edge of K_n; in PACKING mode
    some edges may be left over. ``tag`` names the construction that built it.
    """

    def __init__(self, n, parts, mode=DECOMPOSITION, tag=None):
        if not isinstance(n, int) or n < 1:
            raise DomainError('a decomposition needs n >= 1, got {0!r}'.format(n))
        if mode not in DECOMPOSITION_MODES:
            raise DomainError('unknown mode {0!r}'.format(mode))
        normalized = []
        for g in parts:
            if g.vertex_count > n:
                raise DomainError('part {0!r} does not fit in K_{1}'.format(g, n))
            normalized.append(g if g.vertex_count == n else g.with_vertex_count(n))
        self.n = n
        self.parts = tuple(normalized)
        self.mode = mode
        self.tag = tag

    @property
    def k(self):
        return len(self.parts)

    @property
    def edge_total(self):
        return sum(g.edge_count for g in self.parts)

    def as_graph_list(self):
        return GraphList(self.parts)

    def census(self):
        return self.as_graph_list().census()

    def overlaps(self):
        owner = {}
        clashes = []
        for i, g in enumerate(self.parts):
            for e in g.edges:
                if e in owner:
                    clashes.append(e)
                else:
                    owner[e] = i
        return clashes, owner

    def check(self):
        clashes, owner = self.overlaps()
        if clashes:
            raise create_validation_error('overlap', 'edges in more than one part', clashes)
        if self.mode == DECOMPOSITION:
            missing = [e for e in pairs_of(range(self.n)) if e not in owner]
            if missing:
                raise create_validation_error('coverage', 'edges of K_{0} in no part'.format(self.n), missing)
        return True

    def to_json(self):
        body = {'n': self.n, 'mode': self.mode, 'parts': [graph_to_json(g) for g in self.parts]}
        if self.tag:
            body['tag'] = self.tag
        return body

    @classmethod
    def from_json(cls, obj):
        try:
            n = int(obj['n'])
            parts = [graph_from_json(p) for p in obj['parts']]
            return cls(n, parts, obj.get('mode', DECOMPOSITION), obj.get('tag'))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, FormatError):
                raise
            raise FormatError('malformed decomposition document: {0}'.format(e))

    def __eq__(self, other):
        return isinstance(other, Decomposition) and (self.n, self.parts, self.mode) == (
            other.n, other.parts, other.mode)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.parts, self.mode))

    def __repr__(self):
        return '<Decomposition {0} n={1} k={2}{3}>'.format(
            self.mode, self.n, self.k, ' ' + self.tag if self.tag else '')


class MadSumReport(namedtuple('MadSumReport', [
        'n', 'k', 'mode', 'tag', 'certificates', 'total', 'upper_bound', 'below_upper_bound', 'below_sqrt_cap'])):
    """Per-part Mad certificates with the exact total and the global caps it was compared to."""

    def to_json(self):
        return {
            'n': self.n,
            'k': self.k,
            'mode': self.mode,
            'source': self.tag or 'input',
            'parts': [c.to_json() for c in self.certificates],
            'total': to_str(self.total),
            'upper_bound': None if self.upper_bound is None else to_str(self.upper_bound),
            'upper_bound_source': 'm_list',
            'below_upper_bound': self.below_upper_bound,
            'below_sqrt_cap': self.below_sqrt_cap,
        }


def validate(d, workers=None):
    """
    Check ``d`` and certify the Mad of every part.

    With ``workers > 1`` the certificates are computed on a thread pool; the
    report lists them in part order either way. ``workers=None`` follows
    MADGAD_PARALLEL_VALIDATE and MADGAD_WORKERS.
    """
    if workers is None:
        workers = envs.MADGAD_WORKERS if envs.MADGAD_PARALLEL_VALIDATE else 1
    d.check()
    if workers > 1 and d.k > 1:
        pool = ThreadPool(min(workers, d.k))
        try:
            certificates = pool.map(mad, d.parts)
        finally:
            pool.close()
            pool.join()
    else:
        certificates = [mad(g) for g in d.parts]
    total = sum((c.value for c in certificates), Fraction(0))
    edges = comb(d.n, 2)
    upper = m_list(d.k, edges) if d.k <= edges else None
    below_upper = upper is None or total <= upper
    below_sqrt = lt_sqrt(total, d.k * d.n * d.n)
    if not (below_upper and below_sqrt):
        raise ValidationError('total {0} of {1!r} breaks a global cap'.format(total, d), kind='bound')
    log.info('validated %r: total %s', d, total)
    return MadSumReport(d.n, d.k, d.mode, d.tag, tuple(certificates), total, upper, below_upper, below_sqrt)


def is_pbd(d):
    """Whether every part is a clique on its support and block sizes take at most two consecutive values."""
    sizes = set()
    for g in d.parts:
        if g.edge_count == 0:
            return False
        order = len([v for v in g.vertices if g.degrees[v]])
        if g.edge_count != comb(order, 2):
            return False
        sizes.add(order)
    return len(sizes) <= 1 or (len(sizes) == 2 and max(sizes) - min(sizes) == 1)


def pbd_total(d):
    """(p-1)k + b'' for a {p, p+1}-block decomposition with b'' blocks of size p+1."""
    if not is_pbd(d):
        raise DomainError('{0!r} is not a {{p, p+1}}-block decomposition'.format(d))
    orders = [len([v for v in g.vertices if g.degrees[v]]) for g in d.parts]
    p = min(orders)
    return pbd_value(p, d.k, sum(1 for o in orders if o == p + 1))
