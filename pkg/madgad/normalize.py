"""
Rewriting a list of graphs into the representative of (k, N).

Every graph is first replaced by the representative G_{p,r} with the same
number of edges; from then on only the descriptors ``(p, r)`` matter
(``0 <= r < p``; ``(p, 0)`` is K_p and an edgeless graph is ``(1, 0)``).
Edges may be parked in a pool of spare edges ``s``. The rules below are
tried in order and the first one that applies is executed, after which the
search starts again from the top:

  3a  a type C item gives its r free edges to the pool
  3b  two type B items trade edges; a lone B item takes edges from a
      clique at least two orders larger
  3c  clique orders are balanced to a spread of one; a B item sitting
      above the smallest clique gives up a row to it
  3d  the pool fills the B item, then grows the smallest cliques
  3e  a remainder smaller than every clique becomes one G_{p,s}

The triple (Mad-sum, s, -|B|) increases lexicographically at every step and
takes finitely many values, so the procedure halts.
"""
import logging
from collections import namedtuple
from fractions import Fraction
from math import comb

from .core.rational import to_str
from .errors import DomainError, ValidationError
from .formulas import _triple, representative_mad, split_edges
from .mad import mad_value

log = logging.getLogger(__name__)

TYPE_A = 'A'
TYPE_B = 'B'
TYPE_C = 'C'

StepRecord = namedtuple('StepRecord', ['rule', 'indices', 'before', 'after', 'spare', 'mad_sum'])


def descriptor(p, r):
    """Canonical ``(p, r)``; ``(p, p)`` is the clique K_(p+1)."""
    if r == p:
        return (p + 1, 0)
    if not 0 <= r < p:
        raise DomainError('descriptor needs 0 <= r <= p, got ({0}, {1})'.format(p, r))
    return (p, r)


def item_edges(item):
    p, r = item
    return comb(p, 2) + r


def item_mad(item):
    return representative_mad(*item)


def item_type(item):
    """A for cliques, B when 2r >= p-1 (ties included), C otherwise."""
    p, r = item
    if r == 0:
        return TYPE_A
    return TYPE_B if 2 * r >= p - 1 else TYPE_C


def from_edge_count(m):
    if m == 0:
        return (1, 0)
    return split_edges(m)


class NormalizationState(object):
    """Descriptors, the spare-edge pool and the log of applied rewrites."""

    def __init__(self, items, spare=0, steps=(), initial_mad_sum=None):
        self.items = [descriptor(*i) for i in items]
        self.spare = spare
        self.steps = list(steps)
        self.initial_mad_sum = self.mad_sum() if initial_mad_sum is None else Fraction(initial_mad_sum)

    @property
    def k(self):
        return len(self.items)

    @property
    def edge_total(self):
        """Edges in the items plus the spare pool."""
        return sum(item_edges(i) for i in self.items) + self.spare

    def mad_sum(self):
        return sum((item_mad(i) for i in self.items), Fraction(0))

    def indices_of(self, kind):
        return [i for i, item in enumerate(self.items) if item_type(item) == kind]

    def multiset(self):
        return sorted(self.items)

    def apply(self, rule, changes, spare_delta=0):
        """Replace items (``{index: new}``), move the pool, and log the step."""
        indices = tuple(sorted(changes))
        before = tuple(self.items[i] for i in indices)
        for i, new in changes.items():
            self.items[i] = descriptor(*new)
        self.spare += spare_delta
        after = tuple(self.items[i] for i in indices)
        record = StepRecord(rule, indices, before, after, self.spare, self.mad_sum())
        log.debug('rule %s on %s: %s -> %s, s=%d, sum=%s', rule, indices, before, after,
                  record.spare, record.mad_sum)
        self.steps.append(record)
        return record

    def to_json(self):
        return {
            'k': self.k,
            'N': self.edge_total,
            'initial_mad_sum': to_str(self.initial_mad_sum),
            'steps': [{
                'rule': s.rule,
                'indices': list(s.indices),
                'before': [list(d) for d in s.before],
                'after': [list(d) for d in s.after],
                'spare': s.spare,
                'mad_sum': to_str(s.mad_sum),
            } for s in self.steps],
            'terminal': [list(d) for d in self.multiset()],
            'mad_sum': to_str(self.mad_sum()),
        }

    def __repr__(self):
        return '<NormalizationState k={0} s={1} steps={2}>'.format(self.k, self.spare, len(self.steps))


def to_representative_list(graphs):
    """Replace each graph by the representative with the same edge count."""
    graphs = list(graphs)
    if not graphs:
        raise DomainError('cannot normalize an empty list')
    original = [mad_value(g) if g.vertex_count else Fraction(0) for g in graphs]
    items = [from_edge_count(g.edge_count) for g in graphs]
    state = NormalizationState(items, initial_mad_sum=sum(original, Fraction(0)))
    # slots not yet replaced still count with their original Mad
    current = list(original)
    for i, (g, item) in enumerate(zip(graphs, items)):
        current[i] = item_mad(item)
        mad_sum = sum(current, Fraction(0))
        record = StepRecord('1', (i,), (), (item,), 0, mad_sum)
        log.debug('rule 1 on %d: %d edges -> %s, sum=%s', i, g.edge_count, item, mad_sum)
        state.steps.append(record)
    return state


def _by_key(state, indices):
    return sorted(indices, key=lambda i: (state.items[i], i))


def _cliques(state):
    return state.indices_of(TYPE_A)


def _rule_3a(state):
    found = _by_key(state, state.indices_of(TYPE_C))
    if not found:
        return None
    i = found[0]
    p, r = state.items[i]
    return state.apply('3a', {i: (p, 0)}, spare_delta=r)


def _transfer(state, rule, donor, receiver, donor_item, receiver_item):
    """Move min(r_donor, p_recv - r_recv) edges between two G_{p,r} descriptors."""
    pi, ri = donor_item
    pj, rj = receiver_item
    moved = min(ri, pj - rj)
    return state.apply(rule, {donor: (pi, ri - moved), receiver: (pj, rj + moved)})


def _rule_3b(state):
    bs = _by_key(state, state.indices_of(TYPE_B))
    if len(bs) >= 2:
        low, high = bs[0], bs[1]
        if state.items[low][0] < state.items[high][0]:
            donor, receiver = high, low
        else:
            donor, receiver = low, high
        return _transfer(state, '3b', donor, receiver, state.items[donor], state.items[receiver])
    if len(bs) == 1:
        j = bs[0]
        pj = state.items[j][0]
        donors = [i for i in _cliques(state) if state.items[i][0] >= pj + 2]
        if donors:
            i = max(donors, key=lambda x: (state.items[x][0], -x))
            order = state.items[i][0]
            # K_P seen as G_{P-1,P-1}
            return _transfer(state, '3b', i, j, (order - 1, order - 1), state.items[j])
    return None


def _rule_3c(state):
    cliques = _cliques(state)
    if not cliques:
        return None
    smallest = min(cliques, key=lambda x: (state.items[x][0], x))
    largest = max(cliques, key=lambda x: (state.items[x][0], -x))
    low, high = state.items[smallest][0], state.items[largest][0]
    if high - low >= 2:
        return state.apply('3c', {largest: (high - 1, 0), smallest: (low + 1, 0)}, spare_delta=high - low - 1)
    bs = state.indices_of(TYPE_B)
    if bs:
        j = bs[0]
        p, r = state.items[j]
        if p > low:
            return state.apply('3c', {smallest: (low + 1, 0), j: (p - 1, r)}, spare_delta=p - 1 - low)
    return None


def _rule_3d(state):
    if state.spare == 0:
        return None
    bs = state.indices_of(TYPE_B)
    if bs:
        j = bs[0]
        p, r = state.items[j]
        filled = min(state.spare, p - r)
        return state.apply('3d', {j: (p, r + filled)}, spare_delta=-filled)
    cliques = _cliques(state)
    smallest = min(cliques, key=lambda x: (state.items[x][0], x))
    order = state.items[smallest][0]
    if state.spare >= order:
        return state.apply('3d', {smallest: (order + 1, 0)}, spare_delta=-order)
    return None


def _rule_3e(state):
    if state.spare == 0 or state.indices_of(TYPE_B):
        return None
    cliques = _cliques(state)
    smallest = min(cliques, key=lambda x: (state.items[x][0], x))
    order = state.items[smallest][0]
    return state.apply('3e', {smallest: (order, state.spare)}, spare_delta=-state.spare)


RULES = (_rule_3a, _rule_3b, _rule_3c, _rule_3d)


def terminal_descriptors(k, N):
    """The sorted descriptors of the representative of (k, N)."""
    if not isinstance(k, int) or k < 1 or not isinstance(N, int) or N < 0:
        raise DomainError('need k >= 1 and N >= 0, got k={0!r}, N={1!r}'.format(k, N))
    p, q, r = _triple(k, N)
    if r == 0:
        items = [(p + 1, 0)] * q + [(p, 0)] * (k - q)
    else:
        items = [(p + 1, 0)] * q + [(p, 0)] * (k - q - 1) + [(p, r)]
    return sorted(items)


def _check_step(state, record, previous_sum, total):
    if state.edge_total != total:
        raise ValidationError('rule {0} changed s + sum e(H_i) from {1} to {2}'.format(
            record.rule, total, state.edge_total), kind='normalize')
    if record.mad_sum < previous_sum:
        raise ValidationError('rule {0} decreased the Mad-sum from {1} to {2}'.format(
            record.rule, previous_sum, record.mad_sum), kind='normalize')


def run(state):
    """Apply the rewriting rules to ``state`` until it is terminal."""
    total = state.edge_total
    limit = 4 * (state.k + total) ** 2 + 16
    previous = state.mad_sum()
    for _ in range(limit):
        for rule in RULES:
            record = rule(state)
            if record is not None:
                break
        else:
            record = _rule_3e(state)
            if record is not None:
                _check_step(state, record, previous, total)
            break
        _check_step(state, record, previous, total)
        previous = record.mad_sum
    else:
        raise ValidationError('no terminal state after {0} rewrites'.format(limit), kind='normalize')
    expected = terminal_descriptors(state.k, total)
    if state.multiset() != expected or state.spare != 0:
        raise ValidationError('terminal state {0} (s={1}) differs from {2}'.format(
            state.multiset(), state.spare, expected), kind='normalize')
    log.info('normalized k=%d N=%d in %d steps, Mad-sum %s', state.k, total, len(state.steps), state.mad_sum())
    return state


def normalize(graphs, k=None, N=None):
    """
    Normalize a list of graphs (or the parts of a decomposition). ``k`` and
    ``N``, when given, must agree with the list.
    """
    graphs = list(getattr(graphs, 'parts', graphs))
    edges = sum(g.edge_count for g in graphs)
    if k is not None and k != len(graphs):
        raise DomainError('list has {0} members, k={1}'.format(len(graphs), k))
    if N is not None and N != edges:
        raise DomainError('list has {0} edges, N={1}'.format(edges, N))
    return run(to_representative_list(graphs))


def normalize_edge_counts(counts):
    """Normalize a list given only by edge counts, each taken at Mad g(m)."""
    counts = list(counts)
    if not counts or any(not isinstance(m, int) or m < 0 for m in counts):
        raise DomainError('edge counts must be a non-empty list of integers >= 0')
    return run(NormalizationState([from_edge_count(m) for m in counts]))
