from collections import Counter

from ..errors import DomainError
from .graph import Graph
from .shapes import shape_name


class GraphList(object):
    """An ordered multiset of graphs (repetition allowed)."""

    def __init__(self, graphs=()):
        graphs = tuple(graphs)
        for g in graphs:
            if not isinstance(g, Graph):
                raise DomainError('GraphList members must be Graph instances, got {0!r}'.format(g))
        self._graphs = graphs

    @classmethod
    def from_counts(cls, counted):
        """Build from ``[(count, graph), ...]``; zero counts are skipped."""
        graphs = []
        for count, g in counted:
            if count < 0:
                raise DomainError('negative multiplicity {0}'.format(count))
            graphs.extend([g] * count)
        return cls(graphs)

    @property
    def edge_total(self):
        return sum(g.edge_count for g in self._graphs)

    def census(self):
        return Counter(shape_name(g) for g in self._graphs)

    def __len__(self):
        return len(self._graphs)

    def __iter__(self):
        return iter(self._graphs)

    def __getitem__(self, i):
        return self._graphs[i]

    def __eq__(self, other):
        return isinstance(other, GraphList) and self._graphs == other._graphs

    def __hash__(self):
        return hash(self._graphs)

    def __repr__(self):
        census = ', '.join('{0}*{1}'.format(c, name) for name, c in sorted(self.census().items()))
        return '<GraphList k={0} N={1} {{{2}}}>'.format(len(self), self.edge_total, census)
