"""Block designs over points ``0..v-1`` and their pair-coverage validator."""
import logging
from collections import Counter

from ..core.graph import Graph, vertex_set
from ..errors import DomainError, FormatError, create_validation_error
from ..utils.utils import pairs_of

log = logging.getLogger(__name__)

BOSE = 'BOSE'
SKOLEM = 'SKOLEM'
PG = 'PG'
AG = 'AG'
TRUNCATED = 'TRUNCATED'
DIFFERENCE_SET = 'DIFFERENCE_SET'
GREEDY = 'GREEDY'
META_TAGS = (BOSE, SKOLEM, PG, AG, TRUNCATED, DIFFERENCE_SET, GREEDY)


class BlockDesign(object):
    """
    A set system on ``point_count`` points.

    ``complete`` designs cover every pair of points exactly once; partial
    ones cover each pair at most once. Blocks are kept sorted, and the block
    list itself in lexicographic order, so equal designs compare equal.
    """

    def __init__(self, point_count, blocks, meta, complete=True, params=None):
        if meta not in META_TAGS:
            raise DomainError('unknown design tag {0!r}'.format(meta))
        if not isinstance(point_count, int) or point_count < 0:
            raise DomainError('point_count must be a non-negative integer, got {0!r}'.format(point_count))
        self.point_count = point_count
        self.blocks = tuple(sorted(vertex_set(b, point_count) for b in blocks))
        self.meta = meta
        self.complete = complete
        self.params = dict(params or {})

    @property
    def block_count(self):
        return len(self.blocks)

    def pair_index(self):
        """How many blocks contain each covered pair."""
        return Counter(p for b in self.blocks for p in pairs_of(b))

    def block_size_census(self):
        return Counter(len(b) for b in self.blocks)

    def validate(self):
        index = self.pair_index()
        repeated = [p for p, c in index.items() if c > 1]
        if repeated:
            raise create_validation_error('design', 'pairs in more than one block', repeated)
        if self.complete:
            missing = [p for p in pairs_of(range(self.point_count)) if p not in index]
            if missing:
                raise create_validation_error('design', 'pairs in no block', missing)
        log.debug('%s design on %d points with %d blocks validated', self.meta, self.point_count, self.block_count)
        return True

    def to_json(self):
        return {
            'points': self.point_count,
            'blocks': [list(b) for b in self.blocks],
            'meta': self.meta,
            'complete': self.complete,
            'params': self.params,
        }

    @classmethod
    def from_json(cls, obj):
        try:
            design = cls(int(obj['points']), [tuple(b) for b in obj['blocks']],
                         obj.get('meta', GREEDY), complete=bool(obj.get('complete', False)),
                         params=obj.get('params'))
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError('malformed design document: {0}'.format(e))
        design.validate()
        return design

    def __eq__(self, other):
        return isinstance(other, BlockDesign) and (self.point_count, self.blocks) == (other.point_count, other.blocks)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.point_count, self.blocks))

    def __repr__(self):
        census = ','.join('{0}x{1}'.format(c, s) for s, c in sorted(self.block_size_census().items()))
        return '<BlockDesign {0} v={1} blocks={2}>'.format(self.meta, self.point_count, census)


def leave_graph(design):
    """The edges of K_v covered by no block."""
    covered = design.pair_index()
    return Graph(design.point_count, (p for p in pairs_of(range(design.point_count)) if p not in covered))
