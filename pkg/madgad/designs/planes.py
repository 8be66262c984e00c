"""Projective and affine planes, their truncations and cyclic presentations."""
import logging
from collections import Counter, namedtuple
from itertools import product

from ..consts import DIFFERENCE_SETS, PLANE_ORDERS, PRIME_PLANE_ORDERS
from ..errors import DomainError, ValidationError
from .design import AG, DIFFERENCE_SET, PG, TRUNCATED, BlockDesign

log = logging.getLogger(__name__)

DELETE_POINT = 'DELETE_POINT'
DELETE_LINE = 'DELETE_LINE'


class CyclicPlane(namedtuple('CyclicPlane', ['design', 'difference_set', 'lines'])):
    """
    PG(2,q) on residues mod q^2+q+1 with ``lines[i] = difference_set + i``.

    Point ``i`` lies on line ``i`` and ``x -> x+1`` maps line ``i`` onto
    line ``i+1``.
    """

    @property
    def modulus(self):
        return self.design.point_count

    def check_rotation(self):
        v = self.modulus
        for i, line in enumerate(self.lines):
            if i not in line:
                raise ValidationError('point {0} is not on line {0}'.format(i), kind='design')
            shifted = tuple(sorted((x + 1) % v for x in line))
            if shifted != self.lines[(i + 1) % v]:
                raise ValidationError('rotation does not map line {0} to line {1}'.format(i, (i + 1) % v),
                                      kind='design')
        return True


def _check_order(q, supported):
    if q not in supported:
        raise DomainError('plane order {0!r} is not supported; available orders: {1}'.format(
            q, ', '.join(str(x) for x in supported)))


def is_perfect_difference_set(d, v):
    """Every non-zero residue mod ``v`` is a difference of two members exactly once."""
    d = [x % v for x in d]
    if len(set(d)) != len(d):
        return False
    counts = Counter((a - b) % v for a in d for b in d if a != b)
    return len(counts) == v - 1 and all(c == 1 for c in counts.values())


def _normalized_vectors(q):
    vectors = [(0, 0, 1)]
    vectors.extend((0, 1, z) for z in range(q))
    vectors.extend((1, y, z) for y, z in product(range(q), repeat=2))
    return vectors


def _coordinate_plane(q):
    points = _normalized_vectors(q)
    blocks = []
    for a, b, c in points:
        blocks.append([i for i, (x, y, z) in enumerate(points) if (a * x + b * y + c * z) % q == 0])
    return BlockDesign(len(points), blocks, PG, params={'plane': 'PG', 'q': q})


def cyclic_plane_difference_set(q):
    """PG(2,q) developed from a perfect difference set."""
    _check_order(q, tuple(sorted(DIFFERENCE_SETS)))
    v = q * q + q + 1
    base = DIFFERENCE_SETS[q]
    if not is_perfect_difference_set(base, v):
        raise ValidationError('tabulated set for q={0} is not a perfect difference set mod {1}'.format(q, v),
                              kind='design')
    shifted = tuple(sorted((x - base[0]) % v for x in base))
    lines = tuple(tuple(sorted((x + i) % v for x in shifted)) for i in range(v))
    design = BlockDesign(v, lines, DIFFERENCE_SET, params={'plane': 'PG', 'q': q})
    design.validate()
    plane = CyclicPlane(design, shifted, lines)
    plane.check_rotation()
    return plane


def projective_plane(q):
    """PG(2,q): coordinates over Z_q for prime q, a difference set otherwise."""
    _check_order(q, PLANE_ORDERS)
    if q in PRIME_PLANE_ORDERS:
        design = _coordinate_plane(q)
    else:
        design = cyclic_plane_difference_set(q).design
    design.validate()
    return design


def affine_plane(q):
    """AG(2,q) on points ``x*q + y``; for prime powers, PG(2,q) minus a line."""
    _check_order(q, PLANE_ORDERS)
    if q in PRIME_PLANE_ORDERS:
        blocks = [[x * q + (m * x + b) % q for x in range(q)] for m in range(q) for b in range(q)]
        blocks.extend([c * q + y for y in range(q)] for c in range(q))
        design = BlockDesign(q * q, blocks, AG, params={'plane': 'AG', 'q': q})
    else:
        pg = projective_plane(q)
        removed = set(pg.blocks[0])
        relabel = {}
        for x in range(pg.point_count):
            if x not in removed:
                relabel[x] = len(relabel)
        blocks = [[relabel[x] for x in b if x in relabel] for b in pg.blocks[1:]]
        design = BlockDesign(q * q, blocks, AG, params={'plane': 'AG', 'q': q})
    design.validate()
    return design


def truncate_plane(design, mode, target=0):
    """
    DELETE_POINT removes point ``target`` from every line through it.
    DELETE_LINE (affine planes only) removes line ``target`` and its points.
    """
    plane = design.params.get('plane')
    if plane not in ('PG', 'AG'):
        raise DomainError('truncation needs a projective or affine plane, got {0!r}'.format(design))
    params = dict(design.params, mode=mode, target=target)
    if mode == DELETE_POINT:
        if not 0 <= target < design.point_count:
            raise DomainError('point {0} not in the plane'.format(target))
        relabel = {x: x if x < target else x - 1 for x in range(design.point_count) if x != target}
        blocks = [[relabel[x] for x in b if x != target] for b in design.blocks]
    elif mode == DELETE_LINE:
        if plane != 'AG':
            raise DomainError('DELETE_LINE applies to affine planes only')
        if not 0 <= target < design.block_count:
            raise DomainError('line {0} not in the plane'.format(target))
        removed = set(design.blocks[target])
        relabel = {}
        for x in range(design.point_count):
            if x not in removed:
                relabel[x] = len(relabel)
        blocks = [[relabel[x] for x in b if x in relabel]
                  for i, b in enumerate(design.blocks) if i != target]
    else:
        raise DomainError('unknown truncation mode {0!r}'.format(mode))
    out = BlockDesign(len(relabel), blocks, TRUNCATED, params=params)
    out.validate()
    log.debug('truncated %s(2,%s) by %s: census %s', plane, design.params.get('q'), mode,
              dict(out.block_size_census()))
    return out
