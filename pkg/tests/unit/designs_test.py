import unittest
from math import comb

import networkx as nx

from madgad.consts import DIFFERENCE_SETS, PLANE_ORDERS
from madgad.designs import (
    DELETE_LINE,
    DELETE_POINT,
    BlockDesign,
    affine_plane,
    cyclic_plane_difference_set,
    expected_leave,
    is_perfect_difference_set,
    leave_graph,
    max_partial_triple_system,
    projective_plane,
    steiner_triple_system,
    truncate_plane
)
from madgad.designs.design import BOSE, GREEDY, SKOLEM
from madgad.errors import DomainError, FormatError, ValidationError


class BlockDesignTest(unittest.TestCase):

    def test_blocks_are_sorted(self):
        d = BlockDesign(3, [(2, 0, 1)], GREEDY)
        self.assertEqual(d.blocks, ((0, 1, 2),))
        self.assertTrue(d.validate())

    def test_repeated_pair(self):
        d = BlockDesign(4, [(0, 1, 2), (1, 2, 3)], GREEDY, complete=False)
        with self.assertRaises(ValidationError) as ctx:
            d.validate()
        self.assertEqual(ctx.exception.pairs, [(1, 2)])
        self.assertEqual(ctx.exception.kind, 'design')

    def test_missing_pair(self):
        d = BlockDesign(4, [(0, 1, 2)], GREEDY)
        with self.assertRaises(ValidationError) as ctx:
            d.validate()
        self.assertEqual(ctx.exception.pairs, [(0, 3), (1, 3), (2, 3)])
        d.complete = False
        self.assertTrue(d.validate())
        self.assertEqual(leave_graph(d).edges, ((0, 3), (1, 3), (2, 3)))

    def test_unknown_tag(self):
        with self.assertRaises(DomainError):
            BlockDesign(3, [(0, 1, 2)], 'MAGIC')

    def test_json(self):
        fano = projective_plane(2)
        self.assertEqual(BlockDesign.from_json(fano.to_json()), fano)
        with self.assertRaises(FormatError):
            BlockDesign.from_json({'blocks': []})
        with self.assertRaises(ValidationError):
            BlockDesign.from_json({'points': 3, 'blocks': [[0, 1], [0, 1, 2]]})


class TripleSystemTest(unittest.TestCase):

    def test_steiner(self):
        for n in (3, 7, 9, 13, 15, 19, 21, 25, 27):
            d = steiner_triple_system(n)
            self.assertEqual(d.block_count, n * (n - 1) // 6)
            self.assertEqual(set(d.block_size_census()), {3})
            self.assertEqual(d.meta, BOSE if n % 6 == 3 else SKOLEM)

    def test_inadmissible_orders(self):
        for n in (1, 4, 5, 6, 11):
            with self.assertRaises(DomainError):
                steiner_triple_system(n)

    def test_packings(self):
        for n in range(3, 24):
            design, leave = max_partial_triple_system(n, seed=n)
            self.assertTrue(nx.is_isomorphic(leave.to_networkx(), expected_leave(n).to_networkx()), n)
            self.assertEqual(3 * design.block_count + leave.edge_count, comb(n, 2))

    def test_five_leaves_a_four_cycle(self):
        design, leave = max_partial_triple_system(5)
        self.assertEqual(design.block_count, 2)
        self.assertEqual(leave.edge_count, 4)
        self.assertEqual(set(leave.degrees), {0, 2})

    def test_packing_is_seeded(self):
        self.assertEqual(max_partial_triple_system(11, seed=3)[0], max_partial_triple_system(11, seed=3)[0])

    def test_leave_table(self):
        self.assertEqual(expected_leave(9).edge_count, 0)
        self.assertEqual(expected_leave(8).edge_count, 4)
        self.assertEqual(sorted(expected_leave(10).degrees, reverse=True)[:2], [3, 1])
        with self.assertRaises(DomainError):
            expected_leave(2)


class PlaneTest(unittest.TestCase):

    def test_projective(self):
        for q in PLANE_ORDERS:
            d = projective_plane(q)
            v = q * q + q + 1
            self.assertEqual(d.point_count, v)
            self.assertEqual(d.block_count, v)
            self.assertEqual(dict(d.block_size_census()), {q + 1: v})

    def test_affine(self):
        for q in (2, 3, 4, 5, 8, 9):
            d = affine_plane(q)
            self.assertEqual(d.point_count, q * q)
            self.assertEqual(dict(d.block_size_census()), {q: q * q + q})

    def test_unsupported_order(self):
        for q in (1, 6, 10, 16):
            with self.assertRaises(DomainError):
                projective_plane(q)

    def test_difference_sets(self):
        self.assertTrue(is_perfect_difference_set((0, 1, 3), 7))
        self.assertFalse(is_perfect_difference_set((0, 1, 2), 7))
        for q in DIFFERENCE_SETS:
            plane = cyclic_plane_difference_set(q)
            self.assertEqual(plane.modulus, q * q + q + 1)
            self.assertIn(0, plane.difference_set)
            self.assertTrue(plane.check_rotation())
            for i, line in enumerate(plane.lines):
                self.assertIn(i, line)

    def test_truncations(self):
        pg3, ag3 = projective_plane(3), affine_plane(3)
        minus_point = truncate_plane(pg3, DELETE_POINT)
        self.assertEqual(minus_point.point_count, 12)
        self.assertEqual(dict(minus_point.block_size_census()), {3: 4, 4: 9})
        self.assertEqual(dict(truncate_plane(ag3, DELETE_POINT, 4).block_size_census()), {2: 4, 3: 8})
        minus_line = truncate_plane(ag3, DELETE_LINE)
        self.assertEqual(minus_line.point_count, 6)
        self.assertEqual(dict(minus_line.block_size_census()), {2: 9, 3: 2})

    def test_bad_truncations(self):
        with self.assertRaises(DomainError):
            truncate_plane(projective_plane(2), DELETE_LINE)
        with self.assertRaises(DomainError):
            truncate_plane(projective_plane(2), 'DELETE_BOTH')
        with self.assertRaises(DomainError):
            truncate_plane(projective_plane(2), DELETE_POINT, 7)
        with self.assertRaises(DomainError):
            truncate_plane(steiner_triple_system(9), DELETE_POINT)
