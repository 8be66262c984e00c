import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from madgad.core import builders
from madgad.core.graph import Graph
from madgad.decomp import construct_k2
from madgad.errors import DomainError
from madgad.formulas import m_list
from madgad.normalize import (
    TYPE_A,
    TYPE_B,
    TYPE_C,
    descriptor,
    item_type,
    normalize,
    normalize_edge_counts,
    terminal_descriptors
)


class DescriptorTest(unittest.TestCase):

    def test_canonical(self):
        self.assertEqual(descriptor(3, 3), (4, 0))
        self.assertEqual(descriptor(4, 1), (4, 1))
        with self.assertRaises(DomainError):
            descriptor(3, 4)

    def test_types(self):
        self.assertEqual(item_type((5, 0)), TYPE_A)
        self.assertEqual(item_type((5, 1)), TYPE_C)
        self.assertEqual(item_type((5, 2)), TYPE_B)
        self.assertEqual(item_type((3, 1)), TYPE_B)

    def test_terminal(self):
        self.assertEqual(terminal_descriptors(3, 9), [(3, 0)] * 3)
        self.assertEqual(terminal_descriptors(7, 28), [(3, 0)] * 4 + [(3, 1)] + [(4, 0)] * 2)
        self.assertEqual(terminal_descriptors(2, 0), [(1, 0), (1, 0)])


class NormalizeTest(unittest.TestCase):

    def test_counts(self):
        state = normalize_edge_counts([6, 0, 3])
        self.assertEqual(state.multiset(), [(3, 0)] * 3)
        self.assertEqual(state.mad_sum(), 6)
        self.assertEqual(state.spare, 0)

    def test_graphs_keep_their_original_sum(self):
        state = normalize([builders.path(4), builders.star(3)])
        self.assertEqual(state.initial_mad_sum, 3)
        self.assertEqual(state.mad_sum(), m_list(2, 6))
        self.assertEqual([s.rule for s in state.steps][:2], ['1', '1'])

    def test_decomposition(self):
        state = normalize(construct_k2(5), k=2, N=10)
        self.assertEqual(state.mad_sum(), m_list(2, 10))
        with self.assertRaises(DomainError):
            normalize(construct_k2(5), k=3)
        with self.assertRaises(DomainError):
            normalize(construct_k2(5), N=9)

    def test_bad_input(self):
        with self.assertRaises(DomainError):
            normalize([])
        with self.assertRaises(DomainError):
            normalize_edge_counts([])
        with self.assertRaises(DomainError):
            normalize_edge_counts([3, -1])

    def test_trace(self):
        trace = normalize([Graph(4, [(0, 1), (2, 3)]), builders.complete(4)]).to_json()
        self.assertEqual(trace['k'], 2)
        self.assertEqual(trace['N'], 8)
        self.assertEqual(trace['initial_mad_sum'], '4/1')
        self.assertEqual(trace['mad_sum'], '9/2')
        self.assertEqual(trace['terminal'], [[3, 0], [3, 2]])
        sums = [Fraction(*map(int, s['mad_sum'].split('/'))) for s in trace['steps']]
        self.assertEqual(sums, sorted(sums))

    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=40), min_size=1, max_size=8))
    def test_terminal_state(self, counts):
        state = normalize_edge_counts(counts)
        k, N = len(counts), sum(counts)
        self.assertEqual(state.multiset(), terminal_descriptors(k, N))
        self.assertGreaterEqual(state.mad_sum(), state.initial_mad_sum)
        if N >= k:
            self.assertEqual(state.mad_sum(), m_list(k, N))
        previous = None
        for step in state.steps:
            if previous is not None:
                self.assertGreaterEqual(step.mad_sum, previous)
            previous = step.mad_sum
