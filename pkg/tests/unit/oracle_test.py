import time
import unittest
from fractions import Fraction

import networkx as nx

from madgad import envs
from madgad.core import builders
from madgad.core.graph import Graph
from madgad.decomp import Decomposition, construct_from_design, construct_k7_K8, construct_psts_decomposition
from madgad.decomp import validate
from madgad.designs import DELETE_POINT, projective_plane, truncate_plane
from madgad.errors import BudgetExceeded, DomainError
from madgad.formulas import m_list, m_two, representative
from madgad.oracle import (
    OracleBudget,
    check_chain,
    check_pp_theorem,
    chromatic_number,
    degeneracy,
    first_fit_decomposition,
    invariants_small,
    m_kn_colorings,
    m_kn_search,
    m_list_dp,
    mad_bruteforce,
    pp_report
)


class BudgetTest(unittest.TestCase):

    def test_limits_must_be_positive(self):
        with self.assertRaises(DomainError):
            OracleBudget(max_k=0)
        with self.assertRaises(DomainError):
            OracleBudget(max_vertices='7')

    def test_from_env(self):
        budget = OracleBudget.from_env(max_vertices=3, max_k=None)
        self.assertEqual(budget.max_vertices, 3)
        self.assertEqual(budget.max_k, envs.MADGAD_BUDGET_K)

    def test_require(self):
        budget = OracleBudget(max_vertices=5)
        budget.require('max_vertices', 5)
        with self.assertRaises(BudgetExceeded) as ctx:
            budget.require('max_vertices', 6)
        self.assertEqual((ctx.exception.limit, ctx.exception.maximum, ctx.exception.requested),
                         ('max_vertices', 5, 6))

    def test_deadline(self):
        budget = OracleBudget(time_limit=0.001).start()
        time.sleep(0.01)
        with self.assertRaises(BudgetExceeded):
            budget.check_time()
        OracleBudget(time_limit=0).start().check_time()


class BruteForceTest(unittest.TestCase):

    def test_witness(self):
        self.assertEqual(mad_bruteforce(builders.complete(4)).witness, (0, 1, 2, 3))
        cert = mad_bruteforce(representative(3, 1))
        self.assertEqual((cert.value, cert.witness), (2, (0, 1, 2)))
        self.assertEqual(mad_bruteforce(Graph(2)).value, 0)

    def test_refusals(self):
        with self.assertRaises(DomainError):
            mad_bruteforce(Graph(0))
        with self.assertRaises(BudgetExceeded):
            mad_bruteforce(Graph(21))


class ListSearchTest(unittest.TestCase):

    def test_matches_closed_form(self):
        for k in range(1, 7):
            for N in range(k, 41):
                self.assertEqual(m_list_dp(k, N), m_list(k, N), (k, N))

    def test_refusals(self):
        with self.assertRaises(DomainError):
            m_list_dp(3, 2)
        with self.assertRaises(BudgetExceeded):
            m_list_dp(11, 20)
        with self.assertRaises(BudgetExceeded):
            m_list_dp(2, 201)
        self.assertEqual(m_list_dp(2, 300, budget=OracleBudget(max_N=300)), m_list(2, 300))


class SubsetSearchTest(unittest.TestCase):

    def test_two_parts(self):
        for n in range(3, 7):
            self.assertEqual(m_kn_search(2, n).value, m_two(n), n)

    def test_three_parts_of_k4(self):
        result = m_kn_search(3, 4)
        self.assertEqual(result.value, Fraction(13, 3))
        self.assertEqual(len(result.subsets), 3)
        d = first_fit_decomposition(result.subsets, 4)
        self.assertEqual(validate(d).total, result.value)

    def test_single_part(self):
        self.assertEqual(m_kn_search(1, 5).value, 4)

    def test_workers_do_not_change_the_answer(self):
        self.assertEqual(m_kn_search(3, 5, workers=3), m_kn_search(3, 5))

    def test_first_fit_witness_is_a_decomposition(self):
        for k, n in ((2, 5), (3, 5), (4, 5)):
            result = m_kn_search(k, n)
            d = first_fit_decomposition(result.subsets, n)
            self.assertEqual(d.k, k)
            self.assertEqual(validate(d).total, result.value, (k, n))

    def test_refusals(self):
        with self.assertRaises(BudgetExceeded):
            m_kn_search(2, 8)
        with self.assertRaises(BudgetExceeded):
            m_kn_search(5, 4)
        with self.assertRaises(DomainError):
            m_kn_search(2, 1)


class ColoringSearchTest(unittest.TestCase):

    def test_agrees_with_subset_search(self):
        self.assertEqual(m_kn_colorings(2, 4).value, Fraction(7, 2))
        self.assertEqual(m_kn_colorings(2, 4).count, 32)
        self.assertEqual(m_kn_colorings(3, 4).value, m_kn_search(3, 4).value)
        self.assertEqual(m_kn_colorings(2, 5).value, m_two(5))

    def test_refusal(self):
        with self.assertRaises(BudgetExceeded) as ctx:
            m_kn_colorings(3, 6)
        self.assertEqual(ctx.exception.requested, 3 ** 14)


class InvariantTest(unittest.TestCase):

    def test_chromatic_number(self):
        self.assertEqual(chromatic_number(builders.petersen()), 3)
        self.assertEqual(chromatic_number(builders.cycle(5)), 3)
        self.assertEqual(chromatic_number(builders.wheel(5)), 4)
        self.assertEqual(chromatic_number(builders.complete_bipartite(3, 3)), 2)
        self.assertEqual(chromatic_number(Graph(3)), 1)
        self.assertEqual(chromatic_number(Graph(0)), 0)

    def test_chromatic_number_matches_networkx_on_the_atlas(self):
        for h in nx.graph_atlas_g()[1:200]:
            g = Graph.from_networkx(h)
            greedy = max(nx.greedy_color(h, strategy='DSATUR').values(), default=-1) + 1
            self.assertLessEqual(chromatic_number(g), greedy)
            self.assertTrue(check_chain(g))

    def test_degeneracy(self):
        self.assertEqual(degeneracy(builders.petersen()), 3)
        self.assertEqual(degeneracy(builders.path(6)), 1)
        self.assertEqual(degeneracy(builders.max_degenerate(3, 9)), 3)

    def test_record(self):
        record = invariants_small(builders.petersen())
        self.assertEqual(tuple(record), (2, 3, 3, 4, 3, 3))
        self.assertEqual(record.to_json()['col'], 4)

    def test_support_only(self):
        g = Graph(20, [(0, 1), (1, 2), (0, 2)])
        self.assertEqual(invariants_small(g).chi, 3)
        with self.assertRaises(BudgetExceeded):
            invariants_small(builders.complete(13))

    def test_clique_packings(self):
        self.assertTrue(check_pp_theorem(construct_from_design(projective_plane(2))))
        report = pp_report(construct_from_design(truncate_plane(projective_plane(3), DELETE_POINT)))
        self.assertTrue(report.holds)
        self.assertEqual((report.p, report.k, report.total), (3, 13, 35))
        self.assertEqual(report.sums['omega'], 48)

    def test_one_extremal_member_is_allowed(self):
        report = pp_report(construct_psts_decomposition(7, 3))
        self.assertTrue(report.holds)
        self.assertEqual(report.p, 2)

    def test_other_shapes_are_rejected(self):
        with self.assertRaises(DomainError):
            pp_report(construct_k7_K8())
        with self.assertRaises(DomainError):
            pp_report(Decomposition(7, [builders.complete(3), builders.cycle(4).relabel([3, 4, 5, 6], 7)],
                                    mode='PACKING'))
