import random
import unittest
from unittest import mock

from madgad import selftest
from madgad.decomp import validate
from madgad.errors import DomainError


def _boom(rng, quick, workers):
    raise DomainError('bad parameters')


class SelftestTest(unittest.TestCase):

    def test_random_decomposition_is_valid(self):
        rng = random.Random(5)
        for n, k in ((4, 2), (7, 5), (9, 3)):
            d = selftest.random_decomposition(rng, n, k)
            self.assertEqual(d.k, k)
            self.assertEqual(d.edge_total, n * (n - 1) // 2)
            validate(d)

    def test_checks_are_seeded(self):
        first = selftest.check_normalization(random.Random(1), True, 1)
        second = selftest.check_normalization(random.Random(1), True, 1)
        self.assertEqual(first, second)
        self.assertTrue(first[0])

    def test_failures_are_reported(self):
        checks = (('broken', 'x', _boom), ('fine', 'y', lambda rng, quick, workers: (True, 'ok')))
        with mock.patch.object(selftest, 'CHECKS', checks):
            results = selftest.run_checks(quick=True, seed=3)
        self.assertEqual([r.ok for r in results], [False, True])
        self.assertIn('DomainError', results[0].detail)
        self.assertEqual(results[1].tag, 'y')

    def test_quick_sweeps(self):
        for check in (selftest.check_g_formula, selftest.check_list_dp, selftest.check_k8,
                      selftest.check_planes):
            ok, detail = check(random.Random(0), True, 1)
            self.assertTrue(ok, detail)
