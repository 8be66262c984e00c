import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from madgad.core.rational import SqrtInterval, as_rational, le_sqrt, lt_sqrt, parse, to_str
from madgad.errors import DomainError, FormatError


class RationalTest(unittest.TestCase):

    def test_to_str_always_writes_denominator(self):
        self.assertEqual(to_str(Fraction(0)), '0/1')
        self.assertEqual(to_str(16), '16/1')
        self.assertEqual(to_str(Fraction(24, 5)), '24/5')
        self.assertEqual(to_str(Fraction(-3, 6)), '-1/2')

    def test_parse(self):
        self.assertEqual(parse('91/3'), Fraction(91, 3))
        self.assertEqual(parse(' 7 '), Fraction(7))
        self.assertEqual(as_rational('5/2'), Fraction(5, 2))
        for bad in ('1/0', 'x/2', '', '1.5'):
            with self.assertRaises(FormatError):
                parse(bad)
        with self.assertRaises(DomainError):
            as_rational(1.5)

    @given(st.fractions())
    def test_str_parse_identity(self, x):
        self.assertEqual(parse(to_str(x)), x)

    def test_sqrt_comparisons_are_exact(self):
        self.assertTrue(lt_sqrt(Fraction(14), 7 * 7 * 7))
        self.assertFalse(lt_sqrt(3, 9))
        self.assertTrue(le_sqrt(3, 9))
        self.assertTrue(lt_sqrt(-1, 0))
        with self.assertRaises(DomainError):
            lt_sqrt(1, -2)

    @given(st.integers(min_value=0, max_value=10 ** 12))
    def test_sqrt_interval_encloses_root(self, radicand):
        box = SqrtInterval(radicand)
        self.assertLessEqual(box.lo * box.lo, radicand)
        self.assertGreaterEqual(box.hi * box.hi, radicand)
        self.assertLessEqual(box.width, Fraction(1, 10 ** 9))

    def test_perfect_square_is_exact(self):
        box = SqrtInterval(49)
        self.assertEqual(box.lo, 7)
        self.assertTrue(box.exact)
