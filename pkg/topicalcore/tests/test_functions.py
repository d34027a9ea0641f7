# -*- coding: utf-8 -*-
"""
    topicalcore.tests.test_functions
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Parsing, validation, evaluation and the function constructors.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import math
import unittest
from fractions import Fraction
import numpy as np
from hypothesis import given, settings, seed, strategies as st
import topicalcore
from topicalcore import tools
from topicalcore.dsl import parse_source
from topicalcore.expressions import Var, Scale, Max, Min, Lin, Har, Geo
from topicalcore.validators import validate_coordinates, GeoWeights, PositiveCoefficient
from topicalcore.tests.corpus import fixture, fixture_path, corpus, e_gex

__author__ = 'topicalcore authors'

XUNQ_SOURCE = 'dim 2\n1: max(x1, 0.5*x2)\n2: max(0.5*x1, x2)'
EXAMPLE2_SOURCE = ('dim 4\n1: max(x1, 2*har(1*x2, 2*x3, 1*x4))\n2: min(7*x3, x4)\n'
                   '3: 8*geo(x1:1/3, x2:1/3, x4:1/3)\n4: max(x3, x4)')


def random_corpus(size=40, max_dim=4, seed_value=7):
    rng = np.random.default_rng(seed_value)
    return [tools.random_function(rng, max_dim=max_dim) for _ in range(size)]


class TestParse(unittest.TestCase):

    def test_parse_xunq(self):
        f = topicalcore.parse(XUNQ_SOURCE)
        self.assertEqual(f.dim, 2, u'Dimension mismatch')
        self.assertEqual(f.coordinate(1), Max([Var(1), Scale(Fraction(1, 2), Var(2))]), u'Coordinate 1 mismatch')
        self.assertEqual(f.coordinate(2), Max([Scale(Fraction(1, 2), Var(1)), Var(2)]), u'Coordinate 2 mismatch')

    def test_parse_identity(self):
        f = topicalcore.parse('dim 1\n1: x1')
        self.assertEqual(f, topicalcore.identity(1), u'Identity mismatch')

    def test_parse_example2(self):
        f = topicalcore.parse(EXAMPLE2_SOURCE)
        self.assertEqual(f.dim, 4, u'Dimension mismatch')
        self.assertEqual(f.coordinate(3).kind, 'scale', u'Coordinate 3 kind mismatch')
        self.assertEqual(f.coordinate(3).child.weights, (Fraction(1, 3),) * 3, u'Geo weights mismatch')
        self.assertEqual(f, fixture('eq-example2'), u'Fixture mismatch')

    def test_comments_and_whitespace(self):
        f = topicalcore.parse('# header comment\n  dim 2   \n2:x1 # trailing\n1 :   x2\n')
        self.assertEqual(f, fixture('swap'), u'Parsed function mismatch')

    def test_pretty_print_reparses(self):
        for f in corpus() + random_corpus():
            self.assertEqual(topicalcore.parse(f.to_source()), f, u'Round trip mismatch for {}'.format(f))

    def test_syntax_error_position(self):
        with self.assertRaises(topicalcore.DSLSyntaxError) as context:
            topicalcore.parse('dim 2\n1: max(x1, x2\n2: x2')
        self.assertIsNotNone(context.exception.line, u'Line missing')
        self.assertIsNotNone(context.exception.column, u'Column missing')

    def test_negative_coefficient_is_syntax_error(self):
        with self.assertRaises(topicalcore.DSLSyntaxError):
            topicalcore.parse('dim 1\n1: -2*x1')

    def test_zero_coefficient(self):
        with self.assertRaises(topicalcore.ValidationError) as context:
            topicalcore.parse('dim 1\n1: 0*x1')
        self.assertEqual(context.exception.code, 'nonpositive_coefficient', u'Error code mismatch')

    def test_zero_denominator(self):
        with self.assertRaises(topicalcore.ValidationError):
            topicalcore.parse('dim 1\n1: 1/0*x1')

    def test_geo_weights_must_sum_to_one(self):
        with self.assertRaises(topicalcore.ValidationError) as context:
            topicalcore.parse('dim 2\n1: geo(x1:1/2, x2:1/3)\n2: x2')
        self.assertEqual(context.exception.code, 'geo_weights', u'Error code mismatch')

    def test_variable_out_of_range(self):
        with self.assertRaises(topicalcore.ValidationError) as context:
            topicalcore.parse('dim 2\n1: x3\n2: x2')
        self.assertEqual(context.exception.code, 'variable_range', u'Error code mismatch')

    def test_missing_coordinate(self):
        with self.assertRaises(topicalcore.ValidationError) as context:
            topicalcore.parse('dim 3\n1: x1\n3: x3')
        self.assertEqual(context.exception.code, 'coordinates', u'Error code mismatch')

    def test_duplicate_coordinate(self):
        with self.assertRaises(topicalcore.ValidationError):
            topicalcore.parse('dim 2\n1: x1\n1: x2\n2: x2')

    def test_non_integer_dimension(self):
        with self.assertRaises(topicalcore.DSLSyntaxError):
            topicalcore.parse('dim 2.5\n1: x1')

    def test_parse_source_returns_ordered_coordinates(self):
        dim, coords = parse_source('dim 2\n2: x1\n1: x2')
        self.assertEqual(dim, 2, u'Dimension mismatch')
        self.assertEqual(coords, [Var(2), Var(1)], u'Coordinate order mismatch')

    def test_load_keeps_source(self):
        f = topicalcore.load(fixture_path('eq-xunq'))
        self.assertIn('max(x1, 0.5*x2)', f.source, u'Source mismatch')
        self.assertEqual(f.name, fixture_path('eq-xunq'), u'Name mismatch')


class TestValidators(unittest.TestCase):

    def test_empty_children(self):
        with self.assertRaises(topicalcore.ValidationError) as context:
            topicalcore.TopicalFn([Max([])])
        self.assertEqual(context.exception.code, 'arity', u'Error code mismatch')

    def test_geo_tolerance(self):
        validator = GeoWeights()
        validator(Geo([Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)], [Var(1), Var(1), Var(1)]))
        with self.assertRaises(topicalcore.ValidationError):
            validator(Geo([0.5, 0.5 + 1e-9], [Var(1), Var(1)]))

    def test_positive_coefficient(self):
        with self.assertRaises(topicalcore.ValidationError):
            PositiveCoefficient()(Lin([1, 0], [Var(1), Var(1)]))

    def test_dimension_must_match(self):
        with self.assertRaises(topicalcore.ValidationError):
            validate_coordinates(3, [Var(1), Var(2)])


class TestEvaluation(unittest.TestCase):

    def test_identity(self):
        np.testing.assert_allclose(topicalcore.eval_additive(topicalcore.identity(2), [3.0, -1.0]), [3.0, -1.0])

    def test_example2_additive(self):
        f = fixture('eq-example2')
        x = np.log([1.0, 2.0, 8.0, 4.0])
        np.testing.assert_allclose(topicalcore.eval_additive(f, x), x + math.log(2), atol=1e-12)

    def test_example2_multiplicative(self):
        f = fixture('eq-example2')
        np.testing.assert_allclose(topicalcore.eval_multiplicative(f, [1, 2, 8, 4]), [2, 4, 16, 8], rtol=1e-12)

    def test_identity_multiplicative(self):
        np.testing.assert_allclose(topicalcore.eval_multiplicative(topicalcore.identity(1), [5.0]), [5.0])

    def test_e_gex_at_ones(self):
        f = fixture('e-gex')
        np.testing.assert_allclose(topicalcore.eval_multiplicative(f, [1, 1, 1]), [1, 1, 1], rtol=1e-12)

    def test_lin_at_origin(self):
        f = topicalcore.parse('dim 2\n1: lin(1*x1, 1*x2)\n2: x2')
        self.assertAlmostEqual(f([0.0, 0.0])[0], math.log(2), places=14, msg=u'Log-sum-exp mismatch')

    def test_no_overflow(self):
        f = topicalcore.parse('dim 2\n1: lin(1*x1, 1*x2)\n2: har(1*x1, 1*x2)')
        value = f([700.0, 700.0])
        np.testing.assert_allclose(value, [700.0 + math.log(2), 700.0 - math.log(2)], rtol=1e-14)
        value = f([-700.0, -700.0])
        np.testing.assert_allclose(value, [-700.0 + math.log(2), -700.0 - math.log(2)], rtol=1e-14)

    def test_batch_matches_single(self):
        f = fixture('eq-example2')
        points = np.random.default_rng(3).uniform(-5, 5, size=(4, 6))
        batch = topicalcore.eval_additive(f, points)
        for column in range(points.shape[1]):
            np.testing.assert_allclose(batch[:, column], f(points[:, column]), atol=1e-12)

    def test_non_finite_input(self):
        with self.assertRaises(topicalcore.NonFiniteInput):
            topicalcore.eval_additive(topicalcore.identity(2), [0.0, float('nan')])

    def test_non_positive_input(self):
        with self.assertRaises(topicalcore.NonPositiveInput):
            topicalcore.eval_multiplicative(topicalcore.identity(2), [1.0, 0.0])

    def test_dimension_mismatch(self):
        with self.assertRaises(topicalcore.DimensionMismatch):
            topicalcore.eval_additive(topicalcore.identity(2), [1.0, 2.0, 3.0])


class TestDuality(unittest.TestCase):

    def test_max_becomes_min(self):
        f = topicalcore.parse('dim 2\n1: max(x1, x2)\n2: x2')
        self.assertEqual(topicalcore.dual(f).coordinate(1), Min([Var(1), Var(2)]), u'Dual mismatch')

    def test_lin_becomes_har(self):
        f = topicalcore.parse('dim 2\n1: lin(1*x1, 2*x2)\n2: x2')
        g = topicalcore.dual(f)
        self.assertEqual(g.coordinate(1), Har([1, 2], [Var(1), Var(2)]), u'Dual mismatch')
        points = np.random.default_rng(5).uniform(-3, 3, size=(2, 5))
        np.testing.assert_allclose(g(points), -f(-points), atol=1e-12)

    def test_scale_inverts(self):
        f = topicalcore.parse('dim 1\n1: 3*x1')
        self.assertEqual(topicalcore.dual(f).coordinate(1), Scale(Fraction(1, 3), Var(1)), u'Dual mismatch')

    def test_identity_self_dual(self):
        self.assertEqual(topicalcore.dual(topicalcore.identity(3)), topicalcore.identity(3), u'Dual mismatch')

    def test_involution_and_reflection(self):
        rng = np.random.default_rng(11)
        for f in corpus() + random_corpus():
            g = topicalcore.dual(f)
            self.assertEqual(topicalcore.dual(g), f, u'Involution mismatch for {}'.format(f))
            points = rng.uniform(-5, 5, size=(f.dim, 5))
            np.testing.assert_allclose(g(points), -f(-points), atol=1e-12)


class TestConvexity(unittest.TestCase):

    def test_matrix_function_convex(self):
        f = topicalcore.from_matrix([[1.0, 2.0], [0.5, 0.0]])
        self.assertTrue(topicalcore.is_convex_syntactic(f), u'Convexity mismatch')

    def test_xunq_convex(self):
        self.assertTrue(topicalcore.is_convex_syntactic(fixture('eq-xunq')), u'Convexity mismatch')

    def test_example2_not_convex(self):
        self.assertFalse(topicalcore.is_convex_syntactic(fixture('eq-example2')), u'Convexity mismatch')


class TestConstructors(unittest.TestCase):

    def test_from_matrix(self):
        matrix = np.array([[1.0, 2.0], [0.0, 3.0]])
        f = topicalcore.from_matrix(matrix)
        y = np.array([0.7, 1.9])
        np.testing.assert_allclose(topicalcore.eval_multiplicative(f, y), matrix.dot(y), rtol=1e-12)

    def test_from_matrix_zero_row(self):
        with self.assertRaises(topicalcore.ValidationError):
            topicalcore.from_matrix([[1.0, 1.0], [0.0, 0.0]])

    def test_from_matrix_negative(self):
        with self.assertRaises(topicalcore.ValidationError):
            topicalcore.from_matrix([[1.0, -1.0], [1.0, 1.0]])

    def test_compose_evaluates_in_sequence(self):
        f = fixture('eq-example2')
        g = e_gex(2, 0.5, 1, 3, 0.25, 1)
        h = topicalcore.parse('dim 3\n1: x3\n2: lin(1*x1, 1*x2)\n3: min(x1, 2*x2)')
        composed = topicalcore.compose(h, g)
        x = np.array([0.3, -1.2, 2.0])
        np.testing.assert_allclose(composed(x), h(g(x)), atol=1e-12)
        with self.assertRaises(topicalcore.DimensionMismatch):
            topicalcore.compose(f, g)

    def test_power(self):
        f = fixture('e-ill2')
        x = np.array([0.1, 0.4, -0.3])
        np.testing.assert_allclose(topicalcore.power(f, 3)(x), f(f(f(x))), atol=1e-12)
        self.assertIs(topicalcore.power(f, 1), f, u'First power mismatch')
        with self.assertRaises(ValueError):
            topicalcore.power(f, 0)

    def test_shift(self):
        f = fixture('eq-xunq')
        x = np.array([0.2, -0.7])
        np.testing.assert_allclose(topicalcore.shift(f, 1.5)(x), f(x) + 1.5, atol=1e-12)


class TestTopicalProperties(unittest.TestCase):
    """
    Additive homogeneity, monotonicity and nonexpansiveness on a seeded random corpus.
    """

    def setUp(self):
        self.functions = corpus() + random_corpus(size=200, max_dim=6, seed_value=19)
        self.rng = np.random.default_rng(23)

    def test_additive_homogeneity(self):
        for f in self.functions:
            x = self.rng.uniform(-10, 10, size=f.dim)
            h = self.rng.uniform(-10, 10)
            np.testing.assert_allclose(f(x + h), f(x) + h, atol=1e-9)

    def test_monotonicity(self):
        for f in self.functions:
            x = self.rng.uniform(-10, 10, size=f.dim)
            y = x + self.rng.uniform(0, 5, size=f.dim)
            self.assertTrue(np.all(f(x) <= f(y) + 1e-12), u'Monotonicity mismatch for {}'.format(f))

    def test_nonexpansive(self):
        for f in self.functions:
            x = self.rng.uniform(-10, 10, size=f.dim)
            y = self.rng.uniform(-10, 10, size=f.dim)
            self.assertLessEqual(topicalcore.sup_norm(f(x) - f(y)), topicalcore.sup_norm(x - y) + 1e-9,
                                 u'Supremum norm mismatch')
            self.assertLessEqual(topicalcore.hilbert(f(x) - f(y)), topicalcore.hilbert(x - y) + 1e-9,
                                 u'Hilbert semi-norm mismatch')

    def test_conjugation(self):
        for f in self.functions:
            y = np.exp(self.rng.uniform(-3, 3, size=f.dim))
            np.testing.assert_allclose(np.exp(f(np.log(y))), topicalcore.eval_multiplicative(f, y), rtol=1e-12)

    @seed(31)
    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.floats(min_value=-50, max_value=50), min_size=4, max_size=4),
           st.floats(min_value=-50, max_value=50))
    def test_example2_homogeneity(self, x, h):
        f = fixture('eq-example2')
        x = np.array(x)
        np.testing.assert_allclose(f(x + h), f(x) + h, atol=1e-9)


if __name__ == '__main__':
    unittest.main()
