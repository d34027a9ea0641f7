# -*- coding: utf-8 -*-
"""
    topicalcore.tests.corpus
    ~~~~~~~~~~~~~~~~~~~~~~~~

    Fixture loading and the parametric families used across the test modules.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import os
from fractions import Fraction
import numpy as np
import topicalcore

__author__ = 'topicalcore authors'

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')

NAMES = ('eq-xunq', 'identity1', 'identity2', 'eq-example2', 'eq-example', 'e-ill', 'e-gex', 'e-ill2', 'swap',
         'upper-triangular')


def fixture_path(name):
    return os.path.join(FIXTURES, '{}.tfn'.format(name))


def fixture(name):
    return topicalcore.load(fixture_path(name))


def corpus():
    return [fixture(name) for name in NAMES]


def _constant(value):
    return Fraction(value).limit_denominator(10 ** 6)


def e_gex(a, a2, b, b2, c, c2):
    a, a2, b, b2, c, c2 = [_constant(v) for v in (a, a2, b, b2, c, c2)]
    return topicalcore.parse(
        'dim 3\n'
        '1: min({}*geo(x1:1/2, x2:1/2), {}*geo(x2:1/2, x3:1/2))\n'
        '2: max({}*geo(x2:1/2, x3:1/2), {}*geo(x3:1/2, x1:1/2))\n'
        '3: max({}*x1, {}*x3)\n'.format(a, a2, b, b2, c, c2), name='e-gex')


def e_ill2(a, b, c):
    """
    :param a: (a1, a2, a3)
    :param b: (b1, b2, b3)
    :param c: (c2, c3)
    """
    a1, a2, a3 = [_constant(v) for v in a]
    b1, b2, b3 = [_constant(v) for v in b]
    c2, c3 = [_constant(v) for v in c]
    return topicalcore.parse(
        'dim 3\n'
        '1: lin({}*x2, {}*x3)\n'
        '2: har(lin({}*x1, {}*x2), {}*x3)\n'
        '3: har(lin({}*x2, {}*x3), {}*x1)\n'.format(a1, b1, a2, b2, c2, a3, b3, c3), name='e-ill2')


def draw_e_gex(rng, low=0.1, high=10.0):
    return e_gex(*rng.uniform(low, high, size=6))


def draw_e_ill2(rng, low=0.1, high=10.0):
    values = rng.uniform(low, high, size=8)
    return e_ill2(values[0:3], values[3:6], values[6:8])


def power_iteration(matrix, iterations=20000, tol=1e-14):
    """
    Perron root and vector of an irreducible nonnegative matrix, from the primitive matrix A + I.
    """
    n = matrix.shape[0]
    shifted = matrix + np.eye(n)
    v = np.ones(n)
    rho = 1.0
    for _ in range(iterations):
        w = shifted.dot(v)
        rho = np.max(w)
        w = w / rho
        if np.max(np.abs(w - v)) < tol:
            v = w
            break
        v = w
    return rho - 1.0, v
