# -*- coding: utf-8 -*-
"""
    topicalcore.tools
    ~~~~~~~~~~~~~~~~~

    Seeded generators for random functions, matrices and points.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
from fractions import Fraction
import numpy as np
from .expressions import Var, Scale, Max, Min, Lin, Har, Geo
from .functions import TopicalFn, from_matrix

__author__ = 'topicalcore authors'

CONVEX_KINDS = ('scale', 'max', 'lin', 'geo')
ALL_KINDS = ('scale', 'max', 'min', 'lin', 'har', 'geo')


def random_coefficient(rng):
    """
    A positive eighth between 1/8 and 8.
    """
    return Fraction(int(rng.integers(1, 65)), 8)


def random_geo_weights(rng, count):
    parts = [int(p) for p in rng.integers(1, 5, size=count)]
    total = sum(parts)
    return [Fraction(p, total) for p in parts]


def random_expression(rng, dim, depth=2, convex=False):
    """
    Random expression over x1..x`dim`; leaves are variables and internal nodes draw from all kinds, or
    from the Min/Har-free kinds when `convex` is set.
    """
    if depth <= 0 or rng.random() < 0.25:
        return Var(int(rng.integers(1, dim + 1)))
    kind = rng.choice(CONVEX_KINDS if convex else ALL_KINDS)
    if kind == 'scale':
        return Scale(random_coefficient(rng), random_expression(rng, dim, depth - 1, convex))

    count = int(rng.integers(2, 4))
    children = [random_expression(rng, dim, depth - 1, convex) for _ in range(count)]
    if kind == 'max':
        return Max(children)
    if kind == 'min':
        return Min(children)
    if kind == 'geo':
        return Geo(random_geo_weights(rng, count), children)
    weights = [random_coefficient(rng) for _ in range(count)]
    return Lin(weights, children) if kind == 'lin' else Har(weights, children)


def random_function(rng, max_dim=6, depth=2, convex=False, dim=None):
    if dim is None:
        dim = int(rng.integers(1, max_dim + 1))
    return TopicalFn([random_expression(rng, dim, depth, convex) for _ in range(dim)], dim=dim)


def random_irreducible_matrix(rng, n=5, zero_prob=0.5, low=0.1, high=1.0):
    """
    Nonnegative n x n matrix whose support contains the cycle 1 -> 2 -> ... -> n -> 1, hence irreducible.
    """
    matrix = rng.uniform(low, high, size=(n, n))
    matrix[rng.random(size=(n, n)) < zero_prob] = 0.0
    for i in range(n):
        j = (i + 1) % n
        if matrix[i, j] == 0.0:
            matrix[i, j] = rng.uniform(low, high)
    return matrix


def random_linear_function(rng, n=5, **kwargs):
    matrix = random_irreducible_matrix(rng, n=n, **kwargs)
    return matrix, from_matrix(matrix)


def random_points(rng, dim, count, radius=10.0):
    """
    `count` additive points as the columns of a (dim, count) array.
    """
    return rng.uniform(-radius, radius, size=(dim, count))
