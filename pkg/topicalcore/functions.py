# -*- coding: utf-8 -*-
"""
    topicalcore.functions
    ~~~~~~~~~~~~~~~~~~~~~

    TopicalFn and the operations on whole functions: parsing, evaluation in both coordinate systems,
    duality, composition and the constructors used throughout the library.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import codecs
import logging
import numpy as np
from .dsl import parse_source, format_source
from .exceptions import DimensionMismatch, ValidationError
from .expressions import Var, Scale, Lin
from .validators import validate_coordinates
from ._internal import as_point, as_positive_point, to_fraction

__author__ = 'topicalcore authors'

_MIN_KINDS = frozenset(['min', 'har'])


class TopicalFn(object):
    """
    An n-vector of expressions. Calling the function evaluates it in additive coordinates.
    """
    _attributes = ['name', 'dim']

    def __init__(self, coords, dim=None, name=None, source=None):
        self.coords = tuple(coords)
        self.dim = len(self.coords) if dim is None else dim
        self.name = name
        self.source = source
        validate_coordinates(self.dim, self.coords)

    def __call__(self, x):
        return eval_additive(self, x)

    def coordinate(self, i):
        return self.coords[i - 1]

    def to_source(self):
        return format_source(self.dim, self.coords)

    def __eq__(self, other):
        return isinstance(other, TopicalFn) and self.dim == other.dim and self.coords == other.coords

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.dim, self.coords))

    def __len__(self):
        return self.dim

    def __repr__(self):
        return '<{}{}>'.format(self.__class__.__name__, ''.join(
            ' {}={}'.format(attr, getattr(self, attr)) for attr in self._attributes if getattr(self, attr)))


def parse(text, name=None):
    """
    Parse DSL source into a validated function.

    :param text: source in the .tfn format
    :param name: optional label carried in metadata
    :returns TopicalFn:
    :raises DSLSyntaxError:
    :raises ValidationError:
    """
    dim, coords = parse_source(text)
    return TopicalFn(coords, dim=dim, name=name, source=text)


def load(path):
    with codecs.open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    logging.debug(u'Loading function from {}'.format(path))
    return parse(text, name=path)


def eval_additive(f, x):
    """
    E(f)(x) = log f(exp x), computed without leaving log coordinates.

    `x` may be a single point of shape (n,) or a batch of shape (n, m).
    """
    x = as_point(x, dim=f.dim)
    return np.array([expression.evaluate(x) for expression in f.coords], dtype=float)


def eval_multiplicative(f, y):
    y = as_positive_point(y, dim=f.dim)
    with np.errstate(over='ignore'):
        return np.exp(eval_additive(f, np.log(y)))


def dual(f):
    """
    The function x -> -f(-x). Max and Min swap, Lin and Har swap, Scale coefficients invert.
    """
    return TopicalFn([expression.dual() for expression in f.coords], dim=f.dim, name=_derived(f, 'dual'))


def is_convex_syntactic(f):
    """
    Sufficient test for convexity in additive coordinates: no Min and no Har node anywhere.
    A False result makes no claim.
    """
    return not any(node.kind in _MIN_KINDS for expression in f.coords for node in expression.walk())


def compose(f, g):
    """
    f o g, built by substituting g's coordinates for the variables of f.
    """
    if f.dim != g.dim:
        raise DimensionMismatch('Cannot compose dimensions {} and {}'.format(f.dim, g.dim))
    return TopicalFn([expression.substitute(g.coords) for expression in f.coords], dim=f.dim)


def power(f, m):
    if m < 1:
        raise ValueError('Power must be at least 1, got {}'.format(m))
    result = f
    for _ in range(m - 1):
        result = compose(result, f)
    if m > 1:
        result.name = _derived(f, 'power {}'.format(m))
    return result


def shift(f, c):
    """
    f + c in additive coordinates, i.e. e^c times f.
    """
    factor = to_fraction(float(np.exp(c)))
    return TopicalFn([Scale(factor, expression) for expression in f.coords], dim=f.dim)


def identity(n):
    return TopicalFn([Var(i) for i in range(1, n + 1)], name='identity {}'.format(n))


def from_matrix(matrix, name=None):
    """
    E(A) for a nonnegative square matrix A: coordinate i is the Lin node over the positive entries of row i.

    :raises ValidationError: negative entries or a row with no positive entry
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch('Expected a square matrix, got shape {}'.format(matrix.shape))
    if np.any(matrix < 0) or not np.all(np.isfinite(matrix)):
        raise ValidationError('Matrix entries must be finite and nonnegative', code='nonpositive_coefficient')

    coords = []
    for i, row in enumerate(matrix, start=1):
        support = [j for j in range(len(row)) if row[j] > 0]
        if not support:
            raise ValidationError('Row {} has no positive entry'.format(i), code='arity')
        coords.append(Lin([to_fraction(row[j]) for j in support], [Var(j + 1) for j in support]))
    return TopicalFn(coords, name=name)


def _derived(f, label):
    return '{} of {}'.format(label, f.name) if f.name else None
