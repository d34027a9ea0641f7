# -*- coding: utf-8 -*-
"""
    topicalcore._internal
    ~~~~~~~~~~~~~~~~~~~~~

    Numeric helpers shared by the evaluation, metric and solver modules. Points are numpy arrays whose
    first axis indexes coordinates; a trailing axis, when present, indexes a batch of points.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
from fractions import Fraction
import numpy as np
from .exceptions import NonFiniteInput, NonPositiveInput, DimensionMismatch, EmptyVector, ValidationError

__author__ = 'topicalcore authors'


def log_sum_exp(values, axis=0):
    """
    log(sum(exp(values))) along `axis`, shifted by the maximum so that no term overflows.

    :param values: array_like of additive terms
    :param axis: axis to reduce
    :returns: array with `axis` removed
    """
    values = np.asarray(values, dtype=float)
    peak = np.max(values, axis=axis, keepdims=True)
    total = np.log(np.sum(np.exp(values - peak), axis=axis))
    return np.squeeze(peak, axis=axis) + total


def as_point(x, dim=None, allow_batch=True):
    x = np.asarray(x, dtype=float)
    if x.ndim == 0 or x.ndim > (2 if allow_batch else 1):
        raise DimensionMismatch('Expected a vector of coordinates, got shape {}'.format(x.shape))
    if x.shape[0] == 0:
        raise EmptyVector('Point has no coordinates')
    if dim is not None and x.shape[0] != dim:
        raise DimensionMismatch('Expected {} coordinates, got {}'.format(dim, x.shape[0]))
    if not np.all(np.isfinite(x)):
        raise NonFiniteInput('Point has a non-finite coordinate')
    return x


def as_positive_point(y, dim=None, allow_batch=True):
    y = as_point(y, dim=dim, allow_batch=allow_batch)
    if np.any(y <= 0):
        raise NonPositiveInput('Multiplicative points must be strictly positive')
    return y


def indicator(dim, subset, scale=1.0):
    """
    Additive indicator u*e_J: `scale` on the 1-based coordinates in `subset`, 0 elsewhere.
    """
    point = np.zeros(dim)
    for index in subset:
        point[index - 1] = scale
    return point


def indicator_subsets(dim):
    """
    Every nonempty proper subset of {1..dim} as a frozenset, in descending bitmask order.
    """
    for mask in range((1 << dim) - 2, 0, -1):
        yield frozenset(i + 1 for i in range(dim) if mask & (1 << i))


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        if not np.isfinite(value):
            raise ValidationError('Coefficient {} is not finite'.format(value), code='nonpositive_coefficient')
    return Fraction(value)


def format_fraction(value):
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)
