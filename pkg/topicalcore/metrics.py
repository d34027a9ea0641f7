# -*- coding: utf-8 -*-
"""
    topicalcore.metrics
    ~~~~~~~~~~~~~~~~~~~

    Top and bottom functionals, the supremum norm, the Hilbert semi-norm and the Hilbert projective
    metric. Everything works on additive points except `hilbert_metric`, which takes multiplicative
    points and measures them through their logarithms.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
from collections import namedtuple
import numpy as np
from ._internal import as_point, as_positive_point

__author__ = 'topicalcore authors'

PROJECTIVE_TOLERANCE = 1e-10


class SeminormReport(namedtuple('SeminormReport', 'top bot sup_norm hilbert')):
    __slots__ = ()

    def as_dict(self):
        return dict(self._asdict())


def top(x):
    return float(np.max(as_point(x, allow_batch=False)))


def bot(x):
    return float(np.min(as_point(x, allow_batch=False)))


def sup_norm(x):
    return float(np.max(np.abs(as_point(x, allow_batch=False))))


def hilbert(x):
    x = as_point(x, allow_batch=False)
    return float(np.max(x) - np.min(x))


def seminorms(x):
    """
    :param x: additive point
    :returns SeminormReport:
    :raises EmptyVector:
    :raises NonFiniteInput:
    """
    x = as_point(x, allow_batch=False)
    high = float(np.max(x))
    low = float(np.min(x))
    return SeminormReport(top=high, bot=low, sup_norm=max(high, -low), hilbert=high - low)


def hilbert_metric(y, z):
    """
    d_H(y, z) = hilbert(log y - log z) for strictly positive y, z.
    """
    y = as_positive_point(y, allow_batch=False)
    z = as_positive_point(z, dim=len(y), allow_batch=False)
    return hilbert(np.log(y) - np.log(z))


def projectively_equal(y, z, tolerance=PROJECTIVE_TOLERANCE):
    """
    Whether y = c z for some c > 0, up to `tolerance` in the Hilbert metric.
    """
    return hilbert_metric(y, z) <= tolerance


def normalize_bottom(x):
    """
    x - bot(x), the representative with bottom coordinate 0.
    """
    x = as_point(x, allow_batch=False)
    return x - np.min(x)


def normalize_top(x):
    x = as_point(x, allow_batch=False)
    return x - np.max(x)
