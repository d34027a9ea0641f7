# -*- coding: utf-8 -*-
"""
    topicalcore.validators
    ~~~~~~~~~~~~~~~~~~~~~~

    Structural checks applied to every function before it is handed to the rest of the library. Each
    validator is a callable that raises ValidationError with its `message` and `code`.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import math
from .exceptions import ValidationError

__author__ = 'topicalcore authors'

GEO_WEIGHT_TOLERANCE = 1e-12


class NodeValidator(object):
    message = 'Invalid expression.'
    code = 'invalid'

    def __init__(self, message=None, code=None):
        if message is not None:
            self.message = message
        if code is not None:
            self.code = code

    def __call__(self, node, coordinate=None):
        raise NotImplementedError

    def fail(self, coordinate, detail=None):
        message = self.message
        if detail:
            message = '{} ({})'.format(message, detail)
        if coordinate is not None:
            message = 'coordinate {}: {}'.format(coordinate, message)
        raise ValidationError(message, code=self.code)

    def __eq__(self, other):
        return (
            isinstance(other, self.__class__) and
            (self.message == other.message) and
            (self.code == other.code)
        )

    def __ne__(self, other):
        return not (self == other)


class PositiveCoefficient(NodeValidator):
    message = 'Coefficients and weights must be positive and finite.'
    code = 'nonpositive_coefficient'

    def __call__(self, node, coordinate=None):
        if node.kind == 'scale':
            values = [node.coefficient]
        else:
            values = getattr(node, 'weights', ())
        for value in values:
            try:
                as_float = float(value)
            except OverflowError:
                self.fail(coordinate, '{} overflows'.format(value))
            if not value > 0 or as_float <= 0 or not math.isfinite(as_float):
                self.fail(coordinate, str(value))


class GeoWeights(NodeValidator):
    message = 'Geometric mean weights must sum to 1.'
    code = 'geo_weights'

    def __call__(self, node, coordinate=None):
        if node.kind != 'geo':
            return
        total = sum(node.weights)
        if abs(float(total) - 1.0) > GEO_WEIGHT_TOLERANCE:
            self.fail(coordinate, 'sum is {}'.format(total))


class VariableRange(NodeValidator):
    message = 'Variable index out of range.'
    code = 'variable_range'

    def __init__(self, dim, **kwargs):
        self.dim = dim
        super(VariableRange, self).__init__(**kwargs)

    def __call__(self, node, coordinate=None):
        if node.kind == 'var' and not 1 <= node.index <= self.dim:
            self.fail(coordinate, 'x{} with dim {}'.format(node.index, self.dim))

    def __eq__(self, other):
        return super(VariableRange, self).__eq__(other) and self.dim == other.dim


class Arity(NodeValidator):
    message = 'Operators need at least one argument.'
    code = 'arity'

    def __call__(self, node, coordinate=None):
        if node.kind != 'var' and not node.children:
            self.fail(coordinate, node.kind)


def validate_coordinates(dim, coords):
    """
    Run every structural validator over each coordinate expression.

    :param dim: declared dimension
    :param coords: sequence of ExprNode, coordinate i at position i - 1
    :raises ValidationError:
    """
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError('Dimension must be a positive integer, got {}'.format(dim), code='coordinates')
    if len(coords) != dim:
        raise ValidationError('Expected {} coordinates, got {}'.format(dim, len(coords)), code='coordinates')

    validators = [Arity(), PositiveCoefficient(), GeoWeights(), VariableRange(dim)]
    for position, expression in enumerate(coords, start=1):
        for node in expression.walk():
            for validator in validators:
                validator(node, coordinate=position)
