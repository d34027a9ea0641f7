# -*- coding: utf-8 -*-
"""
    topicalcore.exceptions
    ~~~~~~~~~~~~~~~~~~~~~~

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""

__author__ = 'topicalcore authors'


class TopicalException(Exception):
    """
    Base exception class for library functions. Can be used to distinguish library errors
    """
    pass


class DSLSyntaxError(TopicalException, ValueError):
    """
    Function source does not conform to the grammar
    """
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = u'line {}, column {}: {}'.format(line, column, message)
        super(DSLSyntaxError, self).__init__(message)


class ValidationError(TopicalException, ValueError):
    """
    Source parsed but the structure breaks one of the homogeneity or monotonicity conditions
    """
    def __init__(self, message, code='invalid'):
        self.code = code
        super(ValidationError, self).__init__(message)


class NonFiniteInput(TopicalException, ValueError):
    """
    A point contains NaN or an infinite coordinate
    """
    pass


class NonPositiveInput(TopicalException, ValueError):
    """
    A multiplicative point has a coordinate <= 0
    """
    pass


class EmptyVector(TopicalException, ValueError):
    pass


class DimensionMismatch(TopicalException, ValueError):
    pass


class NonFiniteIterate(TopicalException, ArithmeticError):
    """
    Iteration produced an infinite or NaN coordinate
    """
    def __init__(self, message, step=None):
        self.step = step
        super(NonFiniteIterate, self).__init__(message)


class PreconditionViolated(TopicalException, ValueError):
    """
    The starting point of a reduction is not in the required super-eigenspace
    """
    def __init__(self, message, coordinate=None, excess=None):
        self.coordinate = coordinate
        self.excess = excess
        super(PreconditionViolated, self).__init__(message)


class BracketFailure(TopicalException, ArithmeticError):
    """
    Bisection could not bracket a level set
    """
    def __init__(self, message, coordinate=None, target=None):
        self.coordinate = coordinate
        self.target = target
        super(BracketFailure, self).__init__(message)


class ConfigurationError(TopicalException, ValueError):
    """
    Unknown profile or unreadable setting
    """
    pass
