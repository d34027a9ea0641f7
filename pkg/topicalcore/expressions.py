# -*- coding: utf-8 -*-
"""
    topicalcore.expressions
    ~~~~~~~~~~~~~~~~~~~~~~~

    Expression nodes for homogeneous monotone functions. Every node denotes a map that is homogeneous of
    degree one and monotone on the positive cone; evaluation happens in additive (log) coordinates, where
    the same node denotes a topical map.

    Coefficients and weights are stored as exact fractions. They are converted to the nearest double only
    when a node is evaluated, so structural operations such as duality are exact.

    Nodes are immutable and compare structurally.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import math
from functools import reduce
import numpy as np
from ._internal import log_sum_exp, to_fraction, format_fraction

__author__ = 'topicalcore authors'


class ExprNode(object):
    kind = None
    children = ()

    def evaluate(self, x):
        """
        Evaluate in additive coordinates.

        :param x: array whose first axis indexes coordinates (0-based); a second axis may batch points
        :returns: scalar, or an array over the batch axis
        """
        raise NotImplementedError

    def dual(self):
        """
        Node denoting x -> -e(-x).
        """
        raise NotImplementedError

    def recession(self):
        """
        Node denoting x -> lim t^-1 e(t x) as t -> infinity.
        """
        raise NotImplementedError

    def diverges(self, targets):
        """
        Whether e(u e_J) -> infinity as u -> infinity, for J the 1-based coordinates in `targets`.
        """
        raise NotImplementedError

    def substitute(self, replacements):
        """
        Replace every variable x_k by replacements[k - 1].
        """
        return self._rebuild([child.substitute(replacements) for child in self.children])

    def _rebuild(self, children):
        raise NotImplementedError

    def _key(self):
        return self.kind, tuple(child._key() for child in self.children)

    def walk(self):
        yield self
        for child in self.children:
            for node in child.walk():
                yield node

    def variables(self):
        return frozenset(node.index for node in self.walk() if node.kind == 'var')

    def to_source(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, ExprNode) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return '<{} {}>'.format(self.__class__.__name__, self.to_source())


class Var(ExprNode):
    kind = 'var'

    def __init__(self, index):
        self.index = int(index)

    def evaluate(self, x):
        return x[self.index - 1]

    def dual(self):
        return self

    def recession(self):
        return self

    def diverges(self, targets):
        return self.index in targets

    def substitute(self, replacements):
        return replacements[self.index - 1]

    def _key(self):
        return self.kind, self.index

    def to_source(self):
        return 'x{}'.format(self.index)


class Scale(ExprNode):
    """
    c * e; additively e + ln c.
    """
    kind = 'scale'

    def __init__(self, coefficient, child):
        self.coefficient = to_fraction(coefficient)
        self.child = child
        self.children = (child,)
        self._offset = None

    @property
    def offset(self):
        if self._offset is None:
            self._offset = math.log(float(self.coefficient))
        return self._offset

    def evaluate(self, x):
        return self.child.evaluate(x) + self.offset

    def dual(self):
        return Scale(1 / self.coefficient, self.child.dual())

    def recession(self):
        # additive constants vanish under t^-1
        return self.child.recession()

    def diverges(self, targets):
        return self.child.diverges(targets)

    def _rebuild(self, children):
        return Scale(self.coefficient, children[0])

    def _key(self):
        return self.kind, self.coefficient, self.child._key()

    def to_source(self):
        return '{}*{}'.format(format_fraction(self.coefficient), self.child.to_source())


class _Lattice(ExprNode):
    name = None
    combine = None

    def __init__(self, children):
        self.children = tuple(children)

    def evaluate(self, x):
        return reduce(self.combine, [child.evaluate(x) for child in self.children])

    def recession(self):
        return self.__class__([child.recession() for child in self.children])

    def _rebuild(self, children):
        return self.__class__(children)

    def to_source(self):
        return '{}({})'.format(self.name, ', '.join(child.to_source() for child in self.children))


class Max(_Lattice):
    kind = 'max'
    name = 'max'
    combine = staticmethod(np.maximum)

    def dual(self):
        return Min([child.dual() for child in self.children])

    def diverges(self, targets):
        return any(child.diverges(targets) for child in self.children)


class Min(_Lattice):
    kind = 'min'
    name = 'min'
    combine = staticmethod(np.minimum)

    def dual(self):
        return Max([child.dual() for child in self.children])

    def diverges(self, targets):
        return all(child.diverges(targets) for child in self.children)


class _Weighted(ExprNode):
    name = None

    def __init__(self, weights, children):
        self.weights = tuple(to_fraction(w) for w in weights)
        self.children = tuple(children)
        if len(self.weights) != len(self.children):
            raise ValueError('{} needs one weight per child'.format(self.name))
        self._log_weights = None

    @property
    def log_weights(self):
        if self._log_weights is None:
            self._log_weights = [math.log(float(w)) for w in self.weights]
        return self._log_weights

    def _rebuild(self, children):
        return self.__class__(self.weights, children)

    def _key(self):
        return self.kind, self.weights, tuple(child._key() for child in self.children)

    def _term_source(self, weight, child):
        return '{}*{}'.format(format_fraction(weight), child.to_source())

    def to_source(self):
        terms = [self._term_source(w, child) for w, child in zip(self.weights, self.children)]
        return '{}({})'.format(self.name, ', '.join(terms))


class Lin(_Weighted):
    """
    Positive linear combination sum w_i e_i; additively a log-sum-exp.
    """
    kind = 'lin'
    name = 'lin'

    def evaluate(self, x):
        return log_sum_exp([lw + child.evaluate(x) for lw, child in zip(self.log_weights, self.children)])

    def dual(self):
        return Har(self.weights, [child.dual() for child in self.children])

    def recession(self):
        return Max([child.recession() for child in self.children])

    def diverges(self, targets):
        return any(child.diverges(targets) for child in self.children)


class Har(_Weighted):
    """
    Weighted harmonic combination (sum w_i / e_i)^-1.
    """
    kind = 'har'
    name = 'har'

    def evaluate(self, x):
        return -log_sum_exp([lw - child.evaluate(x) for lw, child in zip(self.log_weights, self.children)])

    def dual(self):
        return Lin(self.weights, [child.dual() for child in self.children])

    def recession(self):
        return Min([child.recession() for child in self.children])

    def diverges(self, targets):
        return all(child.diverges(targets) for child in self.children)


class Geo(_Weighted):
    """
    Weighted geometric mean prod e_i^w_i with weights summing to one; additively affine.
    """
    kind = 'geo'
    name = 'geo'

    def evaluate(self, x):
        return sum(float(w) * child.evaluate(x) for w, child in zip(self.weights, self.children))

    def dual(self):
        return Geo(self.weights, [child.dual() for child in self.children])

    def recession(self):
        return Geo(self.weights, [child.recession() for child in self.children])

    def diverges(self, targets):
        return any(child.diverges(targets) for child in self.children)

    def _term_source(self, weight, child):
        return '{}:{}'.format(child.to_source(), format_fraction(weight))


NODE_KINDS = {
    'var': Var,
    'scale': Scale,
    'max': Max,
    'min': Min,
    'lin': Lin,
    'har': Har,
    'geo': Geo,
}
