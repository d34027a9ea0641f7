# -*- coding: utf-8 -*-
"""
    topicalcore.dsl
    ~~~~~~~~~~~~~~~

    Reader and printer for the ``.tfn`` function format::

        # comments run to the end of the line
        dim 2
        1: max(x1, 0.5*x2)
        2: max(1/2*x1, x2)

    Only homogeneous monotone constructors exist in the grammar, so every function it can express has the
    properties the rest of the library relies on.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import logging
from fractions import Fraction
from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError
from .exceptions import DSLSyntaxError, ValidationError, TopicalException
from .expressions import Var, Scale, Max, Min, Lin, Har, Geo

__author__ = 'topicalcore authors'

GRAMMAR = r"""
start: header coordinate*

header: "dim" NUMBER
coordinate: NUMBER ":" expr

?expr: scale
     | atom

scale: number "*" expr

?atom: var
     | max
     | min
     | lin
     | har
     | geo
     | "(" expr ")"

var: VAR
max: "max" "(" expr ("," expr)* ")"
min: "min" "(" expr ("," expr)* ")"
lin: "lin" "(" term ("," term)* ")"
har: "har" "(" term ("," term)* ")"
geo: "geo" "(" weighted ("," weighted)* ")"

term: number "*" expr
    | atom

weighted: expr ":" number

number: NUMBER ("/" NUMBER)?

VAR: /x[0-9]+/
NUMBER: /([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = None


def get_parser():
    global _parser
    if _parser is None:
        _parser = Lark(GRAMMAR, start='start', parser='lalr', propagate_positions=True)
    return _parser


class FunctionBuilder(Transformer):
    """
    Turns the parse tree into expression nodes. The result of `start` is (dim, [(index, node), ...]).
    """

    def number(self, children):
        value = Fraction(str(children[0]))
        if len(children) == 2:
            denominator = Fraction(str(children[1]))
            if denominator == 0:
                raise ValidationError('Division by zero in constant {}/{}'.format(children[0], children[1]),
                                      code='nonpositive_coefficient')
            value = value / denominator
        return value

    def var(self, children):
        return Var(int(children[0][1:]))

    def scale(self, children):
        return Scale(children[0], children[1])

    def max(self, children):
        return Max(children)

    def min(self, children):
        return Min(children)

    def term(self, children):
        if len(children) == 2:
            return children[0], children[1]
        return Fraction(1), children[0]

    def lin(self, children):
        weights, nodes = zip(*children)
        return Lin(weights, nodes)

    def har(self, children):
        weights, nodes = zip(*children)
        return Har(weights, nodes)

    def weighted(self, children):
        return children[1], children[0]

    def geo(self, children):
        weights, nodes = zip(*children)
        return Geo(weights, nodes)

    def header(self, children):
        return _integer(children[0], 'dimension')

    def coordinate(self, children):
        return _integer(children[0], 'coordinate index'), children[1]

    def start(self, children):
        return children[0], children[1:]


def _integer(token, what):
    value = Fraction(str(token))
    if value.denominator != 1:
        raise DSLSyntaxError('{} must be an integer, got {}'.format(what, token), token.line, token.column)
    return int(value)


def parse_source(text):
    """
    Parse DSL text into its dimension and coordinate expressions.

    :param text: function source
    :returns: (dim, list of ExprNode ordered by coordinate index)
    :raises DSLSyntaxError: text does not conform to the grammar
    :raises ValidationError: coordinates missing, repeated or out of range
    """
    try:
        tree = get_parser().parse(text)
    except UnexpectedInput as e:
        raise DSLSyntaxError(_describe(e), getattr(e, 'line', None), getattr(e, 'column', None))

    try:
        dim, coordinates = FunctionBuilder().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, TopicalException):
            raise e.orig_exc
        raise

    by_index = {}
    for index, node in coordinates:
        if index in by_index:
            raise ValidationError('Coordinate {} defined twice'.format(index), code='coordinates')
        if not 1 <= index <= dim:
            raise ValidationError('Coordinate {} outside 1..{}'.format(index, dim), code='coordinates')
        by_index[index] = node
    missing = [i for i in range(1, dim + 1) if i not in by_index]
    if missing:
        raise ValidationError('Missing coordinates {}'.format(', '.join(str(i) for i in missing)),
                              code='coordinates')

    logging.debug(u'Parsed function of dimension {}'.format(dim))
    return dim, [by_index[i] for i in range(1, dim + 1)]


def _describe(error):
    token = getattr(error, 'token', None)
    if token is not None:
        if token.type == '$END':
            return 'unexpected end of input'
        return 'unexpected {!r}'.format(str(token))
    char = getattr(error, 'char', None)
    if char is not None:
        return 'unexpected character {!r}'.format(char)
    return 'invalid syntax'


def format_source(dim, coords, name=None):
    lines = []
    if name:
        lines.append('# {}'.format(name))
    lines.append('dim {}'.format(dim))
    for index, node in enumerate(coords, start=1):
        lines.append('{}: {}'.format(index, node.to_source()))
    return '\n'.join(lines) + '\n'
