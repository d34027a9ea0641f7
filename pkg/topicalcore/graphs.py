# -*- coding: utf-8 -*-
"""
    topicalcore.graphs
    ~~~~~~~~~~~~~~~~~~

    Graphs attached to a topical function and the decision of indecomposability.

    Every vertex carries a label, the set of original coordinates it stands for (its sigma-image). For the
    associated graph each label is a singleton {i}; the aggregated graphs group coordinates into strongly
    connected components and re-test divergence against whole components.

    Vertices are 0-based internally; labels and every export use the 1-based coordinates of the function.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import logging
from collections import namedtuple
import numpy as np
from .functions import dual, is_convex_syntactic
from ._internal import indicator

__author__ = 'topicalcore authors'

PROBE_SCALES = (2 ** 10, 2 ** 20, 2 ** 40)
PROBE_THRESHOLD = 1.0


class Digraph(object):
    """
    Immutable directed graph with labelled vertices.

    :param labels: sequence of frozensets of 1-based coordinates, one per vertex
    :param edges: iterable of (u, v) vertex pairs, 0-based
    """

    def __init__(self, labels, edges):
        self.labels = tuple(frozenset(label) for label in labels)
        self.edges = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError('Edge ({}, {}) outside {} vertices'.format(u, v, self.n_vertices))
        self._successors = None

    @property
    def n_vertices(self):
        return len(self.labels)

    @property
    def successors(self):
        if self._successors is None:
            successors = [[] for _ in range(self.n_vertices)]
            for u, v in sorted(self.edges):
                successors[u].append(v)
            self._successors = successors
        return self._successors

    def has_edge(self, u, v):
        return (u, v) in self.edges

    def labelled_edges(self):
        """
        Edges as pairs of labels, for comparisons that do not depend on vertex numbering.
        """
        return frozenset((self.labels[u], self.labels[v]) for u, v in self.edges)

    def is_strongly_connected(self):
        # a single vertex communicates with itself whether or not it has a loop
        return len(strongly_connected_components(self)) == 1

    def vertex_name(self, v):
        return '{' + ','.join(str(i) for i in sorted(self.labels[v])) + '}'

    def to_dot(self, name='G'):
        lines = ['digraph {} {{'.format(name)]
        for v in range(self.n_vertices):
            lines.append('  {} [label="{}"];'.format(v + 1, self.vertex_name(v)))
        for u, v in sorted(self.edges):
            lines.append('  {} -> {};'.format(u + 1, v + 1))
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def to_json(self):
        return {
            'vertices': [{'id': v + 1, 'sigma': sorted(self.labels[v])} for v in range(self.n_vertices)],
            'edges': [[u + 1, v + 1] for u, v in sorted(self.edges)],
        }

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.labels == other.labels and self.edges == other.edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.labels, self.edges))

    def __repr__(self):
        return '<Digraph vertices={} edges={}>'.format(self.n_vertices, len(self.edges))


class Condensation(namedtuple('Condensation', 'components dag')):
    """
    components: list of sorted vertex lists, ordered by smallest label coordinate.
    dag: Digraph with one vertex per component, labelled by the union of member labels, and an edge
    between distinct components whenever some member edge joins them.
    """
    __slots__ = ()

    def component_of(self):
        owner = {}
        for index, members in enumerate(self.components):
            for v in members:
                owner[v] = index
        return owner


class AggregationTower(namedtuple('AggregationTower', 'levels stabilized_at')):
    __slots__ = ()

    @property
    def limit(self):
        return self.levels[-1]

    def as_dict(self):
        return {'levels': [level.to_json() for level in self.levels], 'stabilized_at': self.stabilized_at}


class DecompositionWitness(namedtuple('DecompositionWitness', 'I J')):
    __slots__ = ()

    def as_dict(self):
        return {'I': sorted(self.I), 'J': sorted(self.J)}


class StronglyConnectedComponentComputation(object):
    """
    Tarjan's algorithm with an explicit stack in place of recursion.
    """

    def __init__(self, successors):
        self.graph = successors
        self.BEGIN, self.CONTINUE, self.RETURN = 0, 1, 2

    def get_result(self):
        self.indices = dict()
        self.lowlinks = dict()
        self.stack_indices = dict()
        self.current_index = 0
        self.stack = []
        self.sccs = []

        for i in range(len(self.graph)):
            if i not in self.indices:
                self.visit(i)
        self.sccs.reverse()
        return self.sccs

    def visit(self, vertex):
        iter_stack = [(vertex, None, None, self.BEGIN)]
        while iter_stack:
            v, w, succ_index, state = iter_stack.pop()

            if state == self.BEGIN:
                self.current_index += 1
                self.indices[v] = self.current_index
                self.lowlinks[v] = self.current_index
                self.stack_indices[v] = len(self.stack)
                self.stack.append(v)
                iter_stack.append((v, None, 0, self.CONTINUE))
            elif state == self.CONTINUE:
                successors = self.graph[v]
                if succ_index == len(successors):
                    if self.lowlinks[v] == self.indices[v]:
                        stack_index = self.stack_indices[v]
                        scc = self.stack[stack_index:]
                        del self.stack[stack_index:]
                        for n in scc:
                            del self.stack_indices[n]
                        self.sccs.append(scc)
                else:
                    w = successors[succ_index]
                    if w not in self.indices:
                        iter_stack.append((v, w, succ_index, self.RETURN))
                        iter_stack.append((w, None, None, self.BEGIN))
                    else:
                        if w in self.stack_indices:
                            self.lowlinks[v] = min(self.lowlinks[v], self.indices[w])
                        iter_stack.append((v, None, succ_index + 1, self.CONTINUE))
            elif state == self.RETURN:
                self.lowlinks[v] = min(self.lowlinks[v], self.lowlinks[w])
                iter_stack.append((v, None, succ_index + 1, self.CONTINUE))


def strongly_connected_components(g):
    """
    SCCs of `g` as sorted vertex lists, ordered by the smallest coordinate in their labels.
    """
    sccs = StronglyConnectedComponentComputation(g.successors).get_result()
    components = [sorted(scc) for scc in sccs]
    components.sort(key=lambda members: min(min(g.labels[v]) for v in members))
    return components


def scc_condense(g):
    components = strongly_connected_components(g)
    condensation = Condensation(components=components, dag=None)
    owner = condensation.component_of()
    labels = [frozenset().union(*[g.labels[v] for v in members]) for members in components]
    edges = set((owner[u], owner[v]) for u, v in g.edges if owner[u] != owner[v])
    return condensation._replace(dag=Digraph(labels, edges))


def diverges(f, i, targets):
    """
    Whether f_i(u e_J) -> infinity as u -> infinity, decided on the expression tree.

    :param f: TopicalFn
    :param i: 1-based coordinate
    :param targets: nonempty iterable of 1-based coordinates J
    """
    targets = frozenset(targets)
    if not targets:
        raise ValueError('Divergence needs a nonempty coordinate set')
    if not 1 <= i <= f.dim or not all(1 <= j <= f.dim for j in targets):
        raise ValueError('Coordinates must lie in 1..{}'.format(f.dim))
    return f.coordinate(i).diverges(targets)


def probe_diverges(f, i, targets, scales=PROBE_SCALES, threshold=PROBE_THRESHOLD):
    """
    Numeric counterpart of `diverges`: evaluates f_i(u e_J) along `scales` and reports divergence when the
    values increase and the last increment exceeds `threshold`.
    """
    points = np.stack([indicator(f.dim, targets, scale=float(u)) for u in scales], axis=1)
    values = f.coordinate(i).evaluate(points)
    steps = np.diff(values)
    return bool(np.all(steps >= 0) and steps[-1] > threshold)


def syntactic_graph(f):
    labels = [frozenset([i]) for i in range(1, f.dim + 1)]
    edges = [(i, j - 1) for i, expression in enumerate(f.coords) for j in expression.variables()]
    return Digraph(labels, edges)


def associated_graph(f):
    """
    Edge i -> j iff f_i(u e_j) -> infinity as u -> infinity.
    """
    if is_convex_syntactic(f):
        return syntactic_graph(f)
    labels = [frozenset([i]) for i in range(1, f.dim + 1)]
    edges = [(i - 1, j - 1) for i in range(1, f.dim + 1) for j in f.coordinate(i).variables()
             if f.coordinate(i).diverges(frozenset([j]))]
    return Digraph(labels, edges)


def dual_graph(f):
    return associated_graph(dual(f))


def two_sided_graph(f):
    """
    Edges present in both the associated graph and the dual graph.
    """
    upper = associated_graph(f)
    lower = dual_graph(f)
    return Digraph(upper.labels, upper.edges & lower.edges)


def _next_level(f, condensation):
    labels = condensation.dag.labels
    edges = []
    for x, source in enumerate(labels):
        for y, target in enumerate(labels):
            if any(f.coordinate(i).diverges(target) for i in source):
                edges.append((x, y))
    return Digraph(labels, edges)


def aggregate(f):
    """
    The tower G^1(f), ..., G^N(f) = G^infinity(f). Level k + 1 has the strongly connected components of
    level k as vertices, with an edge X -> Y when f_i diverges on sigma(Y) for some i in sigma(X). The tower
    stops at the first level whose components are all singletons.
    """
    levels = [associated_graph(f)]
    while True:
        condensation = scc_condense(levels[-1])
        if len(condensation.components) == levels[-1].n_vertices:
            break
        levels.append(_next_level(f, condensation))
        logging.debug(u'Aggregation level {} has {} vertices'.format(len(levels), levels[-1].n_vertices))
    return AggregationTower(levels=levels, stabilized_at=len(levels))


def decomposition_witness(f, tower=None):
    """
    A partition (I, J) with f_i(u e_J) bounded for every i in I, or None when G^infinity(f) is strongly
    connected. J is the label of a vertex of G^infinity(f) that no other vertex points to.
    """
    tower = tower or aggregate(f)
    limit = tower.limit
    if limit.n_vertices == 1:
        return None
    sources = [v for v in range(limit.n_vertices)
               if not any(limit.has_edge(u, v) for u in range(limit.n_vertices) if u != v)]
    chosen = sorted(sources, key=lambda v: min(limit.labels[v]))[-1]
    J = limit.labels[chosen]
    I = frozenset(range(1, f.dim + 1)) - J
    for i in I:
        if f.coordinate(i).diverges(J):
            raise AssertionError('Witness check failed for coordinate {}'.format(i))
    return DecompositionWitness(I=I, J=J)


def is_indecomposable(f):
    """
    :returns: (True, None) when G^infinity(f) is strongly connected, otherwise (False, DecompositionWitness)
    """
    tower = aggregate(f)
    if tower.limit.n_vertices == 1:
        return True, None
    witness = decomposition_witness(f, tower=tower)
    logging.debug(u'Function is decomposable with J={}'.format(sorted(witness.J)))
    return False, witness
