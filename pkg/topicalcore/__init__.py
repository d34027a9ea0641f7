# -*- coding: utf-8 -*-
"""
    topicalcore
    ~~~~~~~~~~~

    Topical functions: a small expression language for homogeneous monotone maps, the graphs that decide
    their indecomposability, and numerical tools for eigenvectors, cycle times and slice spaces.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
from types import ModuleType
import sys

__author__ = 'topicalcore authors'

__version__ = '0.2.0'

PACKAGE_NAME = 'topicalcore'

if sys.version_info < (3, 8):  # pragma: no cover
    raise Exception('topicalcore requires Python versions 3.8 or later.')

STATICA_HACK = True
globals()['kcah_acitats'[::-1].upper()] = False
if STATICA_HACK:  # pragma: no cover
    # This is never executed, but tricks static analyzers (PyDev, PyCharm,
    # pylint, etc.) into knowing the types of these symbols, and what
    # they contain.
    from topicalcore.functions import TopicalFn, parse, load, eval_additive, eval_multiplicative, dual, is_convex_syntactic, compose, power, shift, identity, from_matrix  # noqa
    from topicalcore.graphs import Digraph, associated_graph, dual_graph, syntactic_graph, two_sided_graph, scc_condense, aggregate, decomposition_witness, is_indecomposable, diverges, probe_diverges  # noqa
    from topicalcore.metrics import top, bot, sup_norm, hilbert, seminorms, hilbert_metric, projectively_equal  # noqa
    from topicalcore.solver import eigen_solve, orbit, cycle_times, collatz_wielandt, collatz_wielandt_upper, collatz_wielandt_lower, byk_reduce, membership, super_diameter_bound, sub_diameter_bound, coordinate_realization_check  # noqa
    from topicalcore.recession import trivial_eigenspace_check, slice_bounded_certificate  # noqa
    from topicalcore.api import TopicalAPI  # noqa
    from topicalcore.config import load_config, settings_from_config, Settings  # noqa
    from topicalcore.exceptions import TopicalException, DSLSyntaxError, ValidationError, NonFiniteInput, NonPositiveInput, EmptyVector, DimensionMismatch, NonFiniteIterate, PreconditionViolated, BracketFailure, ConfigurationError  # noqa


# import mapping to objects in other modules
all_by_module = {
    '{}.functions'.format(PACKAGE_NAME): ['TopicalFn', 'parse', 'load', 'eval_additive', 'eval_multiplicative', 'dual',
                                          'is_convex_syntactic', 'compose', 'power', 'shift', 'identity',
                                          'from_matrix'],
    '{}.graphs'.format(PACKAGE_NAME): ['Digraph', 'associated_graph', 'dual_graph', 'syntactic_graph',
                                       'two_sided_graph', 'scc_condense', 'aggregate', 'decomposition_witness',
                                       'is_indecomposable', 'diverges', 'probe_diverges'],
    '{}.metrics'.format(PACKAGE_NAME): ['top', 'bot', 'sup_norm', 'hilbert', 'seminorms', 'hilbert_metric',
                                        'projectively_equal'],
    '{}.solver'.format(PACKAGE_NAME): ['eigen_solve', 'orbit', 'cycle_times', 'collatz_wielandt',
                                       'collatz_wielandt_upper', 'collatz_wielandt_lower', 'byk_reduce', 'membership',
                                       'super_diameter_bound', 'sub_diameter_bound', 'coordinate_realization_check'],
    '{}.recession'.format(PACKAGE_NAME): ['trivial_eigenspace_check', 'slice_bounded_certificate'],
    '{}.api'.format(PACKAGE_NAME): ['TopicalAPI'],
    '{}.config'.format(PACKAGE_NAME): ['load_config', 'settings_from_config', 'Settings'],
    '{}.exceptions'.format(PACKAGE_NAME): ['TopicalException', 'DSLSyntaxError', 'ValidationError', 'NonFiniteInput',
                                           'NonPositiveInput', 'EmptyVector', 'DimensionMismatch', 'NonFiniteIterate',
                                           'PreconditionViolated', 'BracketFailure', 'ConfigurationError'],
}

# modules that should be imported when accessed as attributes of topicalcore
attribute_modules = frozenset(['recession', 'cli', 'tools'])

object_origins = {}
for module, items in all_by_module.items():
    for item in items:
        object_origins[item] = module


class module(ModuleType):
    """Automatically import objects from the modules."""

    def __getattr__(self, name):
        if name in object_origins:
            module = __import__(object_origins[name], None, None, [name])
            for extra_name in all_by_module[module.__name__]:
                setattr(self, extra_name, getattr(module, extra_name))
            return getattr(module, name)
        elif name in attribute_modules:
            __import__('{}.{}'.format(PACKAGE_NAME, name))
        return ModuleType.__getattribute__(self, name)

    def __dir__(self):
        """Just show what we want to show."""
        result = list(new_module.__all__)
        result.extend(('__file__', '__path__', '__doc__', '__all__',
                       '__docformat__', '__name__', '__path__',
                       '__package__', '__version__'))
        return result


# keep a reference to this module so that it's not garbage collected
old_module = sys.modules[PACKAGE_NAME]


# setup the new module and patch it into the dict of loaded modules
new_module = sys.modules[PACKAGE_NAME] = module(PACKAGE_NAME)
new_module.__dict__.update({
    '__file__': __file__,
    '__package__': PACKAGE_NAME,
    '__path__': __path__,
    '__doc__': __doc__,
    '__version__': __version__,
    '__all__': tuple(object_origins) + tuple(attribute_modules),
    '__docformat__': 'restructuredtext en'
})
