# -*- coding: utf-8 -*-
"""
    topicalcore.api
    ~~~~~~~~~~~~~~~

    Signal-emitting entry points over the library. Each operation sends `pre_<op>` before it runs and
    `post_<op>` after it returns, but only when receivers are connected for the sending class.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
from blinker import signal
from . import functions, graphs, solver
from . import recession as recessions

__author__ = 'topicalcore authors'


# Result should always be the first argument to the post_ signals. That way the receivers can check the value before
# continuing execution.
class TopicalAPI(object):

    @classmethod
    def parse(cls, text, name=None, **kwargs):
        if signal('pre_parse').has_receivers_for(cls):
            signal('pre_parse').send(cls, text=text, name=name, **kwargs)

        f = functions.parse(text, name=name)

        if signal('post_parse').has_receivers_for(cls):
            signal('post_parse').send(cls, result=f, text=text, name=name, **kwargs)
        return f

    @classmethod
    def load(cls, path, **kwargs):
        if signal('pre_load').has_receivers_for(cls):
            signal('pre_load').send(cls, path=path, **kwargs)

        f = functions.load(path)

        if signal('post_load').has_receivers_for(cls):
            signal('post_load').send(cls, result=f, path=path, **kwargs)
        return f

    @classmethod
    def associated_graph(cls, f, kind='associated', **kwargs):
        """
        :param kind: one of associated, dual, syntactic, two-sided
        """
        builders = {
            'associated': graphs.associated_graph,
            'dual': graphs.dual_graph,
            'syntactic': graphs.syntactic_graph,
            'two-sided': graphs.two_sided_graph,
        }
        if kind not in builders:
            raise ValueError('Unknown graph kind: {}'.format(kind))

        if signal('pre_associated_graph').has_receivers_for(cls):
            signal('pre_associated_graph').send(cls, f=f, kind=kind, **kwargs)

        g = builders[kind](f)

        if signal('post_associated_graph').has_receivers_for(cls):
            signal('post_associated_graph').send(cls, result=g, f=f, kind=kind, **kwargs)
        return g

    @classmethod
    def aggregate(cls, f, **kwargs):
        if signal('pre_aggregate').has_receivers_for(cls):
            signal('pre_aggregate').send(cls, f=f, **kwargs)

        tower = graphs.aggregate(f)

        if signal('post_aggregate').has_receivers_for(cls):
            signal('post_aggregate').send(cls, result=tower, f=f, **kwargs)
        return tower

    @classmethod
    def is_indecomposable(cls, f, **kwargs):
        if signal('pre_is_indecomposable').has_receivers_for(cls):
            signal('pre_is_indecomposable').send(cls, f=f, **kwargs)

        verdict = graphs.is_indecomposable(f)

        if signal('post_is_indecomposable').has_receivers_for(cls):
            signal('post_is_indecomposable').send(cls, result=verdict, f=f, **kwargs)
        return verdict

    @classmethod
    def eigen_solve(cls, f, tol=solver.DEFAULT_TOL, k_max=solver.DEFAULT_K_MAX, d_cap=solver.DEFAULT_D_CAP,
                    **kwargs):
        if signal('pre_eigen_solve').has_receivers_for(cls):
            signal('pre_eigen_solve').send(cls, f=f, tol=tol, k_max=k_max, d_cap=d_cap, **kwargs)

        report = solver.eigen_solve(f, tol=tol, k_max=k_max, d_cap=d_cap)

        if signal('post_eigen_solve').has_receivers_for(cls):
            signal('post_eigen_solve').send(cls, result=report, f=f, tol=tol, k_max=k_max, d_cap=d_cap, **kwargs)
        return report

    @classmethod
    def cycle_times(cls, f, k_max=solver.DEFAULT_K_MAX, **kwargs):
        if signal('pre_cycle_times').has_receivers_for(cls):
            signal('pre_cycle_times').send(cls, f=f, k_max=k_max, **kwargs)

        estimate = solver.cycle_times(f, k_max=k_max)

        if signal('post_cycle_times').has_receivers_for(cls):
            signal('post_cycle_times').send(cls, result=estimate, f=f, k_max=k_max, **kwargs)
        return estimate

    @classmethod
    def collatz_wielandt(cls, f, samples=solver.DEFAULT_SAMPLES, seed=0, radius=solver.DEFAULT_RADIUS, anchors=(),
                         **kwargs):
        if signal('pre_collatz_wielandt').has_receivers_for(cls):
            signal('pre_collatz_wielandt').send(cls, f=f, samples=samples, seed=seed, **kwargs)

        values = solver.collatz_wielandt(f, samples=samples, seed=seed, anchors=anchors, radius=radius)

        if signal('post_collatz_wielandt').has_receivers_for(cls):
            signal('post_collatz_wielandt').send(cls, result=values, f=f, samples=samples, seed=seed, **kwargs)
        return values

    @classmethod
    def recession(cls, f, scale=recessions.DEFAULT_PROBE_SCALE, seed=0, **kwargs):
        if signal('pre_recession').has_receivers_for(cls):
            signal('pre_recession').send(cls, f=f, **kwargs)

        result = recessions.recession(f, scale=scale, seed=seed)

        if signal('post_recession').has_receivers_for(cls):
            signal('post_recession').send(cls, result=result, f=f, **kwargs)
        return result

    @classmethod
    def slice_certificate(cls, f, trials=recessions.DEFAULT_TRIALS, seed=0,
                          exhaustive_max_dim=recessions.EXHAUSTIVE_MAX_DIM,
                          scale=recessions.DEFAULT_PROBE_SCALE, **kwargs):
        if signal('pre_slice_certificate').has_receivers_for(cls):
            signal('pre_slice_certificate').send(cls, f=f, trials=trials, seed=seed, **kwargs)

        certificate = recessions.slice_bounded_certificate(f, trials=trials, seed=seed,
                                                          exhaustive_max_dim=exhaustive_max_dim, scale=scale)

        if signal('post_slice_certificate').has_receivers_for(cls):
            signal('post_slice_certificate').send(cls, result=certificate, f=f, trials=trials, seed=seed, **kwargs)
        return certificate

    @classmethod
    def diameter_bound(cls, f, lam=None, mu=None, **kwargs):
        """
        Exactly one of `lam` (super-eigenspace) and `mu` (sub-eigenspace) must be given.
        """
        if (lam is None) == (mu is None):
            raise ValueError('Give exactly one of lam and mu')

        if signal('pre_diameter_bound').has_receivers_for(cls):
            signal('pre_diameter_bound').send(cls, f=f, lam=lam, mu=mu, **kwargs)

        if lam is not None:
            bound = solver.super_diameter_bound(f, lam)
        else:
            bound = solver.sub_diameter_bound(f, mu)

        if signal('post_diameter_bound').has_receivers_for(cls):
            signal('post_diameter_bound').send(cls, result=bound, f=f, lam=lam, mu=mu, **kwargs)
        return bound
