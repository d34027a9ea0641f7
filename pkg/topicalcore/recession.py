# -*- coding: utf-8 -*-
"""
    topicalcore.recession
    ~~~~~~~~~~~~~~~~~~~~~

    Recession functions fhat(x) = lim t^-1 f(t x) and the certificate for bounded slice spaces.

    Within the expression grammar the limit always exists and is computed node by node: constants vanish,
    lin becomes max, har becomes min, and max, min and geo keep their shape.

    When every eigenvector of fhat is trivial (a multiple of the all-ones vector) every slice space of f is
    bounded in the Hilbert semi-norm. Nontriviality is certified by an explicit witness; triviality is only
    ever supported by evidence, strengthened by iterating fhat from every indicator vector e_J.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import logging
from collections import namedtuple
import numpy as np
from .functions import TopicalFn, eval_additive
from .solver import eigen_solve
from .tools import random_points
from ._internal import indicator, indicator_subsets

__author__ = 'topicalcore authors'

SYMBOLIC = 'symbolic'

CERTIFIED_NONTRIVIAL = 'certified_nontrivial'
EVIDENCE_TRIVIAL = 'evidence_trivial'

BOUNDED_CERTIFIED = 'bounded_certified'
INCONCLUSIVE = 'inconclusive'

DEFAULT_PROBE_SCALE = 2 ** 16
DEFAULT_TRIALS = 32
EXHAUSTIVE_MAX_DIM = 16
WITNESS_RESIDUAL = 1e-9
WITNESS_DIAMETER = 1e-6


class RecessionResult(namedtuple('RecessionResult', 'fhat method numeric_agreement')):
    __slots__ = ()

    def as_dict(self):
        return {'fhat': self.fhat.to_source(), 'method': self.method, 'numeric_agreement': self.numeric_agreement}


class TrivialityCheck(namedtuple('TrivialityCheck', 'status witness starts')):
    """
    starts counts the starting points tried before the verdict.
    """
    __slots__ = ()

    def as_dict(self):
        return {
            'status': self.status,
            'witness': None if self.witness is None else [float(v) for v in self.witness],
            'starts': self.starts,
        }


class SliceCertificate(namedtuple('SliceCertificate', 'status recession triviality')):
    __slots__ = ()

    @property
    def bounded_certified(self):
        return self.status == BOUNDED_CERTIFIED

    def as_dict(self):
        witness = None if self.triviality is None else self.triviality.witness
        return {
            'status': self.status,
            'bounded_certified': self.bounded_certified,
            'fhat': self.recession.fhat.to_source(),
            'witness': None if witness is None else [float(v) for v in witness],
        }


def recession(f, samples=20, seed=0, scale=DEFAULT_PROBE_SCALE, radius=10.0):
    """
    Symbolic recession function of f, with the largest deviation of t^-1 f(t x) from fhat(x) at t = `scale`
    over `samples` seeded points of [-radius, radius]^n.

    :returns RecessionResult:
    """
    fhat = TopicalFn([expression.recession() for expression in f.coords], dim=f.dim,
                     name='recession of {}'.format(f.name) if f.name else None)
    points = random_points(np.random.default_rng(seed), f.dim, samples, radius=radius)
    agreement = float(np.max(np.abs(eval_additive(f, scale * points) / scale - eval_additive(fhat, points))))
    logging.debug(u'Recession agrees with scaled function to {!r} at t={}'.format(agreement, scale))
    return RecessionResult(fhat=fhat, method=SYMBOLIC, numeric_agreement=agreement)


def _starting_points(dim, trials, seed, exhaustive_max_dim):
    if dim <= exhaustive_max_dim:
        for subset in indicator_subsets(dim):
            yield indicator(dim, subset)
    rng = np.random.default_rng(seed)
    for start in rng.uniform(-1.0, 1.0, size=(trials, dim)):
        yield start


def trivial_eigenspace_check(fhat, trials=DEFAULT_TRIALS, seed=0, tol=1e-9, k_max=2000,
                             exhaustive_max_dim=EXHAUSTIVE_MAX_DIM):
    """
    Look for a fixed point of fhat that is not a constant vector, starting from every e_J and from `trials`
    seeded random points.

    :returns TrivialityCheck: `certified_nontrivial` with a verified witness, else `evidence_trivial`
    """
    starts = 0
    for start in _starting_points(fhat.dim, trials, seed, exhaustive_max_dim):
        starts += 1
        report = eigen_solve(fhat, tol=tol, k_max=k_max, x0=start)
        if not report.converged:
            continue
        v = report.eigenvector
        residual = float(np.max(np.abs(eval_additive(fhat, v) - v)))
        if residual <= WITNESS_RESIDUAL and np.ptp(v) > WITNESS_DIAMETER:
            logging.debug(u'Nontrivial fixed point of recession function after {} starts'.format(starts))
            return TrivialityCheck(status=CERTIFIED_NONTRIVIAL, witness=v, starts=starts)
    return TrivialityCheck(status=EVIDENCE_TRIVIAL, witness=None, starts=starts)


def _collapses(fhat, start, tol, k_max):
    y = start
    for _ in range(k_max):
        if np.ptp(y) <= tol:
            return True
        y = eval_additive(fhat, y)
        y = y - np.min(y)
    return bool(np.ptp(y) <= tol)


def slice_bounded_certificate(f, trials=DEFAULT_TRIALS, seed=0, tol=1e-9, k_max=2000,
                              exhaustive_max_dim=EXHAUSTIVE_MAX_DIM, scale=DEFAULT_PROBE_SCALE):
    """
    `bounded_certified` when fhat shows only trivial fixed points and its orbit from every e_J collapses to
    a constant vector; every slice space of f is then bounded. Anything else is `inconclusive`.

    :param scale: probe scale of the numeric recession check
    :returns SliceCertificate:
    """
    result = recession(f, seed=seed, scale=scale)
    fhat = result.fhat
    if fhat.dim > exhaustive_max_dim:
        logging.debug(u'Dimension {} too large for the indicator sweep'.format(fhat.dim))
        return SliceCertificate(status=INCONCLUSIVE, recession=result, triviality=None)

    triviality = trivial_eigenspace_check(fhat, trials=trials, seed=seed, tol=tol, k_max=k_max,
                                          exhaustive_max_dim=exhaustive_max_dim)
    if triviality.status != EVIDENCE_TRIVIAL:
        return SliceCertificate(status=INCONCLUSIVE, recession=result, triviality=triviality)

    for subset in indicator_subsets(fhat.dim):
        if not _collapses(fhat, indicator(fhat.dim, subset), tol, k_max):
            logging.debug(u'Orbit of e_{} under the recession function did not collapse'.format(sorted(subset)))
            return SliceCertificate(status=INCONCLUSIVE, recession=result, triviality=triviality)

    logging.debug(u'Slice spaces certified bounded')
    return SliceCertificate(status=BOUNDED_CERTIFIED, recession=result, triviality=triviality)
