# -*- coding: utf-8 -*-
"""
    topicalcore.solver
    ~~~~~~~~~~~~~~~~~~

    Orbits, cycle times, Collatz-Wielandt values, eigenvectors and the sub/super-eigenspace tools.

    All points are additive. An eigenvector v with eigenvalue lam satisfies f(v) = v + lam; in the
    multiplicative picture that is f(e^v) = e^lam e^v.

    The eigenvector search iterates f with the bottom coordinate renormalised to zero after every step.
    When the orbit neither settles nor escapes, the coordinatewise minimum of x_k - k*lam over the tail of
    the orbit is a vector u with f(u) <= u + lam, and iterating from u decreases monotonically onto an
    eigenvector. A growing orbit yields `diverged_orbit`, which says no more than that no bounded orbit was
    seen up to the horizon.

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import logging
from collections import namedtuple
import numpy as np
from .exceptions import NonFiniteIterate, PreconditionViolated, BracketFailure
from .functions import eval_additive, dual
from .graphs import associated_graph
from ._internal import as_point

__author__ = 'topicalcore authors'

CONVERGED = 'converged'
DIVERGED_ORBIT = 'diverged_orbit'
MAX_ITER = 'max_iter'

DEFAULT_TOL = 1e-9
DEFAULT_K_MAX = 10000
DEFAULT_D_CAP = 1e6
DEFAULT_SAMPLES = 1000
DEFAULT_RADIUS = 10.0

# iteration stops early once the residual drops below tol * SHARPEN
SHARPEN = 1e-3
RESIDUAL_FLOOR = 1e-13
STALL_STEPS = 50
MIN_PERIOD_WINDOW = 16
# restarts from the tail minimum, each with a budget of k_max steps
MAX_PHASES = 6

BISECTION_STEPS = 80
MAX_BRACKET_DOUBLINGS = 1000
PRECONDITION_TOLERANCE = 1e-12

# outcomes of a single iteration run
_FIXED, _PERIODIC, _ESCAPED, _EXHAUSTED = 'fixed', 'periodic', 'escaped', 'exhausted'


class OrbitTrace(namedtuple('OrbitTrace', 'start iterates hilbert_diameters top_over_k bot_over_k')):
    """
    iterates[k] = f^k(start) for k = 0..k_max; top_over_k[k - 1] = top(f^k(start)) / k.
    """
    __slots__ = ()


class CycleTimes(namedtuple('CycleTimes', 'upper lower upper_tail lower_tail horizon')):
    __slots__ = ()

    def as_dict(self):
        return {
            'chi_upper': self.upper,
            'chi_lower': self.lower,
            'chi_upper_tail': self.upper_tail,
            'chi_lower_tail': self.lower_tail,
            'horizon': self.horizon,
        }


class EigenReport(namedtuple('EigenReport', 'status eigenvalue_additive eigenvector residual_sup iterations '
                                            'cw_lower cw_upper')):
    __slots__ = ()

    @property
    def converged(self):
        return self.status == CONVERGED

    @property
    def eigenvalue_multiplicative(self):
        with np.errstate(over='ignore'):
            value = float(np.exp(self.eigenvalue_additive))
        return value if np.isfinite(value) else None

    @property
    def eigenvector_multiplicative(self):
        with np.errstate(over='ignore'):
            vector = np.exp(self.eigenvector)
        return vector if np.all(np.isfinite(vector)) else None

    def as_dict(self):
        multiplicative = self.eigenvector_multiplicative
        return {
            'status': self.status,
            'eigenvalue_additive': self.eigenvalue_additive,
            'eigenvalue_multiplicative': self.eigenvalue_multiplicative,
            'eigenvector_additive': [float(v) for v in self.eigenvector],
            'eigenvector_multiplicative': None if multiplicative is None else [float(v) for v in multiplicative],
            'residual_sup': self.residual_sup,
            'iterations': self.iterations,
            'cw_lower': self.cw_lower,
            'cw_upper': self.cw_upper,
        }


class CollatzWielandt(namedtuple('CollatzWielandt', 'upper lower samples seed')):
    __slots__ = ()

    def as_dict(self):
        return {'cw_upper': self.upper, 'cw_lower': self.lower, 'samples': self.samples, 'seed': self.seed}


class Membership(namedtuple('Membership', 'in_super in_sub in_slice slack')):
    __slots__ = ()

    def as_dict(self):
        return {'in_super': self.in_super, 'in_sub': self.in_sub, 'in_slice': self.in_slice,
                'slack': [float(s) for s in self.slack]}


class DiameterBound(namedtuple('DiameterBound', 'value bounded')):
    """
    bounded is False when the relevant graph is not strongly connected; value is then None and no claim is
    made.
    """
    __slots__ = ()

    def as_dict(self):
        return {'bound': self.value, 'bounded': self.bounded}


class CoordinateRealization(namedtuple('CoordinateRealization', 'coordinate qualifying chi horizon')):
    __slots__ = ()

    def as_dict(self):
        return dict(self._asdict())


_Run = namedtuple('_Run', 'outcome steps ys shifts best best_residual period')


def _apply(f, y, step):
    fy = np.array([expression.evaluate(y) for expression in f.coords], dtype=float)
    if not np.all(np.isfinite(fy)):
        raise NonFiniteIterate('Iterate {} is not finite'.format(step), step=step)
    return fy


def _run(f, start, tol, budget, d_cap):
    """
    Normalised iteration from `start` for at most `budget` steps. Row k of `ys` is f^k(start) shifted so
    that its bottom is zero; shifts[k] is the amount removed, so ys[k] + shifts[k] = f^k(start).
    """
    n = f.dim
    tight = max(tol * SHARPEN, RESIDUAL_FLOOR)
    window = max(MIN_PERIOD_WINDOW, 2 * n)
    ys = np.empty((budget + 1, n))
    shifts = np.empty(budget + 1)

    low = float(np.min(start))
    y = start - low
    ys[0] = y
    shifts[0] = low
    best, best_residual, best_step = y, np.inf, 0

    for k in range(budget):
        fy = _apply(f, y, k + 1)
        d = fy - y
        residual = float(np.max(np.abs(d - np.mean(d))))
        if residual < best_residual:
            best, best_residual, best_step = y, residual, k
        if residual <= tight or (best_residual <= tol and k - best_step >= STALL_STEPS):
            return _Run(_FIXED, k, ys[:k + 1], shifts[:k + 1], best, best_residual, None)

        low = float(np.min(fy))
        y = fy - low
        ys[k + 1] = y
        shifts[k + 1] = shifts[k] + low
        if y.max() > d_cap:
            return _Run(_ESCAPED, k + 1, ys[:k + 2], shifts[:k + 2], best, best_residual, None)

        first = max(0, k + 1 - window)
        gaps = np.max(np.abs(ys[first:k + 1] - y), axis=1)
        hits = np.nonzero(gaps <= tight)[0]
        if hits.size:
            period = k + 1 - (first + int(hits[-1]))
            return _Run(_PERIODIC, k + 1, ys[:k + 2], shifts[:k + 2], best, best_residual, period)

    return _Run(_EXHAUSTED, budget, ys, shifts, best, best_residual, None)


def _growing(run, tol):
    """
    Diameter nondecreasing over the last quarter of the run and grown by more than tol.
    """
    diameters = run.ys.max(axis=1)
    q = max(2, len(diameters) // 4)
    tail = diameters[-q:]
    slack = max(tol * SHARPEN, RESIDUAL_FLOOR)
    return bool(np.all(np.diff(tail) >= -slack) and tail[-1] - tail[0] > tol)


def _tail_minimum(run):
    """
    Estimate the eigenvalue from the run, then take the coordinatewise minimum of x_k - k*lam over the
    last period (periodic runs) or the last half of the run.

    :returns: (lam, u)
    """
    K = run.steps
    if run.period:
        p = run.period
        lam = (run.shifts[K] - run.shifts[K - p] + float(np.mean(run.ys[K] - run.ys[K - p]))) / p
        first = K - p + 1
    else:
        tops = run.ys.max(axis=1) + run.shifts
        q = max(1, K // 4)
        lam = (tops[K] - tops[K - q]) / q
        first = K // 2
    steps = np.arange(first, K + 1)
    offsets = run.shifts[first:K + 1] - steps * lam
    u = np.min(run.ys[first:K + 1] + offsets[:, None], axis=0)
    return float(lam), u


def _report(f, status, v, iterations):
    v = v - np.min(v)
    d = _apply(f, v, iterations) - v
    lam = float(np.mean(d))
    return EigenReport(
        status=status,
        eigenvalue_additive=lam,
        eigenvector=v,
        residual_sup=float(np.max(np.abs(d - lam))),
        iterations=iterations,
        cw_lower=float(np.min(d)),
        cw_upper=float(np.max(d)),
    )


def eigen_solve(f, tol=DEFAULT_TOL, k_max=DEFAULT_K_MAX, d_cap=DEFAULT_D_CAP, x0=None):
    """
    Search for an additive eigenvector of f.

    :param tol: residual ||f(v) - v - lam||_inf required for `converged`
    :param k_max: iteration budget for each restart phase; at most MAX_PHASES phases run
    :param d_cap: Hilbert diameter beyond which the orbit counts as escaping
    :param x0: optional additive starting point (default 0)
    :returns EigenReport:
    """
    if not tol > 0:
        raise ValueError('Tolerance must be positive, got {}'.format(tol))
    if k_max < 1:
        raise ValueError('k_max must be at least 1, got {}'.format(k_max))
    start = np.zeros(f.dim) if x0 is None else as_point(x0, dim=f.dim, allow_batch=False)

    iterations = 0
    best, best_residual = start, np.inf
    for phase in range(1, MAX_PHASES + 1):
        run = _run(f, start, tol, k_max, d_cap)
        iterations += run.steps
        logging.debug(u'Phase {} ended {} after {} steps'.format(phase, run.outcome, run.steps))
        if run.outcome == _FIXED:
            return _report(f, CONVERGED, run.best, iterations)
        if run.best_residual < best_residual:
            best, best_residual = run.best, run.best_residual
        if run.outcome == _ESCAPED or (run.outcome == _EXHAUSTED and _growing(run, tol)):
            if phase == 1:
                return _report(f, DIVERGED_ORBIT, run.ys[-1], iterations)
            break

        # periodic or slowly settling: restart from the running minimum of x_k - k*lam
        lam, start = _tail_minimum(run)
        logging.debug(u'Restarting from tail minimum with eigenvalue estimate {!r}'.format(lam))

    return _report(f, CONVERGED if best_residual <= tol else MAX_ITER, best, iterations)


def orbit(f, x0, k_max):
    """
    The orbit x0, f(x0), ..., f^k_max(x0).

    :raises NonFiniteIterate: an iterate left the reals
    """
    if k_max < 1:
        raise ValueError('k_max must be at least 1, got {}'.format(k_max))
    x = as_point(x0, dim=f.dim, allow_batch=False)
    iterates = np.empty((k_max + 1, f.dim))
    iterates[0] = x
    for k in range(1, k_max + 1):
        x = _apply(f, x, k)
        iterates[k] = x
    tops = iterates.max(axis=1)
    bots = iterates.min(axis=1)
    ks = np.arange(1, k_max + 1)
    return OrbitTrace(start=iterates[0].copy(), iterates=iterates, hilbert_diameters=tops - bots,
                      top_over_k=tops[1:] / ks, bot_over_k=bots[1:] / ks)


def cycle_times(f, k_max=DEFAULT_K_MAX, x0=None):
    """
    Estimates of the upper and lower cycle times: top(f^k(x0))/k and bot(f^k(x0))/k at k = k_max, and the
    slopes of top and bot over the last quarter of the orbit.
    """
    if k_max < 1:
        raise ValueError('k_max must be at least 1, got {}'.format(k_max))
    x = np.zeros(f.dim) if x0 is None else as_point(x0, dim=f.dim, allow_batch=False)
    tops = np.empty(k_max + 1)
    bots = np.empty(k_max + 1)
    tops[0], bots[0] = x.max(), x.min()
    for k in range(1, k_max + 1):
        x = _apply(f, x, k)
        tops[k], bots[k] = x.max(), x.min()
    q = max(1, k_max // 4)
    return CycleTimes(
        upper=float(tops[k_max] / k_max),
        lower=float(bots[k_max] / k_max),
        upper_tail=float((tops[k_max] - tops[k_max - q]) / q),
        lower_tail=float((bots[k_max] - bots[k_max - q]) / q),
        horizon=k_max,
    )


def _sample_points(f, samples, seed, anchors, radius):
    if samples < 1:
        raise ValueError('At least one sample is needed, got {}'.format(samples))
    rng = np.random.default_rng(seed)
    points = [np.zeros(f.dim)]
    points.extend(as_point(anchor, dim=f.dim, allow_batch=False) for anchor in anchors)
    points.extend(rng.uniform(-radius, radius, size=(samples, f.dim)))
    return np.column_stack(points)


def collatz_wielandt_upper(f, samples=DEFAULT_SAMPLES, seed=0, anchors=(), radius=DEFAULT_RADIUS):
    """
    min over sampled x of top(f(x) - x). Every value is an upper bound on the upper cycle time; the sample
    always contains 0 and the given anchors.
    """
    points = _sample_points(f, samples, seed, anchors, radius)
    return float(np.min(np.max(eval_additive(f, points) - points, axis=0)))


def collatz_wielandt_lower(f, samples=DEFAULT_SAMPLES, seed=0, anchors=(), radius=DEFAULT_RADIUS):
    """
    max over sampled x of bot(f(x) - x), a lower bound on the lower cycle time.
    """
    points = _sample_points(f, samples, seed, anchors, radius)
    return float(np.max(np.min(eval_additive(f, points) - points, axis=0)))


def collatz_wielandt(f, samples=DEFAULT_SAMPLES, seed=0, anchors=(), radius=DEFAULT_RADIUS):
    points = _sample_points(f, samples, seed, anchors, radius)
    slack = eval_additive(f, points) - points
    return CollatzWielandt(upper=float(np.min(np.max(slack, axis=0))), lower=float(np.max(np.min(slack, axis=0))),
                           samples=samples, seed=seed)


def byk_reduce(f, x, k, lam):
    """
    From x with f^k(x) <= x + lam, build y = min_j (f^j(x) - j*lam/k), j = 0..k-1, which satisfies
    f(y) <= y + lam/k.

    :raises PreconditionViolated: f^k(x) exceeds x + lam on some coordinate
    """
    if k < 1:
        raise ValueError('k must be at least 1, got {}'.format(k))
    x = as_point(x, dim=f.dim, allow_batch=False)
    iterates = [x]
    for step in range(1, k + 1):
        iterates.append(_apply(f, iterates[-1], step))

    excess = iterates[k] - x - lam
    worst = int(np.argmax(excess))
    if excess[worst] > PRECONDITION_TOLERANCE:
        raise PreconditionViolated('f^{}(x) exceeds x + {!r} at coordinate {} by {!r}'.format(
            k, lam, worst + 1, float(excess[worst])), coordinate=worst + 1, excess=float(excess[worst]))

    return np.min([iterates[j] - j * lam / k for j in range(k)], axis=0)


def membership(f, x, lam=None, mu=None, tol=PRECONDITION_TOLERANCE):
    """
    Test x against S^lam = {f(x) <= x + lam} and S_mu = {f(x) >= x + mu}. Tests for a bound that is not
    given come back as None.
    """
    if lam is None and mu is None:
        raise ValueError('Give at least one of lam and mu')
    x = as_point(x, dim=f.dim, allow_batch=False)
    slack = eval_additive(f, x) - x
    in_super = None if lam is None else bool(np.all(slack <= lam + tol))
    in_sub = None if mu is None else bool(np.all(slack >= mu - tol))
    in_slice = None if in_super is None or in_sub is None else in_super and in_sub
    return Membership(in_super=in_super, in_sub=in_sub, in_slice=in_slice, slack=slack)


def _level_bound(f, i, j, t, lam):
    """
    sup{u >= 0 : f_i(u e_j) <= lam + t} by bisection, or None when already f_i(0) > lam + t.
    Returns the upper end of the final bracket.
    """
    expression = f.coordinate(i)
    target = lam + t
    point = np.zeros(f.dim)

    def level(u):
        point[j - 1] = u
        return expression.evaluate(point)

    if level(0.0) > target:
        return None
    lo, hi = 0.0, 1.0
    doublings = 0
    while level(hi) <= target:
        lo, hi = hi, hi * 2.0
        doublings += 1
        if doublings > MAX_BRACKET_DOUBLINGS or not np.isfinite(hi):
            raise BracketFailure('Could not bracket level {!r} of coordinate {} along x{}'.format(
                target, i, j), coordinate=i, target=target)
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if level(mid) <= target:
            lo = mid
        else:
            hi = mid
    return hi


def _chain_bound(f, graph, base, lam):
    """
    Upper bounds on x_j for x in S^lam with x >= 0 and x_base = 0, composed along the edges of `graph`.
    None when no such x exists.
    """
    bounds = {base: 0.0}
    for _ in range(max(1, f.dim - 1)):
        changed = False
        for u, v in sorted(graph.edges):
            i, j = u + 1, v + 1
            if i not in bounds:
                continue
            h = _level_bound(f, i, j, bounds[i], lam)
            if h is None:
                return None
            if j != base and (j not in bounds or h < bounds[j]):
                bounds[j] = h
                changed = True
        if not changed:
            break
    return max(bounds.values())


def super_diameter_bound(f, lam):
    """
    A bound B with hilbert(x) <= B for every x in S^lam(f), valid when the associated graph is strongly
    connected. An empty S^lam gives B = 0.
    """
    graph = associated_graph(f)
    if not graph.is_strongly_connected():
        return DiameterBound(value=None, bounded=False)
    bound = 0.0
    for base in range(1, f.dim + 1):
        chain = _chain_bound(f, graph, base, lam)
        if chain is not None:
            bound = max(bound, chain)
    logging.debug(u'Super-eigenspace bound at level {!r} is {!r}'.format(lam, bound))
    return DiameterBound(value=float(bound), bounded=True)


def sub_diameter_bound(f, mu):
    """
    Bound for S_mu(f) = -S^{-mu}(f-), valid when the dual graph is strongly connected.
    """
    return super_diameter_bound(dual(f), -mu)


def _cycle_time_estimate(f, horizon):
    report = eigen_solve(f, k_max=max(20 * horizon, 1000))
    if report.converged:
        return report.eigenvalue_additive
    return cycle_times(f, k_max=max(20 * horizon, 1000)).upper_tail


def coordinate_realization_check(f, x, k_max=200, tol=1e-6, chi=None):
    """
    Find coordinates i with f_i^k(x) >= x_i + k*chi - tol for every k <= k_max. `chi` defaults to the
    eigenvalue when an eigenvector is found, and to the tail cycle-time estimate otherwise. An empty result
    only means the estimate did not certify a coordinate at this horizon.
    """
    if k_max < 1:
        raise ValueError('k_max must be at least 1, got {}'.format(k_max))
    x = as_point(x, dim=f.dim, allow_batch=False)
    if chi is None:
        chi = _cycle_time_estimate(f, k_max)
    trace = orbit(f, x, k_max)
    ks = np.arange(1, k_max + 1)
    margins = trace.iterates[1:] - x - ks[:, None] * chi
    qualifying = [i + 1 for i in range(f.dim) if np.min(margins[:, i]) >= -tol]
    return CoordinateRealization(coordinate=qualifying[0] if qualifying else None, qualifying=qualifying,
                                 chi=float(chi), horizon=k_max)
