# -*- coding: utf-8 -*-
"""
    topicalcore.tests.test_api
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    :copyright: (c) 2026 by the topicalcore authors
    :license: LGPL
"""
import importlib
import pkgutil
import unittest
from blinker import signal
import topicalcore
from topicalcore.tests.corpus import fixture, fixture_path

__author__ = 'topicalcore authors'

OPERATIONS = ['parse', 'load', 'associated_graph', 'aggregate', 'is_indecomposable', 'eigen_solve', 'cycle_times',
              'collatz_wielandt', 'recession', 'slice_certificate', 'diameter_bound']


class TestSignals(unittest.TestCase):
    """
    Every API operation announces itself through pre_ and post_ signals for the sending class.
    """
    def setUp(self):
        class SubscribedAPI(topicalcore.TopicalAPI):
            pass

        self.api = SubscribedAPI
        self.received = []
        for operation in OPERATIONS:
            for hook in ('pre', 'post'):
                signal('{}_{}'.format(hook, operation)).connect(self.signal_subscriber, sender=SubscribedAPI)

    def tearDown(self):
        for operation in OPERATIONS:
            for hook in ('pre', 'post'):
                signal('{}_{}'.format(hook, operation)).disconnect(self.signal_subscriber, sender=self.api)

    def signal_subscriber(self, sender, **kwargs):
        self.received.append((sender, kwargs))
        return u'Received! kwargs: {}'.format(kwargs)

    def test_signal_inactive(self):
        topicalcore.TopicalAPI.eigen_solve(fixture('swap'))
        self.assertEqual(self.received, [], u'Unsubscribed sender should not emit')

    def test_parse(self):
        f = self.api.parse('dim 1\n1: x1\n', name='identity')
        self.assertEqual(len(self.received), 2, u'Signal count mismatch')
        self.assertEqual(self.received[0][1], {'text': 'dim 1\n1: x1\n', 'name': 'identity'}, u'Pre signal mismatch')
        self.assertIs(self.received[1][1]['result'], f, u'Post signal mismatch')

    def test_load(self):
        f = self.api.load(fixture_path('swap'))
        self.assertEqual(self.received[0][1]['path'], fixture_path('swap'), u'Pre signal mismatch')
        self.assertIs(self.received[1][1]['result'], f, u'Post signal mismatch')

    def test_eigen_solve(self):
        report = self.api.eigen_solve(fixture('eq-example2'), tol=1e-10)
        pre, post = self.received
        self.assertIs(pre[0], self.api, u'Sender mismatch')
        self.assertEqual(pre[1]['tol'], 1e-10, u'Pre signal mismatch')
        self.assertNotIn('result', pre[1], u'Pre signal mismatch')
        self.assertIs(post[1]['result'], report, u'Post signal mismatch')
        self.assertTrue(report.converged, u'Result mismatch')

    def test_extra_arguments_are_forwarded(self):
        self.api.aggregate(fixture('eq-example'), request_id='abc')
        self.assertEqual(self.received[0][1]['request_id'], 'abc', u'Pre signal mismatch')
        self.assertEqual(self.received[1][1]['request_id'], 'abc', u'Post signal mismatch')
        self.assertEqual(self.received[1][1]['result'].stabilized_at, 4, u'Result mismatch')

    def test_graph_kinds(self):
        g = self.api.associated_graph(fixture('eq-example2'), kind='dual')
        self.assertEqual(self.received[1][1]['kind'], 'dual', u'Post signal mismatch')
        self.assertEqual(g, topicalcore.dual_graph(fixture('eq-example2')), u'Graph mismatch')
        with self.assertRaises(ValueError):
            self.api.associated_graph(fixture('swap'), kind='unknown')

    def test_diameter_bound(self):
        bound = self.api.diameter_bound(fixture('swap'), lam=1.0)
        self.assertEqual(self.received[1][1]['result'], bound, u'Post signal mismatch')
        self.assertTrue(bound.bounded, u'Result mismatch')
        with self.assertRaises(ValueError):
            self.api.diameter_bound(fixture('swap'))
        with self.assertRaises(ValueError):
            self.api.diameter_bound(fixture('swap'), lam=1.0, mu=0.0)

    def test_remaining_operations(self):
        f = fixture('e-ill2')
        self.api.is_indecomposable(f)
        self.api.cycle_times(f, k_max=50)
        self.api.collatz_wielandt(f, samples=10)
        self.api.recession(f)
        self.api.slice_certificate(f)
        names = [kwargs['result'].__class__.__name__ for _, kwargs in self.received if 'result' in kwargs]
        self.assertEqual(names, ['tuple', 'CycleTimes', 'CollatzWielandt', 'RecessionResult', 'SliceCertificate'],
                         u'Post signal mismatch')


class TestModules(unittest.TestCase):

    def test_author(self):
        names = ['topicalcore.' + name for _, name, _ in pkgutil.iter_modules(topicalcore.__path__)]
        names += ['topicalcore.tests.' + name for _, name, _ in pkgutil.iter_modules(topicalcore.tests.__path__)]
        for name in names:
            module = importlib.import_module(name)
            self.assertEqual(getattr(module, '__author__', None), 'topicalcore authors',
                             u'Author mismatch for {}'.format(name))


if __name__ == '__main__':
    unittest.main()
