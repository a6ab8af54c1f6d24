# Copyright 2026, Edge State Entanglement Project
"""
Command line interface test facilities.
"""

import csv
import json
import math
import os
import tempfile
import unittest

from tee.edgestate.cli import (EXIT_DOMAIN, EXIT_RESOURCE, EXIT_SUCCESS,
                               ExperimentConfig, build_parser, main, run)
from tee.edgestate.error import ConfigError
from tee.edgestate.run import RunRegistry
from tee.edgestate.status import EStatus


class CLITestCase(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.tmpdir.name, 'out')

    # setUp ()

    def tearDown(self):
        self.tmpdir.cleanup()

    def load(self):
        with open(self.out) as ifd:
            return json.load(ifd)

    def test_tee(self):
        code = main(['tee', '--model', 'toric', '--method', 'levin-wen',
                     '--out', self.out])
        self.assertEqual(code, EXIT_SUCCESS)
        record = self.load()
        self.assertEqual(record['experiment'], 'tee')
        self.assertAlmostEqual(record['results']['gamma'], math.log(2.),
                               places=8)
        self.assertEqual(len(record['config_hash']), 64)

    def test_csv(self):
        code = main(['tee', '--model', 'toric', '--method',
                     'kitaev-preskill', '--format', 'csv', '--out',
                     self.out])
        self.assertEqual(code, EXIT_SUCCESS)
        with open(self.out, newline='') as ifd:
            rows = list(csv.reader(ifd))
        self.assertEqual(rows[0], ['method', 'scale', 'gamma'])
        self.assertEqual(rows[1][:2], ['kitaev-preskill', '1'])
        self.assertAlmostEqual(float(rows[1][2]), math.log(2.), places=8)

    def test_missing_seed(self):
        self.assertEqual(main(['tee', '--model', 'random']), EXIT_DOMAIN)

    def test_resource(self):
        self.assertEqual(main(['tee', '--model', 'toric', '--Lx', '4',
                               '--Ly', '4']), EXIT_RESOURCE)

    def test_spectrum_match(self):
        code = main(['spectrum-match', '--Lambda', '50', '100', '--out',
                     self.out])
        self.assertEqual(code, EXIT_SUCCESS)
        matches = self.load()['results']['matches']
        self.assertEqual([m['vacuous'] for m in matches], [True, False])
        self.assertAlmostEqual(matches[1]['l1_distance'], 0., places=6)

    def test_config_file(self):
        path = os.path.join(self.tmpdir.name, 'config.json')
        with open(path, 'w') as ofd:
            json.dump({'d': 2, 'bond': 2, 'm': 1, 'lengths': [5, 6, 7]},
                      ofd)
        code = main(['mps-converge', '--config', path, '--seed', '3',
                     '--out', self.out])
        self.assertEqual(code, EXIT_SUCCESS)
        record = self.load()
        self.assertEqual(record['config']['seed'], 3)
        self.assertEqual(record['results']['lengths'], [5, 6, 7])

    def test_registry(self):
        url = 'sqlite:///{}'.format(os.path.join(self.tmpdir.name, 'db'))
        code = main(['tee', '--model', 'toric', '--db', url, '--out',
                     self.out])
        self.assertEqual(code, EXIT_SUCCESS)
        registry = RunRegistry(url)
        run_, = registry.runs()
        self.assertEqual(run_.status.state, EStatus.COMPLETE)
        self.assertEqual(run_.confighash, self.load()['config_hash'])
        self.assertAlmostEqual(run_.results['gamma'], math.log(2.),
                               places=8)
        self.assertEqual(run_.settings['cutoff'], 50.)
        registry.engine.dispose()

# class CLITestCase


class ExperimentConfigTestCase(unittest.TestCase):

    def config(self, argv):
        return ExperimentConfig.from_args(build_parser().parse_args(argv))

    def test_hash(self):
        base = self.config(['tee', '--model', 'toric'])
        runtime = self.config(['tee', '--model', 'toric', '--out', 'x.json',
                               '--threads', '2', '--format', 'csv', '-v'])
        self.assertEqual(base.hash, runtime.hash)
        other = self.config(['tee', '--model', 'toric', '--scale', '2'])
        self.assertNotEqual(base.hash, other.hash)

    def test_defaults(self):
        config = ExperimentConfig('spectrum-match', {})
        self.assertEqual(config['model'], 'cluster-cylinder')
        self.assertEqual(config['kind'], 'cylinder')
        config = ExperimentConfig('tee', {})
        self.assertEqual(config['model'], 'toric')

    def test_invalid(self):
        for experiment, data in (('bogus', {}),
                                 ('tee', {'model': 'bogus'}),
                                 ('tee', {'Lx': 0}),
                                 ('tee', {'seed': -1}),
                                 ('mps-converge', {'solver': []})):
            with self.assertRaises(ConfigError):
                ExperimentConfig(experiment, data)
        config = ExperimentConfig('mps-converge', {})
        with self.assertRaises(ConfigError):
            config['m']
        with self.assertRaises(ConfigError):
            config.require_seed()

    def test_run(self):
        config = ExperimentConfig('renyi-fit', {'seed': 5, 'd_in': 2,
                                                'd_out': 2,
                                                'perimeters': [8, 12, 16],
                                                'alphas': [2]})
        outcome = run(config, threads=1)
        self.assertEqual(outcome.header,
                         ['alpha', 'perimeter', 'entropy', 'residual'])
        self.assertEqual(len(outcome.rows), 3)
        self.assertEqual(outcome.results['fits'][0]['alpha'], 2)

# class ExperimentConfigTestCase


if __name__ == '__main__':
    unittest.main()

# ----- END OF test_cli.py -----
