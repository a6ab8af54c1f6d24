# Copyright 2026, Edge State Entanglement Project
"""
Entanglement spectrum matching test facilities.
"""

import math
import unittest

import numpy as np

from tee.edgestate.error import DomainError
from tee.edgestate.lattice import LatticeGeometry, band_chain, band_region
from tee.edgestate.qla import (DensityOperator, PureStateVector,
                               partial_trace, trace_norm)
from tee.edgestate.specmatch import (
    CutoffSpec, cutoff_spectrum, cylinder_spectrum_match, double_spectrum,
    spectrum_bound_chain, spectrum_l1_distance, spectrum_match_curve)
from tee.edgestate.states import cluster_state, product_state


def random_density(dim, seed):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return DensityOperator(rho / np.trace(rho).real)


class CutoffTestCase(unittest.TestCase):

    def test_keep(self):
        density = CutoffSpec(10., 'density')
        np.testing.assert_allclose(density.keep([.05, .1, .5]), [.1, .5])
        self.assertEqual(density.padding, 0.)
        hamiltonian = CutoffSpec(10.)
        np.testing.assert_allclose(hamiltonian.keep([1., 2., 3.]), [1., 2.])
        self.assertAlmostEqual(hamiltonian.padding, math.log(10.))

    def test_invalid(self):
        for cutoff in (1., .5, 1e12):
            with self.assertRaises(DomainError):
                CutoffSpec(cutoff)
        with self.assertRaises(DomainError):
            CutoffSpec(10., side='energy')

    def test_cutoff_spectrum(self):
        rho = DensityOperator(np.diag([.5, .3, .15, .05]))
        spectrum = cutoff_spectrum(rho, CutoffSpec(10., 'density'))
        np.testing.assert_allclose(spectrum.values, [.15, .3, .5])

# class CutoffTestCase


class SpectrumTestCase(unittest.TestCase):

    def test_double(self):
        np.testing.assert_allclose(double_spectrum(np.array([0., 1.])).values,
                                   [0., 1., 1., 2.])

    def test_l1_distance(self):
        self.assertAlmostEqual(spectrum_l1_distance([3., 1.], [1., 2.]), 1.)
        self.assertAlmostEqual(
            spectrum_l1_distance([1.], [1., 2.], padding=3.), 1.)
        with self.assertRaises(DomainError):
            spectrum_l1_distance([1.], [1., 2.])

    def test_mirsky(self):
        for seed in range(3):
            rho = random_density(8, seed=2 * seed)
            sigma = random_density(8, seed=2 * seed + 1)
            self.assertLessEqual(
                spectrum_l1_distance(rho, sigma),
                trace_norm(rho.matrix - sigma.matrix) + 1e-12)

    def test_mirsky_hermitian(self):
        rng = np.random.default_rng(54)
        for _ in range(200):
            g = rng.normal(size=(2, 8, 8)) + 1j * rng.normal(size=(2, 8, 8))
            a, b = g + np.conj(np.transpose(g, (0, 2, 1)))
            slack = trace_norm(a - b) - spectrum_l1_distance(a, b)
            self.assertGreaterEqual(slack, -1e-12)

# class SpectrumTestCase


class BoundChainTestCase(unittest.TestCase):

    def test_links(self):
        rng = np.random.default_rng(51)
        amplitudes = rng.normal(size=64) + 1j * rng.normal(size=64)
        psi = PureStateVector(amplitudes, normalize=True)
        rho_YYp = partial_trace(psi, [0, 1, 2, 3])
        chain = spectrum_bound_chain(rho_YYp, partial_trace(psi, [0, 1]),
                                     partial_trace(psi, [2, 3]), 50.)
        links = {name: (lhs, rhs) for name, lhs, rhs in chain.links()}
        for name in ('pinsker', 'mirsky'):
            lhs, rhs = links[name]
            self.assertLessEqual(lhs, rhs + 1e-10)
        self.assertEqual(set(chain.to_dict()),
                         {'pinsker', 'mirsky', 'truncation',
                          'log_lipschitz'})

    def test_product(self):
        rho_Y = random_density(4, seed=52)
        rho_Yp = random_density(4, seed=53)
        joint = DensityOperator(np.kron(rho_Y.matrix, rho_Yp.matrix))
        chain = spectrum_bound_chain(joint, rho_Y, rho_Yp, 100.)
        self.assertAlmostEqual(chain.i_yy, 0., places=10)
        self.assertAlmostEqual(chain.hamiltonian_distance, 0., places=8)
        chain.check()

# class BoundChainTestCase


class CylinderMatchTestCase(unittest.TestCase):

    def setUp(self):
        self.geom = LatticeGeometry('cylinder', 4, 4)
        self.psi = cluster_state(self.geom)
        self.Y = [self.geom.site(0, y) for y in range(4)]
        self.X = band_region(self.geom, 1, 2).sorted()
        self.Yp = [self.geom.site(3, y) for y in range(4)]

    # setUp ()

    def test_exact(self):
        match = cylinder_spectrum_match(self.psi, self.Y, self.X, self.Yp,
                                        300.)
        self.assertFalse(match.vacuous)
        self.assertEqual(len(match.lhs_spectrum), 256)
        self.assertEqual(len(match.rhs_spectrum), 256)
        self.assertAlmostEqual(match.l1_distance, 0., places=6)
        self.assertAlmostEqual(match.i_yy, 0., places=10)
        self.assertEqual(match.comparator, 'exact')
        self.assertEqual(match.row(), (300., match.l1_distance,
                                       match.i_yy))

    def test_edge_hamiltonian(self):
        chain = band_chain(self.geom, 1, 2, 4)
        match = cylinder_spectrum_match(self.psi, self.Y, self.X, self.Yp,
                                        300., chain=chain)
        self.assertEqual(match.comparator, 'edge_hamiltonian')
        self.assertAlmostEqual(match.l1_distance, 0., places=6)

    def test_curve(self):
        curve = spectrum_match_curve(self.psi, self.Y, self.X, self.Yp,
                                     [200., 300.], max_workers=2)
        self.assertEqual([m.cutoff for m in curve], [200., 300.])
        self.assertTrue(curve[0].vacuous)
        self.assertFalse(curve[1].vacuous)
        self.assertIn('bound_chain', curve[1].to_dict())

    def test_invalid(self):
        with self.assertRaises(DomainError):
            cylinder_spectrum_match(self.psi.to_density(), self.Y, self.X,
                                    self.Yp, 300.)
        chain = band_chain(self.geom, 1, 1, 4)
        with self.assertRaises(DomainError):
            cylinder_spectrum_match(self.psi, self.Y, self.X, self.Yp, 300.,
                                    chain=chain)

    def test_partition(self):
        with self.assertRaises(DomainError):
            cylinder_spectrum_match(self.psi, self.Y, self.X, self.Yp[:3],
                                    300.)
        with self.assertRaises(DomainError):
            cylinder_spectrum_match(self.psi, self.Y, self.X,
                                    self.Yp + [self.X[0]], 300.)

    def test_asymmetric(self):
        zero = np.array([1., 0.])
        plus = np.array([1., 1.]) / math.sqrt(2.)
        psi = product_state([zero, zero, plus])
        with self.assertRaises(DomainError):
            cylinder_spectrum_match(psi, [0], [1], [2], 10.)

# class CylinderMatchTestCase


class ClusterCylinderTestCase(unittest.TestCase):

    def setUp(self):
        self.geom = LatticeGeometry('cylinder', 4, 3)
        self.psi = cluster_state(self.geom)
        self.Y = [self.geom.site(0, y) for y in range(3)]
        self.X = band_region(self.geom, 1, 2).sorted()
        self.Yp = [self.geom.site(3, y) for y in range(3)]

    # setUp ()

    def test_vacuous(self):
        match = cylinder_spectrum_match(self.psi, self.Y, self.X, self.Yp,
                                        50.)
        # all levels lie at ln 64 > ln 50
        self.assertTrue(match.vacuous)
        self.assertEqual(len(match.lhs_spectrum), 0)
        self.assertEqual(len(match.rhs_spectrum), 0)
        self.assertEqual(match.l1_distance, 0.)
        self.assertAlmostEqual(match.i_yy, 0., places=8)
        for name, lhs, rhs in match.bound_chain.links():
            if name in ('pinsker', 'mirsky'):
                self.assertLessEqual(lhs, rhs + 1e-10)

    def test_omitted_column(self):
        X = [self.geom.site(1, y) for y in range(3)]
        with self.assertRaises(DomainError):
            cylinder_spectrum_match(self.psi, self.Y, X, self.Yp, 50.)

# class ClusterCylinderTestCase


if __name__ == '__main__':
    unittest.main()

# ----- END OF test_specmatch.py -----
